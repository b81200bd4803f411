#ifndef NPANNULUS_GERSHGORIN_HPP
#define NPANNULUS_GERSHGORIN_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "npannulus/errors.hpp"
#include "npannulus/geometry.hpp"
#include "npannulus/grunsky.hpp"
#include "npannulus/np_assembly.hpp"

namespace npannulus {

inline constexpr double kDefaultTailTol = 1e-14;

struct Disk {
  Complex center;
  double radius = 0.0;
};

/// B(m, r): center r^{2m}/4 and radius sqrt(m) rho^m (1 - r^2) M(m, r), with M
/// the largest of the four row/column majorants.
struct AnalyticDisk {
  int m = 0;
  double center = 0.0;
  double radius = 0.0;
  double m1_row = 0.0;
  double m1_col = 0.0;
  double m2_row = 0.0;
  double m2_col = 0.0;

  double majorant() const noexcept { return std::max({m1_row, m1_col, m2_row, m2_col}); }
  Disk disk() const noexcept { return {center, radius}; }
};

namespace detail {

inline constexpr int kMaxSeriesTerms = 50'000'000;

/// Partial sum of sum_{n=1}^{terms} sqrt(n) rho^n.
inline double sqrt_geometric_partial(double rho, int terms) {
  double s = 0.0;
  double p = 1.0;
  for (int n = 1; n <= terms; ++n) {
    p *= rho;
    s += std::sqrt(static_cast<double>(n)) * p;
  }
  return s;
}

/// Tail majorant for sum_{n > K} sqrt(n) x^n: the ratio of consecutive terms
/// past K is at most x sqrt((K+2)/(K+1)).  Infinite when that ratio is >= 1.
inline double sqrt_geometric_tail(double x, int K) {
  const double q = x * std::sqrt((K + 2.0) / (K + 1.0));
  if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
  return std::sqrt(K + 1.0) * std::pow(x, K + 1) / (1.0 - q);
}

struct SeriesValue {
  double value = 0.0;  ///< partial sum plus tail majorant (an upper bound)
  int terms = 0;
};

/// sum_{n>=1} sqrt(n) rho^n, summed until the tail majorant drops below tol.
inline SeriesValue sqrt_geometric_series(double rho, double tol) {
  if (rho == 0.0) return {0.0, 0};
  double s = 0.0;
  double p = 1.0;
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    p *= rho;
    s += std::sqrt(static_cast<double>(n)) * p;
    const double tail = sqrt_geometric_tail(rho, n);
    if (tail < tol) return {s + tail, n};
  }
  throw ArgumentError("sqrt_geometric_series: no convergence for rho = " + std::to_string(rho));
}

/// Q = sum_{k>=1} rho^k (1 - r^{2k}) in closed form.
inline double weighted_geometric(double r, double rho) {
  const double r2 = r * r;
  return rho * (1.0 - r2) / ((1.0 - rho) * (1.0 - rho * r2));
}

/// M2_row: 1/4 sum_n rho^n (1-r^{2n})/(1-r^2) (r^{2n} + sqrt(n) rho^n Q), up to
/// `terms` terms (or until the tail majorant is below tol when terms < 0).
inline SeriesValue m2_row_series(double r, double rho, double tol, int terms = -1) {
  if (rho == 0.0) return {0.0, 0};
  const double r2 = r * r;
  const double Q = weighted_geometric(r, rho);
  double s = 0.0;
  double p = 1.0;
  double r2n = 1.0;
  const int limit = terms < 0 ? kMaxSeriesTerms : terms;
  for (int n = 1; n <= limit; ++n) {
    p *= rho;
    r2n *= r2;
    s += p * ((1.0 - r2n) / (1.0 - r2)) * (r2n + std::sqrt(static_cast<double>(n)) * p * Q);
    if (terms < 0) {
      // (1-r^{2k})/(1-r^2) <= 1/(1-r^2) and r^{2k} <= r^{2(n+1)} for k > n
      const double tail = (r2n * r2 * p * rho / (1.0 - rho) + Q * sqrt_geometric_tail(rho * rho, n)) / (1.0 - r2);
      if (0.25 * tail < tol) return {0.25 * (s + tail), n};
    }
  }
  if (terms >= 0) return {0.25 * s, terms};
  throw ArgumentError("m2_row_series: no convergence for rho = " + std::to_string(rho));
}

}  // namespace detail

/// Disks B(1, r) .. B(M_max, r) from the closed-form and summed majorants.
inline std::vector<AnalyticDisk> analytic_disks(double r, double rho, int m_max, double tail_tol = kDefaultTailTol) {
  if (!(r > 0.0 && r < 1.0)) throw ArgumentError("analytic_disks: r must lie in (0, 1)");
  if (!(rho >= 0.0 && rho < 1.0)) throw ArgumentError("analytic_disks: rho must lie in [0, 1)");
  if (!(tail_tol > 0.0)) throw ArgumentError("analytic_disks: tail_tol must be positive");
  const double r2 = r * r;
  const double m1_row = rho / (4.0 * (1.0 - rho) * (1.0 - rho * r2));
  const double sqrt_sum = detail::sqrt_geometric_series(rho, tail_tol).value;
  const double m2_row = detail::m2_row_series(r, rho, tail_tol).value;
  const double Q = detail::weighted_geometric(r, rho);

  std::vector<AnalyticDisk> disks;
  disks.reserve(static_cast<std::size_t>(std::max(m_max, 0)));
  for (int m = 1; m <= m_max; ++m) {
    const double sm = std::sqrt(static_cast<double>(m));
    const double r2m = std::pow(r, 2 * m);
    const double rhom = std::pow(rho, m);
    const double growth = (1.0 - r2m) / (1.0 - r2);  // 1 + r^2 + ... + r^{2(m-1)}
    AnalyticDisk d;
    d.m = m;
    d.center = 0.25 * r2m;
    d.m1_row = m1_row;
    d.m1_col = growth * r2m * sqrt_sum / (4.0 * sm);
    d.m2_row = m2_row;
    d.m2_col = 0.25 * growth * sqrt_sum * (1.0 / sm + rhom * Q);
    d.radius = sm * rhom * (1.0 - r2) * d.majorant();
    disks.push_back(d);
  }
  return disks;
}

/// Interval [0, r^{2(M+1)}/4 + R(M+1, r)] covering every disk beyond M_max
/// (centers accumulate at 0 and radii decay).
inline std::pair<double, double> analytic_tail_interval(double r, double rho, int m_max,
                                                        double tail_tol = kDefaultTailTol) {
  const auto next = analytic_disks(r, rho, m_max + 1, tail_tol).back();
  return {0.0, next.center + next.radius};
}

struct EntryDisk {
  int row = 0;  ///< 0-based row of B
  Complex center;
  double radius = 0.0;

  Disk disk() const noexcept { return {center, radius}; }
};

/// Gershgorin disks of a finite matrix with radius max(row sum, column sum) of
/// off-diagonal moduli.
inline std::vector<EntryDisk> entry_disks(const ComplexMatrix& b) {
  if (b.rows() != b.cols()) throw ArgumentError("entry_disks: matrix is not square");
  const Eigen::MatrixXd mag = b.cwiseAbs();
  std::vector<EntryDisk> out;
  out.reserve(static_cast<std::size_t>(b.rows()));
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    double row = 0.0, col = 0.0;
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (j == i) continue;
      row += mag(i, j);
      col += mag(j, i);
    }
    out.push_back({static_cast<int>(i), b(i, i), std::max(row, col)});
  }
  return out;
}

struct ContainmentEntry {
  Complex value;
  int nearest = -1;  ///< index of the best covering set; -1 for the tail interval
  double margin = 0.0;  ///< >= 0 inside, minus the distance when outside
};

struct ContainmentReport {
  std::vector<ContainmentEntry> entries;
  std::vector<std::size_t> violations;
  double worst_margin = std::numeric_limits<double>::infinity();

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks that every value lies in the union of the disks (and the optional
/// real interval), within 1e-10.
inline ContainmentReport check_containment(const std::vector<Complex>& values, const std::vector<Disk>& disks,
                                           std::optional<std::pair<double, double>> interval = std::nullopt) {
  constexpr double kTol = 1e-10;
  ContainmentReport rep;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Complex mu = values[i];
    ContainmentEntry e{mu, -1, -std::numeric_limits<double>::infinity()};
    for (std::size_t k = 0; k < disks.size(); ++k) {
      const double margin = disks[k].radius - std::abs(mu - disks[k].center);
      if (margin > e.margin) {
        e.margin = margin;
        e.nearest = static_cast<int>(k);
      }
    }
    if (interval) {
      const auto [lo, hi] = *interval;
      const double x = mu.real();
      double margin;
      if (x >= lo && x <= hi) {
        margin = std::abs(mu.imag()) > 0.0 ? -std::abs(mu.imag()) : std::min(x - lo, hi - x);
      } else {
        const double dx = x < lo ? lo - x : x - hi;
        margin = -std::hypot(dx, mu.imag());
      }
      if (margin > e.margin) {
        e.margin = margin;
        e.nearest = -1;
      }
    }
    rep.worst_margin = std::min(rep.worst_margin, e.margin);
    if (e.margin < -kTol) rep.violations.push_back(i);
    rep.entries.push_back(e);
  }
  return rep;
}

inline ContainmentReport check_containment(const std::vector<double>& values, const std::vector<Disk>& disks,
                                           std::optional<std::pair<double, double>> interval = std::nullopt) {
  return check_containment(std::vector<Complex>(values.begin(), values.end()), disks, interval);
}

struct DisjointnessResult {
  std::optional<int> m0;
  std::string reason;  ///< why m0 is absent
};

/// Smallest m0 such that every computed disk B(m, r), m >= m0, is disjoint from
/// all other computed disks.  Only attempted when r^2 > (1 + rho)/2.
inline DisjointnessResult disjointness_threshold(double r, double rho, const std::vector<AnalyticDisk>& disks) {
  const double r_min = std::sqrt((1.0 + rho) / 2.0);
  if (!(r > r_min)) {
    return {std::nullopt, "ratio r = " + std::to_string(r) + " does not exceed sqrt((1+rho)/2) = " +
                              std::to_string(r_min) + " for rho = " + std::to_string(rho)};
  }
  if (disks.empty()) return {std::nullopt, "no disks"};
  auto overlap = [&](std::size_t a, std::size_t b) {
    return std::abs(disks[a].center - disks[b].center) <= disks[a].radius + disks[b].radius;
  };
  const std::size_t n = disks.size();
  std::vector<bool> touches(n, false);
  // consecutive pairs first, then every pair
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (overlap(k, k + 1)) touches[k] = touches[k + 1] = true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 2; b < n; ++b) {
      if (overlap(a, b)) touches[a] = touches[b] = true;
    }
  }
  std::size_t last_bad = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (touches[k]) last_bad = k;
  }
  if (last_bad == n) return {disks.front().m, {}};
  if (last_bad + 1 == n) return {std::nullopt, "the last computed disk still overlaps another; increase M_max"};
  return {disks[last_bad + 1].m, {}};
}

}  // namespace npannulus

#endif  // NPANNULUS_GERSHGORIN_HPP
