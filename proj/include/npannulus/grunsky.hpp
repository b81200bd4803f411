#ifndef NPANNULUS_GRUNSKY_HPP
#define NPANNULUS_GRUNSKY_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "npannulus/errors.hpp"
#include "npannulus/geometry.hpp"

namespace npannulus {

using ComplexMatrix = Eigen::MatrixXcd;

/// Grunsky coefficients c_{nm}, 1 <= n, m <= order, of an exterior map:
///   F_n(Psi(w)) = w^n + sum_{m>=1} c_{nm} w^{-m}.
class GrunskyTable {
 public:
  GrunskyTable() = default;
  explicit GrunskyTable(ComplexMatrix c) : c_(std::move(c)) {}

  int order() const noexcept { return static_cast<int>(c_.rows()); }

  /// c_{nm} with 1-based indices.
  Complex operator()(int n, int m) const { return c_(n - 1, m - 1); }

  /// Row n-1, column m-1 holds c_{nm}.
  const ComplexMatrix& matrix() const noexcept { return c_; }

 private:
  ComplexMatrix c_;
};

/// Grunsky table from the recursion
///   c_{n,m+1} = c_{n+1,m} - a_{n+m} + sum_{s<n} a_{n-s} c_{sm} - sum_{s<m} a_{m-s} c_{ns}
/// seeded with c_{1m} = a_m and c_{m1} = m a_m.
///
/// Column m+1 needs column m one row deeper, so the working table is a
/// trapezoid: column m is filled for rows 1..2N-m.  The returned table is its
/// N x N corner.
inline GrunskyTable compute_table(const ConformalMap& map, int order) {
  if (order < 1) throw ArgumentError("compute_table: order must be >= 1, got " + std::to_string(order));
  const int n_rows = 2 * order;
  const auto a = map.dense_coefficients(n_rows);
  // work(n, m), 1-based; row 0 and column 0 unused
  ComplexMatrix work = ComplexMatrix::Zero(n_rows + 1, order + 1);
  for (int n = 1; n < n_rows; ++n) work(n, 1) = static_cast<double>(n) * a[n];
  for (int m = 1; m <= order; ++m) work(1, m) = a[m];

  for (int m = 1; m < order; ++m) {
    for (int n = 2; n < n_rows - m; ++n) {
      Complex v = work(n + 1, m) - a[n + m];
      for (int s = 1; s < n; ++s) v += a[n - s] * work(s, m);
      for (int s = 1; s < m; ++s) v -= a[m - s] * work(n, s);
      work(n, m + 1) = v;
    }
  }
  return GrunskyTable(work.block(1, 1, order, order));
}

/// F_n as a monic polynomial in z, plus the negative-power Laurent
/// coefficients of F_n(Psi(w)).
struct FaberPolynomial {
  std::vector<Complex> coefficients;  ///< ascending powers of z, size n+1
  std::vector<Complex> tail;          ///< tail[m-1] = [w^{-m}] F_n(Psi(w)), m = 1..L-n

  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }

  Complex operator()(Complex z) const {
    Complex v{};
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * z + *it;
    return v;
  }
};

/// Faber polynomial F_n by Laurent matching: expand Psi(w)^j (j <= n) to depth L
/// in 1/w and pick the lower coefficients so every w^j, 0 <= j < n, cancels.
inline FaberPolynomial faber_coefficients(const ConformalMap& map, int n, int depth) {
  if (n < 0) throw ArgumentError("faber_coefficients: n must be >= 0");
  if (depth < n) {
    throw ArgumentError("faber_coefficients: truncation depth " + std::to_string(depth) +
                        " is smaller than the degree " + std::to_string(n));
  }
  const auto L = static_cast<std::size_t>(depth);
  // Psi(w)/w = P(u), u = 1/w:  [u^0] = 1, [u^{k+1}] = a_k
  std::vector<Complex> base(L + 1);
  base[0] = 1.0;
  const auto a = map.dense_coefficients(depth);
  for (std::size_t d = 1; d <= L; ++d) base[d] = a[d - 1];

  std::vector<std::vector<Complex>> powers(static_cast<std::size_t>(n) + 1, std::vector<Complex>(L + 1));
  powers[0][0] = 1.0;
  for (std::size_t j = 1; j < powers.size(); ++j) {
    for (std::size_t d = 0; d <= L; ++d) {
      Complex v{};
      for (std::size_t e = 0; e <= d; ++e) v += powers[j - 1][e] * base[d - e];
      powers[j][d] = v;
    }
  }
  // Psi^j = sum_d powers[j][d] w^{j-d}
  FaberPolynomial f;
  f.coefficients.assign(static_cast<std::size_t>(n) + 1, Complex{});
  f.coefficients[static_cast<std::size_t>(n)] = 1.0;
  for (int k = n - 1; k >= 0; --k) {
    Complex v{};
    for (int j = k + 1; j <= n; ++j) v += f.coefficients[j] * powers[j][j - k];
    f.coefficients[k] = -v;
  }
  for (int m = 1; m <= depth - n; ++m) {
    Complex v{};
    for (int j = 0; j <= n; ++j) v += f.coefficients[j] * powers[j][j + m];
    f.tail.push_back(v);
  }
  return f;
}

struct StrongGrunskyReport {
  double radius = 0.0;
  std::vector<double> row_sums;  ///< row_sums[m-1] = sum_n (n/m) |c_{mn}|^2 / radius^{2(m+n)}
  std::vector<int> flagged_rows; ///< 1-based rows exceeding 1 + 1e-9

  double max_row_sum() const {
    double v = 0.0;
    for (double s : row_sums) v = std::max(v, s);
    return v;
  }
  bool ok() const noexcept { return flagged_rows.empty(); }
};

/// Unit-vector specialization of the strong Grunsky inequality, row by row.
inline StrongGrunskyReport check_strong_grunsky(const GrunskyTable& table, double radius) {
  constexpr double kSlack = 1e-9;
  StrongGrunskyReport rep;
  rep.radius = radius;
  const int N = table.order();
  for (int m = 1; m <= N; ++m) {
    double sum = 0.0;
    for (int n = 1; n <= N; ++n) {
      const double scaled = std::abs(table(m, n)) * std::pow(radius, -(m + n));
      sum += static_cast<double>(n) / static_cast<double>(m) * scaled * scaled;
    }
    rep.row_sums.push_back(sum);
    if (!(sum <= 1.0 + kSlack)) rep.flagged_rows.push_back(m);
  }
  return rep;
}

/// Smallest rho with |g_{mn}| <= sqrt(m) rho^{m+n} over the given table
/// (row index m).  Zero for an all-zero table.
inline double fit_decay_rho(const ComplexMatrix& g) {
  if (g.size() == 0) throw ArgumentError("fit_decay_rho: empty table");
  double rho = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double mag = std::abs(g(i, j));
      if (mag == 0.0) continue;
      const double m = static_cast<double>(i + 1);
      const double n = static_cast<double>(j + 1);
      rho = std::max(rho, std::pow(mag / std::sqrt(m), 1.0 / (m + n)));
    }
  }
  if (!(rho < 1.0)) {
    throw DecayError("fit_decay_rho: scaled Grunsky coefficients do not decay (rho = " + std::to_string(rho) +
                     "); r_i is probably inside the univalence radius");
  }
  return rho;
}

/// g_{mn} = c_{mn} / r_i^{m+n} together with its fitted decay rate.
struct ScaledGrunskyTable {
  GrunskyTable base;
  double r_inner = 0.0;
  ComplexMatrix g;
  double rho_fit = 0.0;

  int order() const noexcept { return base.order(); }
};

inline ScaledGrunskyTable scale_table(GrunskyTable table, double r_inner) {
  if (!(r_inner > 0.0)) throw ArgumentError("scale_table: r_i must be positive");
  ScaledGrunskyTable s;
  const int N = table.order();
  s.g.resize(N, N);
  for (int m = 1; m <= N; ++m) {
    for (int n = 1; n <= N; ++n) s.g(m - 1, n - 1) = table(m, n) * std::pow(r_inner, -(m + n));
  }
  s.base = std::move(table);
  s.r_inner = r_inner;
  s.rho_fit = fit_decay_rho(s.g);
  return s;
}

}  // namespace npannulus

#endif  // NPANNULUS_GRUNSKY_HPP
