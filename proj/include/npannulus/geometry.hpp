#ifndef NPANNULUS_GEOMETRY_HPP
#define NPANNULUS_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "npannulus/errors.hpp"

namespace npannulus {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Exterior conformal map  Psi(w) = w + a0 + sum_k a_k w^{-k}  with finitely
/// many nonzero tail coefficients.
class ConformalMap {
 public:
  struct Term {
    int k;
    Complex a;
  };

  ConformalMap() = default;

  ConformalMap(Complex a0, std::vector<Term> terms) : a0_(a0), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].k < 1) {
        throw ArgumentError("conformal map: coefficient index must be >= 1, got " +
                            std::to_string(terms_[i].k));
      }
      if (i > 0 && terms_[i].k == terms_[i - 1].k) {
        throw ArgumentError("conformal map: duplicate coefficient index " +
                            std::to_string(terms_[i].k));
      }
    }
  }

  static ConformalMap identity() { return {}; }

  Complex a0() const noexcept { return a0_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// a_k for k >= 1; zero when not listed.
  Complex coefficient(int k) const noexcept {
    for (const auto& t : terms_) {
      if (t.k == k) return t.a;
      if (t.k > k) break;
    }
    return {};
  }

  /// Largest listed index (0 for a map without tail terms).
  int max_index() const noexcept { return terms_.empty() ? 0 : terms_.back().k; }

  /// dense a_1..a_n (index 0 holds a_0), zero-padded
  std::vector<Complex> dense_coefficients(int n) const {
    std::vector<Complex> a(static_cast<std::size_t>(std::max(n, 0)) + 1);
    a[0] = a0_;
    for (const auto& t : terms_) {
      if (t.k <= n) a[static_cast<std::size_t>(t.k)] = t.a;
    }
    return a;
  }

 private:
  Complex a0_{};
  std::vector<Term> terms_;
};

/// The two level circles |w| = r_i < |w| = r_e and their images under the map.
struct AnnulusGeometry {
  ConformalMap map;
  double r_inner = 0.0;
  double r_outer = 0.0;

  AnnulusGeometry() = default;
  AnnulusGeometry(ConformalMap m, double ri, double re) : map(std::move(m)), r_inner(ri), r_outer(re) {
    if (!(ri > 0.0) || !(re > ri) || !std::isfinite(re)) {
      throw ArgumentError("annulus geometry requires 0 < r_i < r_e, got r_i=" + std::to_string(ri) +
                          ", r_e=" + std::to_string(re));
    }
  }

  double ratio() const noexcept { return r_inner / r_outer; }
  double rho_inner() const noexcept { return std::log(r_inner); }
  double rho_outer() const noexcept { return std::log(r_outer); }
};

enum class Curve { inner, outer };

inline const char* to_string(Curve c) noexcept { return c == Curve::inner ? "inner" : "outer"; }

namespace detail {

inline void require_nonzero(Complex w, const char* what) {
  if (w == Complex{}) throw DomainError(std::string(what) + ": the map is singular at w = 0");
}

}  // namespace detail

/// Psi(w).
inline Complex eval_map(const ConformalMap& map, Complex w) {
  detail::require_nonzero(w, "eval_map");
  const Complex inv = 1.0 / w;
  Complex tail{};
  Complex power = 1.0;
  int k = 0;
  for (const auto& t : map.terms()) {
    while (k < t.k) {
      power *= inv;
      ++k;
    }
    tail += t.a * power;
  }
  return w + map.a0() + tail;
}

struct MapDerivatives {
  Complex first;
  Complex second;
};

/// Psi'(w) and Psi''(w), differentiated term by term.
inline MapDerivatives eval_derivatives(const ConformalMap& map, Complex w) {
  detail::require_nonzero(w, "eval_derivatives");
  const Complex inv = 1.0 / w;
  Complex d1 = 1.0;
  Complex d2{};
  Complex power = inv;  // w^{-(k+1)}
  int k = 0;
  for (const auto& t : map.terms()) {
    while (k < t.k) {
      power *= inv;
      ++k;
    }
    // power == w^{-(k+1)}
    d1 -= static_cast<double>(t.k) * t.a * power;
    d2 += static_cast<double>(t.k) * static_cast<double>(t.k + 1) * t.a * power * inv;
  }
  return {d1, d2};
}

/// h(rho, theta) = e^rho |Psi'(e^{rho + i theta})|.
inline double jacobian_h(const AnnulusGeometry& geom, double rho, double theta) {
  const double radius = std::exp(rho);
  if (radius < geom.r_inner * (1.0 - 1e-12)) {
    throw ArgumentError("jacobian_h: e^rho = " + std::to_string(radius) + " lies inside r_i = " +
                        std::to_string(geom.r_inner));
  }
  const Complex w = std::polar(radius, theta);
  const double h = radius * std::abs(eval_derivatives(geom.map, w).first);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw GeometryError("jacobian_h: vanishing Jacobian at rho=" + std::to_string(rho) +
                        ", theta=" + std::to_string(theta) + " (map not univalent there)");
  }
  return h;
}

struct CurveSample {
  Complex point;
  Complex tangent;  ///< unit, counterclockwise
  Complex normal;   ///< unit, pointing away from the enclosed region
  double speed = 0.0;      ///< |d gamma / d theta|
  double curvature = 0.0;  ///< positive for a convex counterclockwise curve
};

/// Node theta_j = 2 pi j / n.  Written so that grids of size n and 2n share
/// bit-identical nodes.
inline double grid_angle(std::size_t j, std::size_t n) noexcept {
  return (kTwoPi * static_cast<double>(j)) / static_cast<double>(n);
}

inline CurveSample sample_point(const ConformalMap& map, double radius, double theta) {
  const Complex w = std::polar(radius, theta);
  const auto d = eval_derivatives(map, w);
  // gamma(theta) = Psi(r e^{i theta})
  const Complex g1 = Complex(0.0, 1.0) * w * d.first;
  const Complex g2 = -(w * d.first + w * w * d.second);
  const double speed = std::abs(g1);
  CurveSample s;
  s.point = eval_map(map, w);
  s.speed = speed;
  if (!(speed > 0.0) || !std::isfinite(speed)) return s;
  s.tangent = g1 / speed;
  s.normal = Complex(0.0, -1.0) * s.tangent;
  s.curvature = (std::conj(g1) * g2).imag() / (speed * speed * speed);
  return s;
}

/// Equispaced samples of the inner or outer boundary curve.
inline std::vector<CurveSample> sample_curve(const AnnulusGeometry& geom, Curve which, std::size_t n_points) {
  if (n_points < 4) throw ArgumentError("sample_curve: need at least 4 points");
  const double radius = which == Curve::inner ? geom.r_inner : geom.r_outer;
  std::vector<CurveSample> out;
  out.reserve(n_points);
  for (std::size_t j = 0; j < n_points; ++j) {
    auto s = sample_point(geom.map, radius, grid_angle(j, n_points));
    if (!(s.speed > 0.0) || !std::isfinite(s.speed)) {
      throw GeometryError(std::string("sample_curve: zero speed on the ") + to_string(which) +
                          " curve at node " + std::to_string(j));
    }
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline double cross(Complex a, Complex b) noexcept { return a.real() * b.imag() - a.imag() * b.real(); }

inline bool segments_cross(Complex p1, Complex p2, Complex q1, Complex q2) noexcept {
  const double d1 = cross(p2 - p1, q1 - p1);
  const double d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1);
  const double d4 = cross(q2 - q1, p2 - q1);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

/// Brute-force scan of a closed polygon for crossings between non-adjacent edges.
inline bool polygon_self_intersects(const std::vector<Complex>& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = p[i], b = p[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_cross(a, b, p[j], p[(j + 1) % n])) return true;
    }
  }
  return false;
}

inline bool polygons_cross(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (segments_cross(p[i], p[(i + 1) % p.size()], q[j], q[(j + 1) % q.size()])) return true;
    }
  }
  return false;
}

inline double signed_area(const std::vector<Complex>& p) {
  double a = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) a += cross(p[i], p[(i + 1) % p.size()]);
  return 0.5 * a;
}

/// Winding number of a closed polygon around a point.
inline int winding_number(const std::vector<Complex>& poly, Complex z) {
  double total = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    total += std::arg((poly[(i + 1) % poly.size()] - z) / (poly[i] - z));
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace detail

struct GeometryReport {
  double min_abs_derivative_inner = 0.0;
  double min_abs_derivative_outer = 0.0;
  /// Zeros of Psi' in |w| > r_i, counted by the argument principle on |w| = r_i.
  int derivative_zeros_outside_inner = 0;
  bool inner_self_intersects = false;
  bool outer_self_intersects = false;
  bool inner_counterclockwise = true;
  bool outer_counterclockwise = true;
  bool curves_cross = false;
  bool inner_inside_outer = true;

  bool ok() const noexcept {
    return min_abs_derivative_inner > 0.0 && min_abs_derivative_outer > 0.0 &&
           derivative_zeros_outside_inner == 0 && !inner_self_intersects && !outer_self_intersects &&
           inner_counterclockwise && outer_counterclockwise && !curves_cross && inner_inside_outer;
  }
};

/// Heuristic univalence diagnostics on the two level curves.  Never throws for
/// geometric reasons; callers decide what to do with the report.
inline GeometryReport validate_geometry(const AnnulusGeometry& geom, std::size_t n_probe) {
  n_probe = std::max<std::size_t>(n_probe, 8);
  GeometryReport rep;
  std::vector<Complex> inner(n_probe), outer(n_probe), dpsi(n_probe);
  rep.min_abs_derivative_inner = std::numeric_limits<double>::infinity();
  rep.min_abs_derivative_outer = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n_probe; ++j) {
    const double t = grid_angle(j, n_probe);
    const Complex wi = std::polar(geom.r_inner, t);
    const Complex we = std::polar(geom.r_outer, t);
    inner[j] = eval_map(geom.map, wi);
    outer[j] = eval_map(geom.map, we);
    dpsi[j] = eval_derivatives(geom.map, wi).first;
    rep.min_abs_derivative_inner = std::min(rep.min_abs_derivative_inner, std::abs(dpsi[j]));
    rep.min_abs_derivative_outer =
        std::min(rep.min_abs_derivative_outer, std::abs(eval_derivatives(geom.map, we).first));
  }
  // Psi' -> 1 at infinity and is analytic outside the circle, so the number of
  // zeros there is minus the counterclockwise winding of Psi' around 0.
  if (rep.min_abs_derivative_inner > 0.0) {
    double total = 0.0;
    for (std::size_t j = 0; j < n_probe; ++j) total += std::arg(dpsi[(j + 1) % n_probe] / dpsi[j]);
    rep.derivative_zeros_outside_inner = -static_cast<int>(std::lround(total / kTwoPi));
  }
  rep.inner_self_intersects = detail::polygon_self_intersects(inner);
  rep.outer_self_intersects = detail::polygon_self_intersects(outer);
  rep.inner_counterclockwise = detail::signed_area(inner) > 0.0;
  rep.outer_counterclockwise = detail::signed_area(outer) > 0.0;
  rep.curves_cross = detail::polygons_cross(inner, outer);
  for (const auto& z : inner) {
    if (detail::winding_number(outer, z) != 1) {
      rep.inner_inside_outer = false;
      break;
    }
  }
  return rep;
}

}  // namespace npannulus

#endif  // NPANNULUS_GEOMETRY_HPP
