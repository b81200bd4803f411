#ifndef NPANNULUS_NYSTROM_HPP
#define NPANNULUS_NYSTROM_HPP

// Boundary-integral discretization of the annulus NP operator, independent of
// the Grunsky machinery.  Kernel (1/2pi) <x - y, nu_x> / |x - y|^2 with the
// periodic trapezoidal rule on each curve.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "npannulus/errors.hpp"
#include "npannulus/geometry.hpp"
#include "npannulus/spectral.hpp"

namespace npannulus {

/// Nodes of one curve with trapezoidal weights speed * 2pi / n.
struct CurveQuadrature {
  std::vector<CurveSample> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  double length() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
  }
  double max_spacing() const {
    double h = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      h = std::max(h, std::abs(nodes[(k + 1) % nodes.size()].point - nodes[k].point));
    }
    return h;
  }
};

struct QuadratureGrid {
  CurveQuadrature inner;
  CurveQuadrature outer;
};

inline CurveQuadrature curve_quadrature(const AnnulusGeometry& geom, Curve which, std::size_t n) {
  CurveQuadrature q;
  q.nodes = sample_curve(geom, which, n);
  q.weights.reserve(n);
  for (const auto& s : q.nodes) q.weights.push_back(s.speed * kTwoPi / static_cast<double>(n));
  return q;
}

inline QuadratureGrid quadrature_grid(const AnnulusGeometry& geom, std::size_t n) {
  return {curve_quadrature(geom, Curve::inner, n), curve_quadrature(geom, Curve::outer, n)};
}

/// Plain Nystrom block A(j, k) = kernel(x_j, y_k) w_k for targets on one curve
/// and sources on another (or the same) curve.  On the same curve the diagonal
/// takes the smooth limit curvature / (4 pi).
inline Eigen::MatrixXd np_kernel_block(const CurveQuadrature& targets, const CurveQuadrature& sources,
                                       bool same_curve) {
  const auto nt = static_cast<Eigen::Index>(targets.size());
  const auto ns = static_cast<Eigen::Index>(sources.size());
  Eigen::MatrixXd A(nt, ns);
  constexpr double inv_2pi = 0.5 * std::numbers::inv_pi;
  for (Eigen::Index j = 0; j < nt; ++j) {
    const auto& x = targets.nodes[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < ns; ++k) {
      double kernel;
      if (same_curve && j == k) {
        kernel = 0.5 * inv_2pi * x.curvature;
      } else {
        const Complex d = x.point - sources.nodes[static_cast<std::size_t>(k)].point;
        kernel = inv_2pi * (d.real() * x.normal.real() + d.imag() * x.normal.imag()) / std::norm(d);
      }
      A(j, k) = kernel * sources.weights[static_cast<std::size_t>(k)];
    }
  }
  return A;
}

struct OracleMatrix {
  Eigen::MatrixXd entries;  ///< 2 n_q x 2 n_q, inner nodes first
  double min_curve_distance = 0.0;
  double max_node_spacing = 0.0;
  std::vector<std::string> warnings;
};

/// Nystrom matrix of the block operator
///   [ -K*_i            -dS_e/dnu_i ]
///   [ dS_i/dnu_e         K*_e      ]
/// in the weight-symmetric form W^{1/2} A W^{-1/2}.
inline OracleMatrix assemble_oracle(const AnnulusGeometry& geom, std::size_t n_q) {
  if (n_q < 16 || n_q % 2 != 0) {
    throw ArgumentError("assemble_oracle: n_q must be even and >= 16, got " + std::to_string(n_q));
  }
  const auto grid = quadrature_grid(geom, n_q);
  const auto n = static_cast<Eigen::Index>(n_q);
  OracleMatrix out;
  out.entries.resize(2 * n, 2 * n);
  out.entries.topLeftCorner(n, n) = -np_kernel_block(grid.inner, grid.inner, true);
  out.entries.topRightCorner(n, n) = -np_kernel_block(grid.inner, grid.outer, false);
  out.entries.bottomLeftCorner(n, n) = np_kernel_block(grid.outer, grid.inner, false);
  out.entries.bottomRightCorner(n, n) = np_kernel_block(grid.outer, grid.outer, true);

  Eigen::VectorXd sqrt_w(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sqrt_w(k) = std::sqrt(grid.inner.weights[static_cast<std::size_t>(k)]);
    sqrt_w(n + k) = std::sqrt(grid.outer.weights[static_cast<std::size_t>(k)]);
  }
  out.entries = sqrt_w.asDiagonal() * out.entries * sqrt_w.cwiseInverse().asDiagonal();

  double dmin = std::numeric_limits<double>::infinity();
  for (const auto& a : grid.inner.nodes) {
    for (const auto& b : grid.outer.nodes) dmin = std::min(dmin, std::abs(a.point - b.point));
  }
  out.min_curve_distance = dmin;
  out.max_node_spacing = std::max(grid.inner.max_spacing(), grid.outer.max_spacing());
  if (dmin < 2.0 * out.max_node_spacing) {
    out.warnings.push_back("curves are " + std::to_string(dmin) + " apart, less than twice the node spacing " +
                           std::to_string(out.max_node_spacing) + "; increase n_q");
  }
  return out;
}

inline SpectrumReport oracle_spectrum(const AnnulusGeometry& geom, std::size_t n_q,
                                      double imag_tol = kDefaultImagTol) {
  auto rep = realize(eigenvalues(assemble_oracle(geom, n_q).entries), imag_tol);
  rep.ratio = geom.ratio();
  return rep;
}

/// The k values of largest modulus, sorted descending by value.  Ties in
/// modulus are broken towards the positive value.
inline std::vector<double> largest_magnitude(std::vector<double> values, std::size_t k) {
  std::sort(values.begin(), values.end(), [](double a, double b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a > b;
  });
  values.resize(std::min(k, values.size()));
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

/// Largest distance from each of the k largest-|value| entries of either list
/// to the nearest entry of the other list.  Insensitive to how ties in modulus
/// at the cut-off fall.
inline double matched_gap(const std::vector<double>& a, const std::vector<double>& b, std::size_t k) {
  auto one_way = [k](const std::vector<double>& from, const std::vector<double>& to) {
    double worst = 0.0;
    for (double x : largest_magnitude(from, k)) {
      double d = std::numeric_limits<double>::infinity();
      for (double y : to) d = std::min(d, std::abs(x - y));
      worst = std::max(worst, d);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

}  // namespace npannulus

#endif  // NPANNULUS_NYSTROM_HPP
