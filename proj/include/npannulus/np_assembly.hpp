#ifndef NPANNULUS_NP_ASSEMBLY_HPP
#define NPANNULUS_NP_ASSEMBLY_HPP

#include <cmath>
#include <cstdlib>
#include <string>

#include "npannulus/geometry.hpp"
#include "npannulus/grunsky.hpp"

namespace npannulus {

/// Flat index of Fourier mode n on a curve in the truncated NP matrix.  The
/// inner curve's modes -N..N come first, then the outer curve's.
inline int mode_index(int n, Curve curve, int order) {
  if (order < 0 || std::abs(n) > order) {
    throw ArgumentError("mode_index: |n| = " + std::to_string(std::abs(n)) + " exceeds truncation order " +
                        std::to_string(order));
  }
  return (curve == Curve::outer ? 2 * order + 1 : 0) + n + order;
}

/// Truncated matrix of the adjoint NP operator of the distorted annulus in the
/// density basis e^{in theta}/h on each curve.  Size 2(2N+1).
struct NPBlockMatrix {
  int order = 0;
  ComplexMatrix entries;

  int size() const noexcept { return static_cast<int>(entries.rows()); }
  Complex at(int row_mode, Curve row_curve, int col_mode, Curve col_curve) const {
    return entries(mode_index(row_mode, row_curve, order), mode_index(col_mode, col_curve, order));
  }
};

namespace detail {

/// Entry of the Z x Z matrix with the Grunsky table in its off-diagonal
/// quadrants:  (row -m, col n) = c_{mn},  (row m, col -n) = conj(c_{mn}),
/// (0, 0) = 1.
inline Complex grunsky_operator_entry(const GrunskyTable& table, int row, int col) {
  if (row == 0 && col == 0) return 1.0;
  if (row < 0 && col > 0) return table(-row, col);
  if (row > 0 && col < 0) return std::conj(table(row, -col));
  return {};
}

}  // namespace detail

/// Assembles
///   1/2 [ -Ri^-1 C Ri^-1          Ri Re^-1 - Ri^-1 C Re^-1 ]
///       [ Ri Re^-1 + Re^-1 C Ri^-1          Re^-1 C Re^-1  ]
/// with R_alpha = diag(r_alpha^{|n|}) and C the Grunsky operator above.
inline NPBlockMatrix build_np_matrix(const AnnulusGeometry& geom, const GrunskyTable& table, int order) {
  if (order < 0) throw ArgumentError("build_np_matrix: order must be >= 0");
  if (order > table.order()) {
    throw ArgumentError("build_np_matrix: order " + std::to_string(order) + " exceeds the Grunsky table order " +
                        std::to_string(table.order()));
  }
  const int size = 2 * (2 * order + 1);
  NPBlockMatrix K;
  K.order = order;
  K.entries = ComplexMatrix::Zero(size, size);
  const double ri = geom.r_inner;
  const double re = geom.r_outer;
  const double r = geom.ratio();
  for (int p = -order; p <= order; ++p) {
    const int ip = mode_index(p, Curve::inner, order);
    const int ep = mode_index(p, Curve::outer, order);
    const double rp_i = std::pow(ri, -std::abs(p));
    const double rp_e = std::pow(re, -std::abs(p));
    for (int q = -order; q <= order; ++q) {
      const Complex c = detail::grunsky_operator_entry(table, p, q);
      if (c == Complex{}) continue;
      const int iq = mode_index(q, Curve::inner, order);
      const int eq = mode_index(q, Curve::outer, order);
      const double rq_i = std::pow(ri, -std::abs(q));
      const double rq_e = std::pow(re, -std::abs(q));
      K.entries(ip, iq) = -0.5 * c * rp_i * rq_i;
      K.entries(ip, eq) = -0.5 * c * rp_i * rq_e;
      K.entries(ep, iq) = 0.5 * c * rp_e * rq_i;
      K.entries(ep, eq) = 0.5 * c * rp_e * rq_e;
    }
    const double rn = 0.5 * std::pow(r, std::abs(p));
    K.entries(ip, ep) += rn;
    K.entries(ep, ip) += rn;
  }
  return K;
}

/// Half-size matrix whose eigenvalues are the squares of the NP eigenvalues
/// inside (-1/2, 1/2).  With D = diag(r^{2m}):
///   1/4 [ D                 -G (I-D)            ]
///       [ -conj(G) (I-D) D   D + conj(G)(I-D)G(I-D) ]
struct ReducedMatrixB {
  int order = 0;
  ComplexMatrix entries;

  int size() const noexcept { return static_cast<int>(entries.rows()); }
};

inline ReducedMatrixB build_reduced_b(const AnnulusGeometry& geom, const ScaledGrunskyTable& scaled, int order) {
  if (order < 1) throw ArgumentError("build_reduced_b: order must be >= 1");
  if (order > scaled.order()) {
    throw ArgumentError("build_reduced_b: order " + std::to_string(order) + " exceeds the Grunsky table order " +
                        std::to_string(scaled.order()));
  }
  const int N = order;
  const double r = geom.ratio();
  Eigen::VectorXd d(N);
  for (int m = 1; m <= N; ++m) d(m - 1) = std::pow(r, 2 * m);
  const ComplexMatrix G = scaled.g.topLeftCorner(N, N);
  const ComplexMatrix Gbar = G.conjugate();
  const Eigen::VectorXd one_minus_d = Eigen::VectorXd::Ones(N) - d;

  const ComplexMatrix G_imd = G * one_minus_d.asDiagonal();        // G (I-D)
  const ComplexMatrix Gbar_imd = Gbar * one_minus_d.asDiagonal();  // conj(G) (I-D)

  ReducedMatrixB B;
  B.order = N;
  B.entries = ComplexMatrix::Zero(2 * N, 2 * N);
  B.entries.topLeftCorner(N, N).diagonal() = d.cast<Complex>();
  B.entries.topRightCorner(N, N) = -G_imd;
  B.entries.bottomLeftCorner(N, N) = -(Gbar_imd * d.asDiagonal());
  B.entries.bottomRightCorner(N, N) = Gbar_imd * G_imd;
  B.entries.bottomRightCorner(N, N).diagonal() += d.cast<Complex>();
  B.entries *= 0.25;
  return B;
}

}  // namespace npannulus

#endif  // NPANNULUS_NP_ASSEMBLY_HPP
