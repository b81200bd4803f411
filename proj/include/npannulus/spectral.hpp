#ifndef NPANNULUS_SPECTRAL_HPP
#define NPANNULUS_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "npannulus/errors.hpp"
#include "npannulus/geometry.hpp"
#include "npannulus/grunsky.hpp"
#include "npannulus/np_assembly.hpp"

extern "C" {
void zgeev_(const char* jobvl, const char* jobvr, const int* n, std::complex<double>* a, const int* lda,
            std::complex<double>* w, std::complex<double>* vl, const int* ldvl, std::complex<double>* vr,
            const int* ldvr, std::complex<double>* work, const int* lwork, double* rwork, int* info,
            std::size_t jobvl_len, std::size_t jobvr_len);
void dgeev_(const char* jobvl, const char* jobvr, const int* n, double* a, const int* lda, double* wr, double* wi,
            double* vl, const int* ldvl, double* vr, const int* ldvr, double* work, const int* lwork, int* info,
            std::size_t jobvl_len, std::size_t jobvr_len);
}

namespace npannulus {

inline constexpr double kDefaultImagTol = 1e-8;

/// Eigenvalues (with multiplicity, unordered) of a dense complex matrix, via
/// LAPACK zgeev.
inline std::vector<Complex> eigenvalues(const ComplexMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw ArgumentError("eigenvalues: matrix is not square");
  if (!matrix.allFinite()) throw ArgumentError("eigenvalues: matrix has non-finite entries");
  const int n = static_cast<int>(matrix.rows());
  if (n == 0) return {};
  ComplexMatrix a = matrix;  // zgeev overwrites its input; Eigen storage is column-major
  std::vector<Complex> w(static_cast<std::size_t>(n));
  std::vector<double> rwork(2 * static_cast<std::size_t>(n));
  const int one = 1;
  int info = 0;
  int lwork = -1;
  Complex query;
  zgeev_("N", "N", &n, a.data(), &n, w.data(), nullptr, &one, nullptr, &one, &query, &lwork, rwork.data(), &info,
         1, 1);
  if (info != 0) throw SolverError("zgeev workspace query failed, info = " + std::to_string(info));
  lwork = static_cast<int>(query.real());
  std::vector<Complex> work(static_cast<std::size_t>(lwork));
  zgeev_("N", "N", &n, a.data(), &n, w.data(), nullptr, &one, nullptr, &one, work.data(), &lwork, rwork.data(),
         &info, 1, 1);
  if (info != 0) throw SolverError("zgeev failed to converge, info = " + std::to_string(info));
  return w;
}

/// Real overload (LAPACK dgeev).
inline std::vector<Complex> eigenvalues(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) throw ArgumentError("eigenvalues: matrix is not square");
  if (!matrix.allFinite()) throw ArgumentError("eigenvalues: matrix has non-finite entries");
  const int n = static_cast<int>(matrix.rows());
  if (n == 0) return {};
  Eigen::MatrixXd a = matrix;
  std::vector<double> wr(static_cast<std::size_t>(n)), wi(static_cast<std::size_t>(n));
  const int one = 1;
  int info = 0;
  int lwork = -1;
  double query = 0.0;
  dgeev_("N", "N", &n, a.data(), &n, wr.data(), wi.data(), nullptr, &one, nullptr, &one, &query, &lwork, &info, 1,
         1);
  if (info != 0) throw SolverError("dgeev workspace query failed, info = " + std::to_string(info));
  lwork = static_cast<int>(query);
  std::vector<double> work(static_cast<std::size_t>(lwork));
  dgeev_("N", "N", &n, a.data(), &n, wr.data(), wi.data(), nullptr, &one, nullptr, &one, work.data(), &lwork, &info,
         1, 1);
  if (info != 0) throw SolverError("dgeev failed to converge, info = " + std::to_string(info));
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = {wr[i], wi[i]};
  return w;
}

struct SpectrumReport {
  std::vector<Complex> raw;
  std::vector<double> realized;  ///< sorted descending
  double max_imag = 0.0;
  int order = 0;
  double ratio = 0.0;
};

/// Drops imaginary parts (recording the largest) and sorts descending.
inline SpectrumReport realize(const std::vector<Complex>& raw, double imag_tol = kDefaultImagTol) {
  if (!(imag_tol > 0.0)) throw ArgumentError("realize: imag_tol must be positive");
  SpectrumReport rep;
  rep.raw = raw;
  rep.realized.reserve(raw.size());
  for (const auto& z : raw) {
    rep.max_imag = std::max(rep.max_imag, std::abs(z.imag()));
    rep.realized.push_back(z.real());
  }
  if (rep.max_imag > imag_tol) {
    throw RealizationError("realize: eigenvalue imaginary part " + std::to_string(rep.max_imag) +
                           " exceeds tolerance " + std::to_string(imag_tol));
  }
  std::sort(rep.realized.begin(), rep.realized.end(), std::greater<>());
  return rep;
}

/// Largest |lambda_k + lambda_{n-1-k}| over a descending list; zero for a
/// spectrum symmetric under negation.
inline double twin_asymmetry(const std::vector<double>& sorted_desc) {
  double worst = 0.0;
  const std::size_t n = sorted_desc.size();
  for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(sorted_desc[k] + sorted_desc[n - 1 - k]));
  return worst;
}

/// Full Grunsky-matrix pipeline: assemble, solve, realize.
inline SpectrumReport np_spectrum(const AnnulusGeometry& geom, const GrunskyTable& table, int order,
                                  double imag_tol = kDefaultImagTol) {
  const auto K = build_np_matrix(geom, table, order);
  auto rep = realize(eigenvalues(K.entries), imag_tol);
  rep.order = order;
  rep.ratio = geom.ratio();
  return rep;
}

/// {±r^m/2 : m = 0..M}, descending.
inline std::vector<double> reference_annulus_spectrum(double r, int M) {
  if (!(r > 0.0 && r < 1.0)) throw ArgumentError("reference_annulus_spectrum: r must lie in (0, 1)");
  if (M < 0) throw ArgumentError("reference_annulus_spectrum: M must be >= 0");
  std::vector<double> out;
  out.reserve(2 * static_cast<std::size_t>(M) + 2);
  for (int m = 0; m <= M; ++m) {
    const double v = 0.5 * std::pow(r, m);
    out.push_back(v);
    out.push_back(-v);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Eigenvalues of the order-N truncation for concentric circles: ±1/2 once,
/// and ±r^m/2 twice (modes m and -m) for m = 1..N.  Same cardinality as the
/// truncated NP matrix.
inline std::vector<double> truncated_annulus_spectrum(double r, int order) {
  if (!(r > 0.0 && r < 1.0)) throw ArgumentError("truncated_annulus_spectrum: r must lie in (0, 1)");
  if (order < 0) throw ArgumentError("truncated_annulus_spectrum: order must be >= 0");
  std::vector<double> out{0.5, -0.5};
  for (int m = 1; m <= order; ++m) {
    const double v = 0.5 * std::pow(r, m);
    out.insert(out.end(), {v, v, -v, -v});
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

struct ReferencePair {
  int index = 0;  ///< 1-based rank in descending order
  double computed = 0.0;
  double reference = 0.0;
  double rel_diff = 0.0;  ///< (computed - reference) / reference
};

struct ReferenceComparison {
  std::vector<ReferencePair> paired;

  double max_abs_rel_diff() const {
    double v = 0.0;
    for (const auto& p : paired) v = std::max(v, std::abs(p.rel_diff));
    return v;
  }
};

/// Pairs two spectra by descending rank.
inline ReferenceComparison compare_to_reference(std::vector<double> computed, std::vector<double> reference) {
  if (computed.size() != reference.size()) {
    throw ArgumentError("compare_to_reference: cardinality mismatch (" + std::to_string(computed.size()) + " vs " +
                        std::to_string(reference.size()) + ")");
  }
  std::sort(computed.begin(), computed.end(), std::greater<>());
  std::sort(reference.begin(), reference.end(), std::greater<>());
  ReferenceComparison out;
  out.paired.reserve(computed.size());
  for (std::size_t k = 0; k < computed.size(); ++k) {
    out.paired.push_back(
        {static_cast<int>(k) + 1, computed[k], reference[k], (computed[k] - reference[k]) / reference[k]});
  }
  return out;
}

/// Hausdorff distance between a finite set S and [lo, hi] when S lies in the
/// interval: the larger of the end gaps and half the widest interior gap.
/// Points at most 1e-6 outside the interval are clamped onto it.
inline double hausdorff_to_interval(std::vector<double> points, double lo, double hi) {
  constexpr double kClamp = 1e-6;
  if (points.empty()) throw ArgumentError("hausdorff_to_interval: empty point set");
  if (!(lo < hi)) throw ArgumentError("hausdorff_to_interval: need lo < hi");
  for (double& x : points) {
    if (x < lo - kClamp || x > hi + kClamp || !std::isfinite(x)) {
      throw ArgumentError("hausdorff_to_interval: point " + std::to_string(x) + " lies outside the interval");
    }
    x = std::clamp(x, lo, hi);
  }
  std::sort(points.begin(), points.end());
  double d = std::max(points.front() - lo, hi - points.back());
  for (std::size_t k = 1; k < points.size(); ++k) d = std::max(d, 0.5 * (points[k] - points[k - 1]));
  return d;
}

/// How the two radii move with the ratio r = r_i / r_e in a sweep.
enum class SweepAnchor {
  fixed_outer,  ///< r_e held, r_i = r * r_e
  fixed_inner,  ///< r_i held, r_e = r_i / r
};

struct SweepPoint {
  double ratio = 0.0;
  std::optional<double> hausdorff;
  std::string error;  ///< empty on success
};

/// d_H(spectrum, [-1/2, 1/2]) for each ratio.  Failures are recorded per
/// ratio and the sweep continues.
inline std::vector<SweepPoint> sweep_hausdorff(const ConformalMap& map, double anchor_radius, SweepAnchor anchor,
                                               const std::vector<double>& ratios, int order,
                                               double imag_tol = kDefaultImagTol) {
  if (order < 1) throw ArgumentError("sweep_hausdorff: order must be >= 1");
  const auto table = compute_table(map, order);
  std::vector<SweepPoint> out;
  for (double r : ratios) {
    SweepPoint pt;
    pt.ratio = r;
    try {
      if (!(r > 0.0 && r < 1.0)) throw ArgumentError("ratio must lie in (0, 1)");
      const double ri = anchor == SweepAnchor::fixed_outer ? r * anchor_radius : anchor_radius;
      const double re = anchor == SweepAnchor::fixed_outer ? anchor_radius : anchor_radius / r;
      const AnnulusGeometry geom(map, ri, re);
      if (!validate_geometry(geom, 512).ok()) {
        throw GeometryError("geometry validation failed at r_i=" + std::to_string(ri) +
                            ", r_e=" + std::to_string(re));
      }
      const auto spec = np_spectrum(geom, table, order, imag_tol);
      pt.hausdorff = hausdorff_to_interval(spec.realized, -0.5, 0.5);
    } catch (const Error& e) {
      pt.error = std::string(e.kind()) + ": " + e.what();
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace npannulus

#endif  // NPANNULUS_SPECTRAL_HPP
