// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "npannulus/npannulus.hpp"

using namespace npannulus;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

char buf[512];

template <class... A>
std::string fmt(const char* f, A... a) {
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double nearest(const std::vector<double>& set, double x) {
  double d = std::numeric_limits<double>::infinity();
  for (double y : set) d = std::min(d, std::abs(x - y));
  return d;
}

Outcome ac1() {
  const AnnulusGeometry g(ConformalMap::identity(), 0.55, 1.0);
  const auto spec = np_spectrum(g, compute_table(g.map, 50), 50);
  const double err = max_abs_diff(spec.realized, truncated_annulus_spectrum(0.55, 50));
  return {err < 1e-12, fmt("max abs error %.3e", err)};
}

Outcome ac2() {
  const auto geom = reference_geometry();
  const auto K = build_np_matrix(geom, compute_table(geom.map, 250), 250);
  const auto spec = realize(eigenvalues(K.entries), 1e-8);
  const double twin = twin_asymmetry(spec.realized);
  const bool contained = spec.realized.front() <= 0.5 + 1e-8 && spec.realized.back() >= -0.5 - 1e-8;
  return {K.size() == 1002 && spec.max_imag < 1e-8 && twin < 1e-8 && contained,
          fmt("size %d, max_imag %.2e, twin asymmetry %.2e, range [%.17g, %.17g]", K.size(), spec.max_imag, twin,
              spec.realized.back(), spec.realized.front())};
}

Outcome ac3() {
  const auto geom = reference_geometry();
  const auto spec = np_spectrum(geom, compute_table(geom.map, 250), 250);
  auto pairs = compare_to_reference(spec.realized, truncated_annulus_spectrum(geom.ratio(), 250)).paired;
  std::sort(pairs.begin(), pairs.end(), [](const ReferencePair& a, const ReferencePair& b) {
    return std::abs(a.reference) < std::abs(b.reference);
  });
  double small = 0.0, large = 0.0;
  for (std::size_t k = 0; k < 100; ++k) {
    small = std::max(small, std::abs(pairs[k].rel_diff));
    large = std::max(large, std::abs(pairs[pairs.size() - 1 - k].rel_diff));
  }
  return {small < large, fmt("max |rel diff| smallest-100 %.3e, largest-100 %.3e", small, large)};
}

Outcome ac4() {
  const auto geom = reference_geometry();
  const auto table = compute_table(geom.map, 60);
  const auto lam = realize(eigenvalues(build_np_matrix(geom, table, 60).entries)).realized;
  const auto mu =
      realize(eigenvalues(build_reduced_b(geom, scale_table(table, geom.r_inner), 60).entries)).realized;
  double fwd = 0.0, back = 0.0;
  for (double l : lam) {
    if (std::abs(l) < 0.5 - 1e-6) fwd = std::max(fwd, nearest(mu, l * l));
  }
  for (double m : mu) {
    if (m < 0.25 - 1e-6) {
      const double s = std::sqrt(std::max(m, 0.0));
      back = std::max({back, nearest(lam, s), nearest(lam, -s)});
    }
  }
  return {fwd < 1e-6 && back < 1e-6, fmt("lambda^2 -> B %.2e, B -> ±sqrt %.2e", fwd, back)};
}

Outcome ac5() {
  const auto geom = reference_geometry();
  const auto scaled = scale_table(compute_table(geom.map, 100), geom.r_inner);
  const auto B = build_reduced_b(geom, scaled, 100);
  const auto mu = eigenvalues(B.entries);
  const double r = geom.ratio();
  std::vector<Disk> disks;
  for (const auto& d : analytic_disks(r, scaled.rho_fit, 400)) disks.push_back(d.disk());
  const auto analytic = check_containment(mu, disks, analytic_tail_interval(r, scaled.rho_fit, 400));
  std::vector<Disk> entry;
  for (const auto& e : entry_disks(B.entries)) entry.push_back(e.disk());
  const auto ent = check_containment(mu, entry);
  return {analytic.ok() && analytic.worst_margin >= -1e-10 && ent.ok(),
          fmt("rho_fit %.6f, analytic worst margin %.3e, entry worst margin %.3e", scaled.rho_fit,
              analytic.worst_margin, ent.worst_margin)};
}

Outcome ac6() {
  const std::vector<double> ratios{0.5, 0.8, 0.95, 1.1 / 1.15};
  const auto paper = sweep_hausdorff(reference_geometry().map, 1.1, SweepAnchor::fixed_inner, ratios, 250);
  const auto circ = sweep_hausdorff(ConformalMap::identity(), 1.15, SweepAnchor::fixed_outer, ratios, 250);
  bool ok = true;
  std::string detail = "paper";
  for (const auto& p : paper) {
    ok = ok && p.hausdorff.has_value();
    detail += p.hausdorff ? fmt(" %.4f", *p.hausdorff) : " fail(" + p.error + ")";
  }
  ok = ok && *paper.back().hausdorff < *paper.front().hausdorff;
  detail += "; circular";
  for (std::size_t k = 0; k < circ.size(); ++k) {
    ok = ok && circ[k].hausdorff.has_value();
    detail += circ[k].hausdorff ? fmt(" %.4f", *circ[k].hausdorff) : " fail(" + circ[k].error + ")";
    if (k > 0 && ok) ok = *circ[k].hausdorff < *circ[k - 1].hausdorff;
  }
  return {ok, detail};
}

Outcome ac7() {
  const auto geom = reference_geometry();
  const auto grunsky = np_spectrum(geom, compute_table(geom.map, 100), 100).realized;
  const double paper_err = matched_gap(grunsky, oracle_spectrum(geom, 512).realized, 20);

  // trapezoid aliasing for concentric circles is about r^n_q, so n_q = 512 sits
  // at 1.3e-10 for r = 1.1/1.15; 640 nodes clear the bound
  const AnnulusGeometry circle(ConformalMap::identity(), 1.1, 1.15);
  const auto c_grunsky = np_spectrum(circle, compute_table(circle.map, 100), 100).realized;
  const double circle_512 = matched_gap(c_grunsky, oracle_spectrum(circle, 512).realized, 20);
  const double circle_640 = matched_gap(c_grunsky, oracle_spectrum(circle, 640).realized, 20);
  return {paper_err < 1e-6 && circle_640 < 1e-10,
          fmt("paper map %.3e (n_q 512); concentric circles %.3e (n_q 512), %.3e (n_q 640); N 100, top 20",
              paper_err, circle_512, circle_640)};
}

Outcome ac8() {
  const auto map = reference_geometry().map;
  const auto t = compute_table(map, 100);
  double sym = 0.0;
  for (int n = 1; n <= 100; ++n)
    for (int m = 1; m <= 100; ++m)
      sym = std::max(sym, std::abs(double(m) * t(n, m) - double(n) * t(m, n)) / (1.0 + std::abs(t(n, m)) * m));
  const auto strong = check_strong_grunsky(t, 1.1);
  double faber = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const auto F = faber_coefficients(map, n, n + 4);
    for (int j = 0; j < 64; ++j) {
      const Complex w = std::polar(1.3, kTwoPi * j / 64.0);
      Complex rhs = std::pow(w, n);
      for (int m = 1; m <= 100; ++m) rhs += t(n, m) * std::pow(w, -m);
      faber = std::max(faber, std::abs(F(eval_map(map, w)) - rhs));
    }
  }
  double rowsum = 0.0;
  const auto geom = reference_geometry();
  for (Curve c : {Curve::inner, Curve::outer}) {
    const auto q = curve_quadrature(geom, c, 256);
    const auto A = np_kernel_block(q, q, true);
    Eigen::VectorXd phi(256);
    for (int k = 0; k < 256; ++k) phi(k) = 1.0 / q.nodes[static_cast<std::size_t>(k)].speed;
    rowsum = std::max(rowsum, (A * phi - 0.5 * phi).cwiseAbs().maxCoeff() / phi.cwiseAbs().maxCoeff());
  }
  return {sym < 1e-10 && strong.max_row_sum() <= 1 + 1e-9 && faber < 1e-8 && rowsum < 1e-8,
          fmt("symmetry %.2e, strong Grunsky max row %.4f, Faber residual %.2e, row-sum identity %.2e", sym,
              strong.max_row_sum(), faber, rowsum)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    const char* title;
    std::function<Outcome()> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "circular-annulus exactness", ac1, 5},
      {"AC2", "full-scale reproduction at N=250", ac2, 120},
      {"AC3", "relative differences shrink near zero", ac3, 0},
      {"AC4", "squared-spectrum correspondence", ac4, 0},
      {"AC5", "Gershgorin containment", ac5, 0},
      {"AC6", "Hausdorff sweep", ac6, 0},
      {"AC7", "oracle equivalence", ac7, 0},
      {"AC8", "property checks", ac8, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += fmt("; over the %.0f s budget", c.budget_s);
    }
    failures += !o.pass;
    std::printf("%s %s %s: %s [%.2f s]\n", c.name, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
