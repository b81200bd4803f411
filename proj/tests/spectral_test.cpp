#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "npannulus/nystrom.hpp"
#include "npannulus/spectral.hpp"
#include "test_maps.hpp"

namespace npannulus {
namespace {

using testing::paper_map;

std::vector<double> sorted_real(const std::vector<Complex>& z) {
  std::vector<double> v;
  for (const auto& x : z) v.push_back(x.real());
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Eigenvalues, Triangular) {
  ComplexMatrix a(2, 2);
  a << -0.5, 0.0, 1.0, 0.5;
  const auto v = sorted_real(eigenvalues(a));
  EXPECT_NEAR(v[0], -0.5, 1e-15);
  EXPECT_NEAR(v[1], 0.5, 1e-15);
}

TEST(Eigenvalues, SymmetricPair) {
  Eigen::MatrixXd a(2, 2);
  a << 0.0, 0.3, 0.3, 0.0;
  const auto v = sorted_real(eigenvalues(a));
  EXPECT_NEAR(v[0], -0.3, 1e-15);
  EXPECT_NEAR(v[1], 0.3, 1e-15);
}

TEST(Eigenvalues, TraceIdentity) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  ComplexMatrix a(8, 8);
  Eigen::MatrixXd b(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      a(i, j) = {nd(rng), nd(rng)};
      b(i, j) = nd(rng);
    }
  Complex sa{}, sb{};
  for (const auto& z : eigenvalues(a)) sa += z;
  for (const auto& z : eigenvalues(b)) sb += z;
  EXPECT_LT(std::abs(sa - a.trace()), 1e-10);
  EXPECT_LT(std::abs(sb - b.trace()), 1e-10);
}

TEST(Eigenvalues, RejectsBadInput) {
  EXPECT_THROW(eigenvalues(ComplexMatrix(2, 3)), ArgumentError);
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(eigenvalues(a), ArgumentError);
  EXPECT_TRUE(eigenvalues(ComplexMatrix(0, 0)).empty());
}

TEST(Realize, Examples) {
  const auto rep = realize({{0.3, 1e-14}}, 1e-8);
  ASSERT_EQ(rep.realized.size(), 1u);
  EXPECT_EQ(rep.realized[0], 0.3);
  EXPECT_EQ(rep.max_imag, 1e-14);
  EXPECT_THROW(realize({{0.3, 0.1}}, 1e-8), RealizationError);
  EXPECT_THROW(realize({{0.3, 0.0}}, 0.0), ArgumentError);
  const auto sorted = realize({{0.1, 0}, {-0.4, 0}, {0.3, 0}});
  EXPECT_EQ(sorted.realized, (std::vector<double>{0.3, 0.1, -0.4}));
}

TEST(ReferenceSpectrum, Examples) {
  EXPECT_EQ(reference_annulus_spectrum(0.5, 2), (std::vector<double>{0.5, 0.25, 0.125, -0.125, -0.25, -0.5}));
  EXPECT_EQ(reference_annulus_spectrum(0.5, 0), (std::vector<double>{0.5, -0.5}));
  const double r = 1.1 / 1.15;
  const auto big = reference_annulus_spectrum(r, 500);
  EXPECT_EQ(big.size(), 1002u);
  double min_mag = 1.0;
  for (double x : big) min_mag = std::min(min_mag, std::abs(x));
  EXPECT_DOUBLE_EQ(min_mag, std::pow(r, 500) / 2);
  EXPECT_THROW(reference_annulus_spectrum(1.0, 3), ArgumentError);
}

TEST(ReferenceSpectrum, TruncatedHasMatrixCardinality) {
  const auto t = truncated_annulus_spectrum(0.5, 3);
  EXPECT_EQ(t.size(), 2u * (2 * 3 + 1));
  EXPECT_EQ(t, (std::vector<double>{0.5, 0.25, 0.25, 0.125, 0.125, 0.0625, 0.0625, -0.0625, -0.0625, -0.125, -0.125,
                                    -0.25, -0.25, -0.5}));
}

TEST(CompareToReference, Examples) {
  const auto same = compare_to_reference({0.5, 0.1, -0.5}, {0.5, 0.1, -0.5});
  EXPECT_EQ(same.max_abs_rel_diff(), 0.0);
  const auto c = compare_to_reference({0.51, -0.51}, {0.5, -0.5});
  ASSERT_EQ(c.paired.size(), 2u);
  EXPECT_NEAR(c.paired[0].rel_diff, 0.02, 1e-15);
  EXPECT_NEAR(c.paired[1].rel_diff, 0.02, 1e-15);
  EXPECT_EQ(c.paired[1].index, 2);
  EXPECT_THROW(compare_to_reference({0.1}, {0.1, 0.2}), ArgumentError);
}

TEST(CompareToReference, CircularExactAtEqualOrder) {
  for (double r : {0.8, 0.9}) {
    const int N = 50;
    const AnnulusGeometry g(ConformalMap::identity(), r, 1.0);
    const auto spec = np_spectrum(g, compute_table(g.map, N), N);
    EXPECT_LT(compare_to_reference(spec.realized, truncated_annulus_spectrum(r, N)).max_abs_rel_diff(), 1e-10);
  }
}

TEST(Hausdorff, Examples) {
  EXPECT_DOUBLE_EQ(hausdorff_to_interval({-0.5, 0.0, 0.5}, -0.5, 0.5), 0.25);
  EXPECT_DOUBLE_EQ(hausdorff_to_interval({0.5}, -0.5, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(hausdorff_to_interval({0.5 + 5e-7, -0.5}, -0.5, 0.5), 0.5);
  EXPECT_THROW(hausdorff_to_interval({}, -0.5, 0.5), ArgumentError);
  EXPECT_THROW(hausdorff_to_interval({0.6}, -0.5, 0.5), ArgumentError);
  EXPECT_THROW(hausdorff_to_interval({0.0}, 0.5, -0.5), ArgumentError);
}

TEST(Hausdorff, BruteForceGrid) {
  for (double r : {0.55, 0.9}) {
    auto pts = truncated_annulus_spectrum(r, 50);
    const double formula = hausdorff_to_interval(pts, -0.5, 0.5);
    std::sort(pts.begin(), pts.end());
    double brute = 0.0;
    const int G = 1'000'000;
    for (int k = 0; k <= G; ++k) {
      const double x = -0.5 + static_cast<double>(k) / G;
      auto it = std::lower_bound(pts.begin(), pts.end(), x);
      double d = std::numeric_limits<double>::infinity();
      if (it != pts.end()) d = *it - x;
      if (it != pts.begin()) d = std::min(d, x - *std::prev(it));
      brute = std::max(brute, d);
    }
    EXPECT_NEAR(formula, brute, 1e-6) << "r = " << r;
  }
}

TEST(Sweep, CircularTruncationClosedForm) {
  // d_H = max(widest gap / 2, distance from 0 to the smallest eigenvalue r^N/2)
  const int N = 200;
  const auto pts = sweep_hausdorff(ConformalMap::identity(), 1.0, SweepAnchor::fixed_outer, {0.5, 0.9, 0.99}, N);
  ASSERT_EQ(pts.size(), 3u);
  for (const auto& p : pts) {
    ASSERT_TRUE(p.hausdorff.has_value()) << p.error;
    EXPECT_NEAR(*p.hausdorff, std::max(0.25 * (1 - p.ratio), 0.5 * std::pow(p.ratio, N)), 1e-12);
  }
  // at r = 0.99 the truncation gap near zero dominates
  EXPECT_GT(*pts[2].hausdorff, *pts[1].hausdorff);
}

TEST(Sweep, CircularStrictlyDecreasing) {
  const auto pts = sweep_hausdorff(ConformalMap::identity(), 1.0, SweepAnchor::fixed_outer, {0.5, 0.9, 0.97}, 200);
  for (const auto& p : pts) ASSERT_TRUE(p.hausdorff.has_value()) << p.error;
  EXPECT_GT(*pts[0].hausdorff, *pts[1].hausdorff);
  EXPECT_GT(*pts[1].hausdorff, *pts[2].hausdorff);
}

TEST(Sweep, SingleRatioMatchesPipeline) {
  const auto geom = reference_geometry();
  const int N = 40;
  const auto pts = sweep_hausdorff(geom.map, geom.r_inner, SweepAnchor::fixed_inner, {geom.ratio()}, N);
  ASSERT_EQ(pts.size(), 1u);
  ASSERT_TRUE(pts[0].hausdorff.has_value()) << pts[0].error;
  const auto spec = np_spectrum(geom, compute_table(geom.map, N), N);
  EXPECT_EQ(*pts[0].hausdorff, hausdorff_to_interval(spec.realized, -0.5, 0.5));
}

TEST(Sweep, RecordsFailuresAndContinues) {
  // r_i = 0.575 lies inside the map's critical points
  const auto pts = sweep_hausdorff(paper_map(), 1.15, SweepAnchor::fixed_outer, {0.5, 1.1 / 1.15, 1.5}, 30);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_FALSE(pts[0].hausdorff.has_value());
  EXPECT_NE(pts[0].error.find("geometry"), std::string::npos);
  EXPECT_TRUE(pts[1].hausdorff.has_value()) << pts[1].error;
  EXPECT_FALSE(pts[2].hausdorff.has_value());
  EXPECT_NE(pts[2].error.find("argument"), std::string::npos);
}

TEST(Sweep, PaperMapEndpointsFixedInner) {
  const auto pts = sweep_hausdorff(paper_map(), 1.1, SweepAnchor::fixed_inner, {0.5, 0.8, 0.95, 1.1 / 1.15}, 120);
  for (const auto& p : pts) ASSERT_TRUE(p.hausdorff.has_value()) << p.error;
  EXPECT_LT(*pts.back().hausdorff, *pts.front().hausdorff);
}

class PaperSpectrum : public ::testing::TestWithParam<int> {};

TEST_P(PaperSpectrum, RealTwinSymmetricContained) {
  const int N = GetParam();
  const auto geom = reference_geometry();
  const auto spec = np_spectrum(geom, compute_table(geom.map, N), N);
  EXPECT_EQ(spec.realized.size(), static_cast<std::size_t>(2 * (2 * N + 1)));
  EXPECT_LT(spec.max_imag, 1e-8);
  EXPECT_LT(twin_asymmetry(spec.realized), 1e-8);
  EXPECT_LE(spec.realized.front(), 0.5 + 1e-8);
  EXPECT_GE(spec.realized.back(), -0.5 - 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Orders, PaperSpectrum, ::testing::Values(50, 250));

TEST(PaperSpectrumStability, TopTwentyBetweenOrders) {
  const auto geom = reference_geometry();
  const auto table = compute_table(geom.map, 250);
  const auto a = largest_magnitude(np_spectrum(geom, table, 150).realized, 20);
  const auto b = largest_magnitude(np_spectrum(geom, table, 250).realized, 20);
  for (std::size_t k = 0; k < 20; ++k) EXPECT_LT(std::abs(a[k] - b[k]), 1e-8) << k;
}

TEST(PaperSpectrumStability, RelativeDifferenceShrinksNearZero) {
  const auto geom = reference_geometry();
  const int N = 250;
  const auto spec = np_spectrum(geom, compute_table(geom.map, N), N);
  const auto cmp = compare_to_reference(spec.realized, truncated_annulus_spectrum(geom.ratio(), N));
  auto pairs = cmp.paired;
  std::sort(pairs.begin(), pairs.end(),
            [](const ReferencePair& x, const ReferencePair& y) { return std::abs(x.reference) < std::abs(y.reference); });
  double small = 0.0, large = 0.0;
  for (std::size_t k = 0; k < 100; ++k) {
    small = std::max(small, std::abs(pairs[k].rel_diff));
    large = std::max(large, std::abs(pairs[pairs.size() - 1 - k].rel_diff));
  }
  EXPECT_LT(small, large);
}

}  // namespace
}  // namespace npannulus
