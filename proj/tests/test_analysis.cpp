#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "orbitlift/analysis.hpp"
#include "orbitlift/lifting.hpp"
#include "test_support.hpp"

using namespace orbitlift;
using namespace orbitlift::testing;

namespace {

SampledCurve linear(double slope, double lo, double hi, std::size_t n) {
  return sample(Grid::uniform(lo, hi, n), [slope](double t) { return CVec{cplx{slope * t, 0.0}}; });
}

}  // namespace

TEST(Holder, LinearFunction) {
  auto f = linear(2.0, 0.0, 1.0, 50);
  auto h0 = holder_norm(f, 0, 1.0);
  EXPECT_NEAR(h0.sup_part, 2.0, 1e-12);
  EXPECT_NEAR(h0.holder_part, 2.0, 1e-12);
  EXPECT_NEAR(h0.value, 4.0, 1e-12);
  auto h1 = holder_norm(f, 1, 1.0);
  EXPECT_NEAR(h1.value, 2.0, 1e-9);
  EXPECT_THROW(holder_norm(f, 0, 1.5), Error);
  EXPECT_THROW(holder_norm(linear(1.0, 0.0, 1.0, 3), 2, 1.0), Error);
}

TEST(Holder, SquareRootIsHalfHolderWithConstantOne) {
  auto f = sample(Grid::uniform(0.0, 1.0, 400), [](double t) { return CVec{cplx{std::sqrt(t), 0.0}}; });
  EXPECT_NEAR(holder_quotient(f, 0.5), 1.0, 1e-12);
  EXPECT_NEAR(image_diameter(f), 1.0, 1e-12);
}

TEST(Holder, SampledPairsOnLargeGrids) {
  // Above the exhaustive limit the quotient still finds the steepest pairs.
  auto f = linear(3.0, 0.0, 1.0, 5000);
  EXPECT_NEAR(holder_quotient(f, 1.0), 3.0, 1e-9);
  EXPECT_EQ(holder_quotient(f, 1.0, 7), holder_quotient(f, 1.0, 7));
}

TEST(Lp, LinearFunctionClosedForm) {
  auto f = linear(3.0, 0.0, 2.0, 11);
  EXPECT_NEAR(lp_derivative_norm(f, 2.0).value, 3.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(lp_derivative_norm(f, 1.0).value, 6.0, 1e-12);
  EXPECT_NEAR(weak_lp_quasinorm(f, 2.0).value, 3.0 * std::sqrt(2.0), 1e-12);
  auto n = normalized(lp_derivative_norm(f, 2.0), 2.0);
  EXPECT_EQ(n.kind, NormKind::normalized_lp);
  EXPECT_NEAR(n.value, 3.0, 1e-12);
  EXPECT_THROW(lp_derivative_norm(f, 0.5), Error);
}

TEST(Lp, StepFunctionAgainstDirectSum) {
  std::mt19937_64 rng(301);
  for (int inst = 0; inst < 20; ++inst) {
    auto f = random_step_derivative(rng, 30);
    const double p = uniform(rng, 1.0, 4.0);
    double sum = 0.0;
    std::vector<std::pair<double, double>> cells;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      double h = f.t(i + 1) - f.t(i), s = std::abs((f[i + 1][0] - f[i][0]).real()) / h;
      sum += std::pow(s, p) * h;
      cells.emplace_back(s, h);
    }
    EXPECT_NEAR(lp_derivative_norm(f, p).value, std::pow(sum, 1.0 / p), 1e-9 * std::pow(sum, 1.0 / p));
    // Weak quasinorm by trying every cell value as the threshold.
    double weak = 0.0;
    for (auto [r, _] : cells) {
      double m = 0.0;
      for (auto [s, h] : cells)
        if (s >= r) m += h;
      weak = std::max(weak, r * std::pow(m, 1.0 / p));
    }
    EXPECT_NEAR(weak_lp_quasinorm(f, p, false).value, weak, 1e-9 * weak);
  }
}

TEST(Lp, ZeroAdjacentCellsAreNotThresholds) {
  // Square root lift: the cells at the zero carry the largest chord slopes.
  auto g = sample(Grid({-1.0, -1e-8, 0.0, 1e-8, 1.0}), [](double t) { return CVec{cplx{t, 0.0}}; });
  auto f = continuous_radical(g, 2).as_curve();
  EXPECT_GT(weak_lp_quasinorm(f, 2.0, false).value, weak_lp_quasinorm(f, 2.0, true).value);
}

TEST(Qp, InequalityOnExamplesAndRejectsBadExponents) {
  auto f = sample(Grid::uniform(0.0, 1.0, 101), [](double t) { return CVec{cplx{t * t * t, 0.0}}; });
  auto r = check_qp_inequality(f, 1.0, 2.0);
  EXPECT_TRUE(r.holds());
  EXPECT_NEAR(r.constant, 2.0, 1e-15);
  EXPECT_GE(r.slack_upper, 0.0);
  EXPECT_GE(r.slack_lower, 0.0);
  EXPECT_THROW(check_qp_inequality(f, 2.0, 2.0), Error);
  EXPECT_THROW(check_qp_inequality(f, 0.5, 2.0), Error);
}

TEST(Interpolation, SmoothCurveHasModerateRatio) {
  auto f = sample(Grid::uniform(0.0, 1.0, 200), [](double t) { return CVec{cplx{std::sin(3.0 * t), std::cos(t)}}; });
  for (int s = 0; s <= 2; ++s) {
    auto r = check_interpolation_inequality(f, 2, 1.0, s);
    EXPECT_GT(r.rhs, 0.0);
    EXPECT_GT(r.ratio, 0.0);
    EXPECT_LT(r.ratio, 10.0);
  }
  EXPECT_THROW(check_interpolation_inequality(f, 1, 1.0, 2), Error);
}

TEST(MainBound, ExponentRangeAndDegenerateCurves) {
  auto spec = RepresentationSpec::cyclic(2);
  auto g = sample(Grid::uniform(-1.0, 1.0, 101), [](double t) { return CVec{cplx{t, 0.0}}; });
  auto lift = continuous_radical(g, 2);
  auto r = verify_main_bound(g, lift, spec, 1.5);
  EXPECT_GT(r.ratio, 0.0);
  EXPECT_FALSE(r.degenerate);
  try {
    verify_main_bound(g, lift, spec, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExponentOutOfRange);
  }
  auto zero = sample(Grid::uniform(-1.0, 1.0, 11), [](double) { return CVec{cplx{0.0}}; });
  auto z = verify_main_bound(zero, continuous_radical(zero, 2), spec, 1.0);
  EXPECT_TRUE(z.degenerate);
}

TEST(Scan, ClassificationFromHandValues) {
  ExponentScanReport r;
  r.p_grid = {1.0, 1.5, 2.0, 2.5};
  r.values = {{1.0, 1.0, 1.0}, {2.0, 2.01, 2.02}, {1.0, 1.2, 1.5}, {1.0, 2.0, 4.0}};
  classify_scan(r);
  EXPECT_EQ(r.verdicts[0], Verdict::stable);
  EXPECT_EQ(r.verdicts[1], Verdict::stable);
  EXPECT_EQ(r.verdicts[2], Verdict::diverging);
  EXPECT_DOUBLE_EQ(r.p_star, 1.75);
  EXPECT_FALSE(r.at_boundary);

  ExponentScanReport all_stable;
  all_stable.p_grid = {1.0, 2.0};
  all_stable.values = {{1.0, 1.0}, {2.0, 2.0}};
  classify_scan(all_stable);
  EXPECT_TRUE(all_stable.at_boundary);
  EXPECT_DOUBLE_EQ(all_stable.p_star, 2.0);
}

TEST(Scan, ResultDoesNotDependOnThreadCount) {
  ScanProblem pb{RepresentationSpec::cyclic(3), [](double t) { return CVec{cplx{t, 0.0}}; }};
  auto p = linspace(1.0, 3.0, 9);
  setenv("ORBITLIFT_THREADS", "1", 1);
  auto one = critical_exponent_scan(pb, p, 3);
  setenv("ORBITLIFT_THREADS", "3", 1);
  auto three = critical_exponent_scan(pb, p, 3);
  unsetenv("ORBITLIFT_THREADS");
  EXPECT_EQ(one.values, three.values);
  EXPECT_EQ(one.grid_sizes, three.grid_sizes);
}

TEST(Scan, SymmetricCubeRootsLocateCriticalExponent) {
  ScanProblem pb{RepresentationSpec::symmetric(3), [](double t) { return CVec{cplx{0.0}, cplx{0.0}, cplx{t, 0.0}}; }};
  auto r = critical_exponent_scan(pb, linspace(1.0, 3.0, 41), 6);
  EXPECT_GE(r.p_star, 1.45);
  EXPECT_LE(r.p_star, 1.55);
}

TEST(Scan, InputValidation) {
  ScanProblem pb{RepresentationSpec::cyclic(2), [](double t) { return CVec{cplx{t, 0.0}}; }};
  EXPECT_THROW(critical_exponent_scan(pb, {0.5}, 2), Error);
  EXPECT_THROW(critical_exponent_scan(pb, {1.5}, 0), Error);
  EXPECT_EQ(linspace(1.0, 2.0, 3), (std::vector<double>{1.0, 1.5, 2.0}));
}
