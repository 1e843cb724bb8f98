#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "orbitlift/invariants.hpp"
#include "orbitlift/lifting.hpp"
#include "orbitlift/reduction.hpp"
#include "test_support.hpp"

using namespace orbitlift;
using namespace orbitlift::testing;

namespace {

RadicalSelection random_selection(std::mt19937_64& rng, std::size_t n, std::size_t nodes = 301) {
  std::vector<int> degrees(n);
  std::iota(degrees.begin(), degrees.end(), 1);
  std::shuffle(degrees.begin(), degrees.end(), rng);
  auto oracle = random_trig_curve(rng, n, 2);
  return radical_selections(sample(Grid::uniform(0.0, 1.0, nodes), oracle), degrees, oracle);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InputError;
}

}  // namespace

TEST(Selections, PowersReproduceTheCurve) {
  std::mt19937_64 rng(401);
  auto sel = random_selection(rng, 3);
  for (std::size_t i = 0; i < sel.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_NEAR(std::abs(power_map(sel.hat(i, j), sel.degrees[j]) - sel.base[i][j]), 0.0, 1e-10);
  EXPECT_LE(sel.residual, 1e-10);
  EXPECT_EQ(code_of([&] { radical_selections(sel.base, {1, 2}); }), ErrorCode::ShapeMismatch);
}

TEST(Selections, L1VariationIsChordSum) {
  auto c = make_sampled_curve({0.0, 1.0, 2.0, 3.0}, {{cplx{0.0}}, {cplx{3.0, 4.0}}, {cplx{3.0, 4.0}}, {cplx{0.0}}});
  EXPECT_DOUBLE_EQ(l1_variation(c, 0, 0, 3), 10.0);
  EXPECT_DOUBLE_EQ(l1_variation(c, 0, 1, 2), 0.0);
}

TEST(Dominant, TiesPickSmallestIndexAndZeroIsAnError) {
  auto base = make_sampled_curve({0.0, 1.0}, {{cplx{2.0}, cplx{0.0, 2.0}, cplx{1.0}}, {cplx{0.0}, cplx{0.0}, cplx{0.0}}});
  auto sel = radical_selections(base, {1, 1, 1});
  EXPECT_EQ(dominant_index(sel, 0), 0u);
  EXPECT_EQ(code_of([&] { dominant_index(sel, 1); }), ErrorCode::AllZeroAtPoint);
}

TEST(NormalizedCurve, FormulaAndVanishingDominant) {
  auto base = make_sampled_curve({0.0, 1.0}, {{cplx{4.0}, cplx{8.0}}, {cplx{1.0}, cplx{0.0}}});
  auto sel = radical_selections(base, {1, 3});
  auto under = normalized_curve(sel, 0, 0, 0);
  EXPECT_EQ(under[0][0], cplx(1.0));
  // (4^{-1} · 8^{1/3})^3 = 8 / 64.
  EXPECT_NEAR(std::abs(under[0][1] - cplx{0.125}), 0.0, 1e-14);
  EXPECT_EQ(code_of([&] { normalized_curve(sel, 1); }), ErrorCode::VanishingDominant);
}

TEST(Admissible, MaximalIntervalIsFeasibleAndMaximal) {
  std::mt19937_64 rng(402);
  for (int inst = 0; inst < 30; ++inst) {
    auto sel = random_selection(rng, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
    auto t0 = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(sel.size()) - 1));
    auto k = dominant_index(sel, t0);
    auto data = maximal_admissible_interval(sel, t0, k, 0.25);
    EXPECT_GE(data.slack, -1e-12);
    EXPECT_LE(data.lo, t0);
    EXPECT_GE(data.hi, t0);
    if (data.stop == StopKind::equality) {
      // Neither neighbouring extension fits the budget.
      if (data.lo > 0) EXPECT_LT(make_admissible_data(sel, data.lo - 1, data.hi, t0, k, 0.25).slack, 0.0);
      if (data.hi + 1 < sel.size()) EXPECT_LT(make_admissible_data(sel, data.lo, data.hi + 1, t0, k, 0.25).slack, 0.0);
    } else {
      EXPECT_EQ(data.lo, 0u);
      EXPECT_EQ(data.hi + 1, sel.size());
    }
  }
}

TEST(Admissible, ConclusionsAgreeWithDirectEvaluation) {
  std::mt19937_64 rng(403);
  for (int inst = 0; inst < 30; ++inst) {
    auto sel = random_selection(rng, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
    auto t0 = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(sel.size()) - 1));
    auto k = dominant_index(sel, t0);
    auto data = maximal_admissible_interval(sel, t0, k, 0.25);
    auto rep = check_admissible(data);
    EXPECT_TRUE(rep.preconditions()) << rep.first_failure;
    EXPECT_TRUE(rep.conclusions()) << rep.first_failure;
    const double ak0 = std::abs(sel.hat(t0, k));
    for (std::size_t i = data.lo; i <= data.hi; ++i) {
      double ratio = std::abs(sel.hat(i, k)) / ak0;
      EXPECT_GT(ratio, 2.0 / 3.0);
      EXPECT_LT(ratio, 4.0 / 3.0);
      for (std::size_t j = 0; j < sel.components(); ++j) {
        EXPECT_LE(std::abs(sel.hat(i, j) - sel.hat(t0, j)), 0.25 * ak0 * (1.0 + 1e-12));
        EXPECT_LE(std::abs(sel.hat(i, j)), 2.0 * std::abs(sel.hat(i, k)) * (1.0 + 1e-12));
      }
    }
  }
}

TEST(Admissible, RejectsBadConstants) {
  std::mt19937_64 rng(404);
  auto sel = random_selection(rng, 2);
  EXPECT_EQ(code_of([&] { maximal_admissible_interval(sel, 0, dominant_index(sel, 0), 1.0 / 3.0); }),
            ErrorCode::InputError);
  EXPECT_EQ(code_of([&] { maximal_admissible_interval(sel, sel.size(), 0, 0.25); }), ErrorCode::OutOfRange);
  std::size_t k = dominant_index(sel, 0);
  auto data = make_admissible_data(sel, 0, 10, 0, k, 0.4);
  auto rep = check_admissible(data);
  EXPECT_FALSE(rep.b_in_range);
  EXPECT_FALSE(rep.deviation_bound && rep.ratio_bound && rep.modulus_bound && rep.length_bound && rep.preconditions());
  // A component larger than the chosen k breaks dominance.
  std::size_t other = k == 0 ? 1 : 0;
  if (std::abs(sel.hat(0, other)) < std::abs(sel.hat(0, k))) {
    auto wrong = check_admissible(make_admissible_data(sel, 0, 0, 0, other, 0.25));
    EXPECT_FALSE(wrong.dominant);
    EXPECT_FALSE(wrong.preconditions());
  }
}

TEST(DerivativeBounds, FiniteOnSmoothDataAndOrderChecked) {
  std::mt19937_64 rng(405);
  auto oracle = random_trig_curve(rng, 2, 1);
  auto sel = radical_selections(sample(Grid::uniform(0.0, 1.0, 401), oracle), {1, 2}, oracle);
  auto data = maximal_admissible_interval(sel, 200, dominant_index(sel, 200), 0.25);
  if (data.hi - data.lo >= 2) {
    auto est = check_derivative_bounds(data);
    EXPECT_TRUE(std::isfinite(est.sup_constant));
    EXPECT_TRUE(std::isfinite(est.lip_constant));
    EXPECT_GE(est.measured(), 0.0);
  }
  auto tiny = make_admissible_data(sel, 200, 201, 200, dominant_index(sel, 200), 0.25);
  EXPECT_EQ(code_of([&] { check_derivative_bounds(tiny); }), ErrorCode::OrderTooHigh);
}

TEST(Clusters, SplitAndRecombine) {
  const double eps = 1e-9;
  auto grid = Grid::uniform(0.0, 1.0, 41);
  LiftedCurve lift{grid, std::vector<std::vector<CVec>>(3, std::vector<CVec>(grid.size()))};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double t = grid[i];
    lift.branches[0][i] = {cplx{1.0 + t, 0.0} + std::polar(eps, t)};
    lift.branches[1][i] = {cplx{-1.0, t}};
    lift.branches[2][i] = {cplx{1.0 + t, 0.0} - std::polar(eps, t)};
  }
  auto split = split_clusters(lift);
  ASSERT_EQ(split.pieces.size(), 2u);
  EXPECT_EQ(split.pieces[0].branches, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(split.pieces[1].branches, (std::vector<std::size_t>{1}));
  EXPECT_EQ(split.pieces[0].degrees, (std::vector<int>{1, 2}));
  EXPECT_LE(split.recombination_error, 1e-12);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(std::abs(split.pieces[0].centroid[i][0] - cplx{1.0 + grid[i], 0.0}), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(split.pieces[0].coefficients[i][0]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(split.pieces[0].coefficients[i][1] + std::polar(eps * eps, 2.0 * grid[i])), 0.0, 1e-24);
  }
}

TEST(Clusters, MergingClustersAreRejected) {
  auto grid = Grid::uniform(0.0, 1.0, 11);
  LiftedCurve lift{grid, std::vector<std::vector<CVec>>(2, std::vector<CVec>(grid.size()))};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    lift.branches[0][i] = {cplx{grid[i] * 1e-6, 0.0}};
    lift.branches[1][i] = {cplx{0.0, 0.0}};
  }
  EXPECT_EQ(code_of([&] { split_clusters(lift); }), ErrorCode::ClustersNotSeparated);
}

TEST(Clusters, TaylorShiftMovesRoots) {
  // p(X) = (X - 2)(X + 1) = X^2 - X - 2; p(X - 3) has roots 5 and 2.
  CVec p{cplx{1.0}, cplx{-1.0}, cplx{-2.0}};
  auto s = detail::taylor_shift(p, cplx{3.0});
  auto eval = [&](cplx x) { return s[0] * x * x + s[1] * x + s[2]; };
  EXPECT_NEAR(std::abs(eval(5.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(eval(2.0)), 0.0, 1e-12);
}
