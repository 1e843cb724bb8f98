#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "orbitlift/invariants.hpp"
#include "orbitlift/lifting.hpp"
#include "orbitlift/matching.hpp"
#include "test_support.hpp"

using namespace orbitlift;
using namespace orbitlift::testing;

namespace {

double max_jump(const LiftedCurve& lift) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < lift.size(); ++i) worst = std::max(worst, distance2(lift.point(i + 1), lift.point(i)));
  return worst;
}

SampledGrid2D field(double cx, double cy, double radius, double hole, std::size_t n,
                    const std::function<CVec(cplx)>& f) {
  auto x = Grid::uniform(cx - radius, cx + radius, n), y = Grid::uniform(cy - radius, cy + radius, n);
  std::vector<CVec> v;
  std::vector<bool> mask;
  for (std::size_t iy = 0; iy < n; ++iy)
    for (std::size_t ix = 0; ix < n; ++ix) {
      double r = std::hypot(x[ix] - cx, y[iy] - cy);
      v.push_back(f(cplx{x[ix], y[iy]}));
      mask.push_back(r <= radius && r >= hole);
    }
  return SampledGrid2D(x, y, std::move(v), std::move(mask));
}

}  // namespace

TEST(Radical, PrincipalRoot) {
  EXPECT_NEAR(std::abs(principal_root(cplx{4.0, 0.0}, 2) - cplx{2.0, 0.0}), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(principal_root(cplx{-8.0, 0.0}, 3) - std::polar(2.0, M_PI / 3)), 0.0, 1e-14);
  EXPECT_EQ(principal_root(cplx{0.0, 0.0}, 5), cplx(0.0));
}

TEST(Radical, SquareRootOfIdentityThroughZero) {
  auto g = sample(Grid::uniform(-1.0, 1.0, 201), [](double t) { return CVec{cplx{t, 0.0}}; });
  auto lift = continuous_radical(g, 2);
  EXPECT_TRUE(lift.complete());
  EXPECT_LE(lift.residual, 1e-12);
  for (std::size_t i = 0; i < lift.size(); ++i)
    EXPECT_NEAR(std::abs(lift.point(i)[0]), std::sqrt(std::abs(lift.grid[i])), 1e-12);
}

TEST(Radical, OracleRefinementResolvesFastWinding) {
  CurveOracle oracle = [](double t) { return CVec{std::polar(1.0, 40.0 * t)}; };
  auto coarse = sample(Grid::uniform(0.0, 1.0, 5), oracle);
  auto refined = continuous_radical(coarse, 3, oracle);
  EXPECT_TRUE(refined.complete());
  EXPECT_GT(refined.size(), coarse.size());
  EXPECT_LT(max_jump(refined), std::sin(M_PI / 3));
  // The unrefined lift cannot tell the sheets apart and says so.
  auto blind = continuous_radical(coarse, 3);
  EXPECT_FALSE(blind.complete());
  EXPECT_FALSE(blind.diagnostic.empty());
  LiftOptions strict;
  strict.throw_on_budget = true;
  try {
    continuous_radical(coarse, 3, nullptr, strict);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RefinementBudgetExhausted);
  }
}

TEST(Roots, CrossingPairIsFollowedSmoothly) {
  // a = (0, -t^2): roots t and -t, which cross at 0.
  auto a = sample(Grid::uniform(-1.0, 1.0, 101), [](double t) { return CVec{cplx{0.0}, cplx{-t * t, 0.0}}; });
  auto lift = continuous_roots(a);
  EXPECT_LE(lift.residual, 1e-9);
  ASSERT_EQ(lift.branch_count(), 2u);
  double sign = lift.branches[0][0][0].real() / lift.grid[0];
  for (std::size_t i = 0; i < lift.size(); ++i) {
    EXPECT_NEAR(std::abs(lift.branches[0][i][0] - sign * lift.grid[i]), 0.0, 1e-7);
    EXPECT_NEAR(std::abs(lift.branches[1][i][0] + sign * lift.grid[i]), 0.0, 1e-7);
  }
}

TEST(Roots, ZeroRootWarmStartIsNotStuck) {
  // A root sits exactly at 0 at t = 0 and moves away afterwards.
  auto a = sample(Grid::uniform(0.0, 1.0, 51), [](double t) { return CVec{cplx{0.0}, cplx{0.0}, cplx{t, 0.0}}; });
  auto lift = continuous_roots(a);
  for (std::size_t i = 1; i < lift.size(); ++i)
    for (std::size_t b = 0; b < 3; ++b)
      EXPECT_NEAR(std::abs(lift.branches[b][i][0]), std::cbrt(lift.grid[i]), 1e-9);
}

TEST(Roots, RoundTripOnRandomCurves) {
  std::mt19937_64 rng(201);
  for (int inst = 0; inst < 20; ++inst) {
    const auto q = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    auto oracle = random_trig_curve(rng, q, 2);
    auto lift = continuous_roots(sample(Grid::uniform(0.0, 1.0, 101), oracle), oracle);
    for (std::size_t i = 0; i < lift.size(); ++i) {
      auto e = elementary_symmetric(lift.point(i));
      auto exact = oracle(lift.grid[i]);
      for (std::size_t k = 0; k < q; ++k) EXPECT_NEAR(std::abs(e[k] - exact[k]), 0.0, 1e-8);
    }
  }
}

TEST(TupleLift, StepMatchingEqualsBruteForce) {
  std::mt19937_64 rng(202);
  for (int inst = 0; inst < 100; ++inst) {
    const auto q = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    std::vector<AQPoint> seq;
    for (int s = 0; s < 6; ++s) {
      std::vector<CVec> pts;
      for (std::size_t i = 0; i < q; ++i) pts.push_back(random_points(rng, 2));
      seq.emplace_back(pts);
    }
    auto lift = lift_tuple_curve(seq);
    for (std::size_t s = 0; s + 1 < seq.size(); ++s) {
      double step = 0.0;
      for (std::size_t b = 0; b < q; ++b) {
        double d = distance2(lift.branches[b][s + 1], lift.branches[b][s]);
        step += d * d;
      }
      std::vector<std::size_t> perm(q);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      double best = std::numeric_limits<double>::infinity();
      do {
        double c = 0.0;
        for (std::size_t b = 0; b < q; ++b) {
          double d = distance2(lift.branches[b][s], seq[s + 1][perm[b]]);
          c += d * d;
        }
        best = std::min(best, c);
      } while (std::next_permutation(perm.begin(), perm.end()));
      EXPECT_NEAR(step, best, 1e-9);
    }
  }
}

TEST(ZeroExtension, RejectsJumpAtZeroSet) {
  LiftedCurve lift{Grid::uniform(0.0, 1.0, 5), {{{cplx{1.0}}, {cplx{1.0}}, {cplx{0.0}}, {cplx{0.0}}, {cplx{0.0}}}}};
  try {
    extend_through_zeros(lift, {true, true, false, false, false}, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DiscontinuousAtZeroSet);
  }
}

TEST(ZeroExtension, SubGridOverloadFillsZeros) {
  auto full = Grid::uniform(-1.0, 1.0, 9);
  LiftedCurve part{Grid({-1.0, -0.75, -0.5}), {{{cplx{0.5}}, {cplx{0.2}}, {cplx{0.05}}}}};
  auto ext = extend_through_zeros(part, full, 1.0);
  EXPECT_EQ(ext.lift.size(), 9u);
  EXPECT_EQ(ext.lift.point(5)[0], cplx(0.0));
  EXPECT_EQ(ext.norm, ext.norm_on_omega0);
  // Total variation of the piecewise linear extension.
  EXPECT_NEAR(ext.norm, 0.5, 1e-12);
}

TEST(Glue, SymmetricJunctionIsReconciled) {
  CurveOracle oracle = [](double t) { return CVec{cplx{0.0}, cplx{-(t + 2.0), 0.0}}; };
  auto left = continuous_roots(sample(Grid::uniform(0.0, 1.0, 11), oracle));
  auto right = continuous_roots(sample(Grid::uniform(1.0, 2.0, 11), oracle));
  std::swap(right.branches[0], right.branches[1]);
  auto glued = glue_lifts(left, right, RepresentationSpec::symmetric(2));
  EXPECT_EQ(glued.lift.size(), 21u);
  EXPECT_LE(glued.mismatch, 1e-12);
  EXPECT_LT(max_jump(glued.lift), 0.2);
}

TEST(Glue, CyclicJunctionUsesGroupElement) {
  CurveOracle g = [](double t) { return CVec{cplx{1.0 + t, 0.5}}; };
  auto left = continuous_radical(sample(Grid::uniform(0.0, 1.0, 11), g), 3);
  auto right = apply_group_element(RepresentationSpec::cyclic(3), 2,
                                   continuous_radical(sample(Grid::uniform(1.0, 2.0, 11), g), 3));
  auto glued = glue_lifts(left, right, RepresentationSpec::cyclic(3));
  EXPECT_EQ(glued.element, 1u);
  EXPECT_LE(glued.mismatch, 1e-12);
}

TEST(Glue, DifferentInvariantsCannotBeReconciled) {
  auto left = continuous_radical(sample(Grid::uniform(0.0, 1.0, 3), [](double) { return CVec{cplx{1.0}}; }), 2);
  auto right = continuous_radical(sample(Grid::uniform(1.0, 2.0, 3), [](double) { return CVec{cplx{4.0}}; }), 2);
  try {
    glue_lifts(left, right, RepresentationSpec::cyclic(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoReconcilingElement);
  }
}

TEST(Grid2D, SquareRootAnnulusIsObstructed) {
  auto f = field(0.0, 0.0, 1.0, 0.4, 31, [](cplx z) { return CVec{z}; });
  auto r = lift_grid_2d(f, RepresentationSpec::cyclic(2));
  ASSERT_EQ(r.report.status, MonodromyReport::Status::obstructed);
  EXPECT_GE(r.report.witness.size(), 4u);
}

TEST(Grid2D, SymmetricPairAnnulusIsObstructed) {
  // Roots ±sqrt(z) of X^2 - z.
  auto f = field(0.0, 0.0, 1.0, 0.4, 31, [](cplx z) { return CVec{cplx{0.0}, -z}; });
  auto r = lift_grid_2d(f, RepresentationSpec::symmetric(2));
  EXPECT_EQ(r.report.status, MonodromyReport::Status::obstructed);
}

TEST(Grid2D, DiskAwayFromZeroIsConsistent) {
  auto f = field(2.0, 0.0, 1.0, 0.0, 31, [](cplx z) { return CVec{z * z * z}; });
  auto r = lift_grid_2d(f, RepresentationSpec::cyclic(3));
  ASSERT_EQ(r.report.status, MonodromyReport::Status::consistent);
  EXPECT_TRUE(r.report.witness.empty());
  for (std::size_t iy = 0; iy < r.ny; ++iy)
    for (std::size_t ix = 0; ix < r.nx; ++ix)
      if (f.in_domain(ix, iy)) EXPECT_NEAR(std::abs(power_map(r.at(ix, iy)[0], 3) - f.at(ix, iy)[0]), 0.0, 1e-10);
}

TEST(Grid2D, QTupleIsRejected) {
  auto f = field(0.0, 0.0, 1.0, 0.0, 5, [](cplx z) { return CVec{z}; });
  EXPECT_THROW(lift_grid_2d(f, RepresentationSpec::qtuple(2, 2)), Error);
}
