#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace sl2;
using testutil::Rng;

TEST(GradF, Examples) {
  const Vec3 a = grad_f({1, 0, 0});
  EXPECT_EQ(norm(a), 0.0);
  const Vec3 b = grad_f({0, 1, 2});
  EXPECT_EQ(b.x, 0.0);
  EXPECT_EQ(b.y, 2.0);
  EXPECT_EQ(b.z, 1.0);
  Rng rng(301);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(grad_f(rng.vec3(10.0)).x, 0.0);
}

TEST(TangencyResidual, VanishesOnTheOrbit) {
  EXPECT_EQ(tangency_residual({1, 0, 0}, 1.0), 0.0);
  EXPECT_NEAR(tangency_residual({1, 1, 1}, 1.0), 0.0, 1e-12);
  const auto pts = orbit_sample({OrbitTag::one_sheeted, 1.0}, 1000, 17);
  for (const LieVector& p : pts)
    EXPECT_LE(std::abs(tangency_residual(coords(p), 1.0)), 1e-10);
  try {
    tangency_residual({5, 5, 0}, 1.0);
    FAIL() << "expected not_on_surface";
  } catch (const domain_error& e) {
    EXPECT_EQ(e.code(), errc::not_on_surface);
  }
}

TEST(CriticalPoints, TwoSaddleSeeds) {
  const auto one = critical_points(1.0);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].x, 1.0);
  EXPECT_EQ(one[1].x, -1.0);
  const auto two = critical_points(2.0);
  EXPECT_EQ(two[0].x, 2.0);
  EXPECT_EQ(two[1].x, -2.0);
  for (const Vec3& p : two) EXPECT_EQ(norm(grad_f(p)), 0.0);
  try {
    critical_points(-1.0);
    FAIL() << "expected non_positive_lambda";
  } catch (const domain_error& e) {
    EXPECT_EQ(e.code(), errc::non_positive_lambda);
  }
}

TEST(MorseData, SaddleAtBothCriticalPoints) {
  for (const double lam : {1.0, 2.0}) {
    for (const Vec3& p : critical_points(lam)) {
      const MorseData m = morse_data(p, lam);
      EXPECT_NEAR(m.restricted_hessian.m11, 0.0, 1e-12);
      EXPECT_NEAR(m.restricted_hessian.m12, 1.0, 1e-12);
      EXPECT_NEAR(m.restricted_hessian.m21, 1.0, 1e-12);
      EXPECT_NEAR(m.restricted_hessian.m22, 0.0, 1e-12);
      EXPECT_TRUE(m.nondegenerate);
      EXPECT_EQ(m.index, 1);
      const double d = m.restricted_hessian.m11 * m.restricted_hessian.m22 -
                       m.restricted_hessian.m12 * m.restricted_hessian.m21;
      EXPECT_NEAR(d, -1.0, 1e-12);
    }
  }
}

TEST(MorseData, RejectsNonCriticalPoints) {
  try {
    morse_data({1, 1, 1}, 1.0);
    FAIL() << "expected not_critical";
  } catch (const domain_error& e) {
    EXPECT_EQ(e.code(), errc::not_critical);
  }
}

TEST(FlowExact, ClosedFormTrajectories) {
  for (const double t : {-2.0, -0.5, 0.0, 0.7, 3.0}) {
    const Vec3 g1 = flow_exact({1, 1, 1}, t);
    EXPECT_NEAR(g1.x, 1.0, 0.0);
    EXPECT_NEAR(g1.y, std::exp(t), 1e-12 * std::exp(std::abs(t)));
    EXPECT_NEAR(g1.z, std::exp(t), 1e-12 * std::exp(std::abs(t)));
    const Vec3 g2 = flow_exact({1, -1, 1}, t);
    EXPECT_NEAR(g2.y, -std::exp(-t), 1e-12 * std::exp(std::abs(t)));
    EXPECT_NEAR(g2.z, std::exp(-t), 1e-12 * std::exp(std::abs(t)));
    const Vec3 fix = flow_exact({1, 0, 0}, t);
    EXPECT_EQ(fix.y, 0.0);
    EXPECT_EQ(fix.z, 0.0);
  }
}

TEST(FlowExact, ConservesTheQuadric) {
  Rng rng(303);
  for (int i = 0; i < 500; ++i) {
    const Vec3 p0 = rng.vec3(2.0);
    const double q0 = p0.x * p0.x + p0.y * p0.y - p0.z * p0.z;
    for (const double t : {-2.0, -1.0, 0.5, 1.5, 2.0}) {
      const Vec3 p = flow_exact(p0, t);
      const double q = p.x * p.x + p.y * p.y - p.z * p.z;
      EXPECT_NEAR(q, q0, 1e-12);
    }
  }
}

TEST(FlowNumeric, MatchesExactSolution) {
  const Trajectory tr = flow_numeric({1, 1, 1}, 2.0, 1e-3);
  const Vec3 want = flow_exact({1, 1, 1}, 2.0);
  EXPECT_LE(norm(tr.samples.back().p - want), 1e-6);
  EXPECT_NEAR(tr.samples.back().t, 2.0, 1e-12);
  // backward run
  const Trajectory bk = flow_numeric({1, 1, 1}, -2.0, 1e-3);
  EXPECT_LE(norm(bk.samples.back().p - flow_exact({1, 1, 1}, -2.0)), 1e-6);
}

TEST(FlowNumeric, AgreementBoundOverTime) {
  for (const double t_end : {1.0, 3.0, 5.0}) {
    const Trajectory tr = flow_numeric({0.5, 1.2, -0.3}, t_end, 1e-3);
    for (const TrajectorySample& s : tr.samples) {
      const Vec3 want = flow_exact({0.5, 1.2, -0.3}, s.t);
      EXPECT_LE(norm(s.p - want), 1e-8 * std::exp(std::abs(s.t)));
    }
  }
}

TEST(FlowNumeric, ConstantAtCriticalPoint) {
  const Trajectory tr = flow_numeric({1, 0, 0}, 5.0, 1e-2);
  for (const TrajectorySample& s : tr.samples) {
    EXPECT_EQ(s.p.x, 1.0);
    EXPECT_EQ(s.p.y, 0.0);
    EXPECT_EQ(s.p.z, 0.0);
  }
  EXPECT_EQ(tr.limit_forward.kind, LimitKind::converges_to);
  EXPECT_EQ(tr.limit_backward.kind, LimitKind::converges_to);
}

TEST(FlowNumeric, EscapesAtTheRadius) {
  const Trajectory tr = flow_numeric({1, 1, 1}, 20.0, 1e-3);
  EXPECT_EQ(tr.limit_forward.kind, LimitKind::escapes);
  EXPECT_EQ(tr.limit_backward.kind, LimitKind::converges_to);
  EXPECT_GT(norm(tr.samples.back().p), kEscapeRadius);
  // ||p(t)|| = sqrt(1 + 2 e^{2t}) crosses 1e6 at t = log(1e6/sqrt(2))
  EXPECT_NEAR(tr.samples.back().t, std::log(1e6 / std::sqrt(2.0)), 0.01);
}

TEST(FlowNumeric, QuadricDrift) {
  for (const double te : {5.0, -5.0}) {
    const Trajectory tr = flow_numeric({1, 1, 1}, te, 1e-3);
    for (const TrajectorySample& s : tr.samples) {
      const double q = s.p.x * s.p.x + s.p.y * s.p.y - s.p.z * s.p.z;
      EXPECT_LE(std::abs(q - 1.0), 1e-8);
    }
  }
}

TEST(FlowNumeric, ArgumentValidation) {
  EXPECT_THROW(flow_numeric({1, 1, 1}, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(flow_numeric({1, 1, 1}, 60.0, 1e-3), std::invalid_argument);
  try {
    flow_numeric({1, 1, 1}, 1.0, 0.5);
    FAIL() << "expected step_too_large";
  } catch (const domain_error& e) {
    EXPECT_EQ(e.code(), errc::step_too_large);
  }
}

TEST(ClassifyLimit, SeparatrixTrajectories) {
  const auto [f1, b1] = classify_limit({1, 1, 1}, 1.0);
  EXPECT_EQ(f1.kind, LimitKind::escapes);
  ASSERT_EQ(b1.kind, LimitKind::converges_to);
  EXPECT_EQ(b1.point.x, 1.0);
  EXPECT_EQ(b1.point.y, 0.0);
  EXPECT_EQ(b1.point.z, 0.0);

  const auto [f2, b2] = classify_limit({1, -1, 1}, 1.0);
  ASSERT_EQ(f2.kind, LimitKind::converges_to);
  EXPECT_EQ(f2.point.x, 1.0);
  EXPECT_EQ(b2.kind, LimitKind::escapes);

  const double r2 = std::sqrt(2.0);
  const auto [f3, b3] = classify_limit({r2, 1, 1}, r2);
  EXPECT_EQ(f3.kind, LimitKind::escapes);
  ASSERT_EQ(b3.kind, LimitKind::converges_to);
  EXPECT_EQ(b3.point.x, r2);

  try {
    classify_limit({2, 2, 2}, 1.0);
    FAIL() << "expected not_on_surface";
  } catch (const domain_error& e) {
    EXPECT_EQ(e.code(), errc::not_on_surface);
  }
}

TEST(ClassifyLimit, CriticalPointsConvergeBothWays) {
  const auto [f, b] = classify_limit({-1, 0, 0}, 1.0);
  ASSERT_EQ(f.kind, LimitKind::converges_to);
  ASSERT_EQ(b.kind, LimitKind::converges_to);
  EXPECT_EQ(f.point.x, -1.0);
  EXPECT_EQ(b.point.x, -1.0);
}

// Trajectories started on a ruling line stay on it: the rulings through
// (lambda, 0, 0) are the invariant manifolds of the saddle.
TEST(FlowNumeric, StaysOnRulingLines) {
  const auto [l1, l2] = base_lines(1.0);
  for (const RulingLine* line : {&l1, &l2}) {
    for (const double t0 : {0.3, -1.7, 2.5}) {
      const Vec3 p0 = point_at(*line, t0);
      for (const double te : {5.0, -5.0}) {
        const Trajectory tr = flow_numeric(p0, te, 1e-3);
        for (const TrajectorySample& s : tr.samples)
          EXPECT_LE(testutil::line_distance(s.p, line->base, line->dir), 1e-8);
      }
    }
  }
}

TEST(Trajectory, SamplesHaveStrictlyIncreasingTimes) {
  const Trajectory tr = flow_numeric({1, 0.5, 0.25}, 1.0, 1e-2);
  for (std::size_t i = 1; i < tr.samples.size(); ++i)
    EXPECT_GT(tr.samples[i].t, tr.samples[i - 1].t);
  const Trajectory bk = flow_numeric({1, 0.5, 0.25}, -1.0, 1e-2);
  for (std::size_t i = 1; i < bk.samples.size(); ++i)
    EXPECT_LT(bk.samples[i].t, bk.samples[i - 1].t);
}
