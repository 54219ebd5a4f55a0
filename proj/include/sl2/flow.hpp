#pragma once

#include <cmath>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "sl2/algebra.hpp"
#include "sl2/errors.hpp"
#include "sl2/linalg.hpp"

namespace sl2 {

// Gradient of f(x, y, z) = yz; tangent to every orbit x^2 + y^2 - z^2 = const.
inline Vec3 grad_f(const Vec3& p) { return {0.0, p.z, p.y}; }

inline constexpr double kEscapeRadius = 1e6;
inline constexpr double kMaxFlowTime = 50.0;
inline constexpr double kMaxStep = 0.1;

struct TrajectorySample {
  double t = 0.0;
  Vec3 p;
};

enum class LimitKind { converges_to, escapes };

struct LimitTag {
  LimitKind kind = LimitKind::escapes;
  Vec3 point;  // meaningful when kind == converges_to
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  LimitTag limit_forward;
  LimitTag limit_backward;
};

// Limit behaviour of the flow of yz from p0, in both time directions.
// In the (y, z) plane the general solution is c1 e^{-t} (-1, 1) + c2 e^t (1, 1);
// a direction converges (to the critical point (x0, 0, 0)) exactly when its
// growing coefficient vanishes.
inline std::pair<LimitTag, LimitTag> flow_limits(const Vec3& p0) {
  const Vec3 crit{p0.x, 0.0, 0.0};
  const double n = std::hypot(p0.y, p0.z);
  if (n == 0.0) return {{LimitKind::converges_to, crit}, {LimitKind::converges_to, crit}};
  const double c1 = 0.5 * (p0.z - p0.y);
  const double c2 = 0.5 * (p0.y + p0.z);
  const LimitTag fwd = std::abs(c2) <= 1e-12 * n ? LimitTag{LimitKind::converges_to, crit}
                                                 : LimitTag{LimitKind::escapes, {}};
  const LimitTag bwd = std::abs(c1) <= 1e-12 * n ? LimitTag{LimitKind::converges_to, crit}
                                                 : LimitTag{LimitKind::escapes, {}};
  return {fwd, bwd};
}

inline void require_on_surface(const Vec3& p, double lambda, const char* who) {
  if (std::abs(p.x * p.x + p.y * p.y - p.z * p.z - lambda * lambda) >
      1e-8 * std::max(1.0, lambda * lambda))
    fail(errc::not_on_surface, std::string(who) + ": point is not on the orbit");
}

// Inner product of grad_f with the surface gradient (2x, 2y, -2z);
// identically zero on the orbit.
inline double tangency_residual(const Vec3& p, double lambda) {
  require_on_surface(p, lambda, "tangency_residual");
  return dot(grad_f(p), Vec3{2.0 * p.x, 2.0 * p.y, -2.0 * p.z});
}

inline std::vector<Vec3> critical_points(double lambda) {
  if (!(lambda > 0.0)) fail(errc::non_positive_lambda, "critical_points requires lambda > 0");
  return {{lambda, 0.0, 0.0}, {-lambda, 0.0, 0.0}};
}

struct MorseData {
  Vec3 point;
  Mat2 restricted_hessian;
  bool nondegenerate = false;
  int index = 0;
};

// Restriction of Hess(f) = [[0,0,0],[0,0,1],[0,1,0]] to an orthonormal tangent
// basis built from the columns of ad(p). Both critical points are saddles.
inline MorseData morse_data(const Vec3& p, double lambda) {
  if (!(lambda > 0.0)) fail(errc::non_positive_lambda, "morse_data requires lambda > 0");
  if (norm(grad_f(p)) > 1e-8 * std::max(1.0, lambda))
    fail(errc::not_critical, "grad_f does not vanish at p");
  if (std::abs(p.x * p.x + p.y * p.y - p.z * p.z - lambda * lambda) >
      1e-8 * std::max(1.0, lambda * lambda))
    fail(errc::not_critical, "p is not on the orbit");

  auto [e1, e2] = independent_ad_columns(lie_vector(p));
  // Orthonormalize, then fix signs the same way eigenvectors are fixed:
  // largest-magnitude component positive, ties toward later components.
  e1 = (1.0 / norm(e1)) * e1;
  e2 = e2 - dot(e2, e1) * e1;
  e2 = (1.0 / norm(e2)) * e2;
  const auto sign_fix = [](Vec3 v) {
    double lead = v.z;
    if (std::abs(v.y) > std::abs(lead)) lead = v.y;
    if (std::abs(v.x) > std::abs(lead)) lead = v.x;
    return lead < 0.0 ? -v : v;
  };
  e1 = sign_fix(e1);
  e2 = sign_fix(e2);

  const auto hess = [](const Vec3& v) { return Vec3{0.0, v.z, v.y}; };
  const Mat2 r{dot(e1, hess(e1)), dot(e1, hess(e2)), dot(e2, hess(e1)), dot(e2, hess(e2))};

  const double d = r.m11 * r.m22 - r.m12 * r.m21;
  const bool nondeg = std::abs(d) > 1e-10;
  const double tr = r.m11 + r.m22;
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * d));
  const double ev1 = 0.5 * (tr - disc), ev2 = 0.5 * (tr + disc);
  const int index = (ev1 < 0.0 ? 1 : 0) + (ev2 < 0.0 ? 1 : 0);
  return {p, r, nondeg, index};
}

// x stays fixed; (y, z) evolves under [[0,1],[1,0]], solved by cosh/sinh.
inline Vec3 flow_exact(const Vec3& p0, double t) {
  const double ch = std::cosh(t), sh = std::sinh(t);
  return {p0.x, p0.y * ch + p0.z * sh, p0.z * ch + p0.y * sh};
}

// Classical fourth-order Runge-Kutta on p' = grad_f(p), integrated in ambient
// space with no projection; the invariant x^2 + y^2 - z^2 is monitored by
// tests, not enforced. Stops early once ||p|| exceeds the escape radius.
inline Trajectory flow_numeric(const Vec3& p0, double t_end, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("flow_numeric: step must be > 0");
  if (h > kMaxStep) fail(errc::step_too_large, "step exceeds 0.1");
  if (!(std::abs(t_end) <= kMaxFlowTime))
    throw std::invalid_argument("flow_numeric: |t_end| must be <= 50");

  Trajectory traj;
  std::tie(traj.limit_forward, traj.limit_backward) = flow_limits(p0);

  Vec3 p = p0;
  double t = 0.0;
  const double dir = t_end >= 0.0 ? 1.0 : -1.0;
  const double total = std::abs(t_end);
  const auto nsteps = static_cast<std::size_t>(std::max(0.0, std::ceil(total / h - 1e-9)));

  traj.samples.reserve(nsteps + 1);
  traj.samples.push_back({t, p});
  for (std::size_t k = 1; k <= nsteps; ++k) {
    const double target = dir * std::min(h * static_cast<double>(k), total);
    const double step = target - t;
    const Vec3 k1 = grad_f(p);
    const Vec3 k2 = grad_f(p + (0.5 * step) * k1);
    const Vec3 k3 = grad_f(p + (0.5 * step) * k2);
    const Vec3 k4 = grad_f(p + step * k3);
    p = p + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t = target;
    traj.samples.push_back({t, p});
    if (norm(p) > kEscapeRadius) break;
  }
  return traj;
}

// Limit tags for a point on the orbit of parameter lambda.
inline std::pair<LimitTag, LimitTag> classify_limit(const Vec3& p0, double lambda) {
  require_on_surface(p0, lambda, "classify_limit");
  return flow_limits(p0);
}

}  // namespace sl2
