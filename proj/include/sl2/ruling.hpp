#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "sl2/errors.hpp"
#include "sl2/linalg.hpp"

namespace sl2 {

enum class RulingFamily { f1, f2 };

inline const char* to_string(RulingFamily f) { return f == RulingFamily::f1 ? "f1" : "f2"; }

// Line contained in the surface x^2 + y^2 - z^2 = lambda^2.
// dir is normalized so that dir.z == -1.
struct RulingLine {
  Vec3 base;
  Vec3 dir;
  RulingFamily family = RulingFamily::f1;
  double lambda = 0.0;
};

inline Vec3 point_at(const RulingLine& l, double t) { return l.base + t * l.dir; }

inline double surface_residual(const Vec3& p, double lambda) {
  return p.x * p.x + p.y * p.y - p.z * p.z - lambda * lambda;
}

// The residual along a line is quadratic in t, so vanishing at t = -1, 0, 1
// forces it to vanish identically.
inline bool contains(const RulingLine& line, double lambda) {
  const double tol = 1e-10 * std::max(1.0, lambda * lambda);
  for (const double t : {-1.0, 0.0, 1.0})
    if (std::abs(surface_residual(point_at(line, t), lambda)) > tol) return false;
  return true;
}

// The two rulings through (lambda, 0, 0): directions (0, 1, -1) and (0, -1, -1).
inline std::pair<RulingLine, RulingLine> base_lines(double lambda) {
  if (!(lambda > 0.0)) fail(errc::non_positive_lambda, "base_lines requires lambda > 0");
  const Vec3 base{lambda, 0.0, 0.0};
  return {RulingLine{base, {0.0, 1.0, -1.0}, RulingFamily::f1, lambda},
          RulingLine{base, {0.0, -1.0, -1.0}, RulingFamily::f2, lambda}};
}

inline Vec3 rotate_z(const Vec3& v, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

// Rotation about the z-axis maps rulings to rulings within the same family.
inline RulingLine rotate_line(const RulingLine& line, double theta) {
  return {rotate_z(line.base, theta), rotate_z(line.dir, theta), line.family, line.lambda};
}

// The unique line of each family through a surface point. The angle solves a
// 2x2 linear system whose determinant lambda^2 + z0^2 is always positive.
inline std::pair<RulingLine, RulingLine> lines_through_point(const Vec3& p, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lines_through_point: lambda must be > 0");
  if (std::abs(surface_residual(p, lambda)) > 1e-8 * std::max(1.0, lambda * lambda))
    fail(errc::not_on_surface, "point is not on the hyperboloid");

  const auto [l1, l2] = base_lines(lambda);
  const double den = lambda * lambda + p.z * p.z;

  // Family 1: rotated base point at t = -z0 is
  // (lam cos + z0 sin, lam sin - z0 cos, z0).
  const double c1 = (lambda * p.x - p.z * p.y) / den;
  const double s1 = (p.z * p.x + lambda * p.y) / den;
  // Family 2: same construction with direction (0, -1, -1).
  const double c2 = (lambda * p.x + p.z * p.y) / den;
  const double s2 = (lambda * p.y - p.z * p.x) / den;

  return {rotate_line(l1, std::atan2(s1, c1)), rotate_line(l2, std::atan2(s2, c2))};
}

// Recover the family intrinsically: slide the base point onto the z = 0
// circle, rotate it to (lambda, 0, 0) and compare directions.
inline RulingFamily family_of(const RulingLine& line) {
  const double lam = line.lambda;
  if (!(lam > 0.0)) fail(errc::not_a_ruling, "line has non-positive lambda");

  RulingLine l = line;
  if (l.dir.z == 0.0) fail(errc::not_a_ruling, "direction is horizontal");
  if (l.dir.z != -1.0) l.dir = (-1.0 / l.dir.z) * l.dir;
  if (!contains(l, lam)) fail(errc::not_a_ruling, "line does not lie on the surface");

  const Vec3 b0 = point_at(l, l.base.z);  // z component is 0 here
  const Vec3 d0 = rotate_z(l.dir, -std::atan2(b0.y, b0.x));
  const double tol = 1e-8 * std::max(1.0, lam);
  if (std::abs(d0.x) <= tol && std::abs(d0.y - 1.0) <= tol) return RulingFamily::f1;
  if (std::abs(d0.x) <= tol && std::abs(d0.y + 1.0) <= tol) return RulingFamily::f2;
  fail(errc::not_a_ruling, "direction matches neither family");
}

}  // namespace sl2
