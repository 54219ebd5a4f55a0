#pragma once

#include <cmath>

#include "sl2/algebra.hpp"
#include "sl2/errors.hpp"
#include "sl2/linalg.hpp"

namespace sl2 {

// Functional in the basis dual to (A, B, C).
struct DualVector {
  double a = 0.0, b = 0.0, c = 0.0;
};

inline double pairing(const DualVector& xi, const LieVector& v) {
  return xi.a * v.x + xi.b * v.y + xi.c * v.z;
}

inline DualVector apply(const Mat3& m, const DualVector& xi) {
  const Vec3 r = m * Vec3{xi.a, xi.b, xi.c};
  return {r.x, r.y, r.z};
}

// Tangent vector to the orbit through `base`, in ambient coordinates.
// Membership in Im(ad(base)) is equivalent to x vx + y vy - z vz = 0.
struct TangentVector {
  LieVector base;
  Vec3 vec;
};

inline bool satisfies_tangency(const TangentVector& tv, double tol = 1e-9) {
  const double r = tv.base.x * tv.vec.x + tv.base.y * tv.vec.y - tv.base.z * tv.vec.z;
  return std::abs(r) <= tol * std::max(1.0, norm(tv.base) * norm(tv.vec));
}

// Killing identification g -> g*: phi(h) pairs with u as killing(u, h).
inline DualVector phi(const LieVector& h) { return {8.0 * h.x, 8.0 * h.y, -8.0 * h.z}; }

// Coadjoint representation of the algebra: <coad(u) xi, v> = -xi([u, v]).
inline Mat3 coad(const LieVector& u) { return -1.0 * transpose(ad(u)); }

// Coadjoint representation of the group: <coAd(g) xi, X> = <xi, Ad_{g^-1} X>.
inline Mat3 coAd(const GroupElement& g) {
  const GroupElement ginv{inverse(g.mat)};
  const LieVector images[3] = {conjugate(ginv, {1.0, 0.0, 0.0}),
                               conjugate(ginv, {0.0, 1.0, 0.0}),
                               conjugate(ginv, {0.0, 0.0, 1.0})};
  Mat3 r;  // row i of the result is the coordinate vector of Ad_{g^-1} e_i
  for (int j = 0; j < 3; ++j) {
    r.m[j][0] = images[j].x;
    r.m[j][1] = images[j].y;
    r.m[j][2] = images[j].z;
  }
  return r;
}

// The Killing-orthogonal solution a of ad(p) a = v. Cayley-Hamilton gives
// ad(p)^3 = -4 det_form(p) ad(p), so for v in the image the solution is
// a = -ad(p) v / (4 det_form(p)), and killing(a, p) = 0 automatically.
// Any other solution differs by a multiple of p (the kernel of ad(p)).
inline LieVector tangent_lift(const LieVector& p, const Vec3& v) {
  const double d = det_form(p);
  if (std::abs(d) <= 1e-12 * std::max(1.0, norm_sq(p)))
    fail(errc::degenerate_point, "tangent_lift is not defined on the cone classes");
  const Mat3 adp = ad(p);
  const Vec3 a = (-1.0 / (4.0 * d)) * (adp * v);
  const double residual = norm(adp * a - v);
  if (residual > 1e-8 * std::max({1.0, norm(v), norm(p) * norm(a)}))
    fail(errc::not_tangent, "v is not in the image of ad(p)");
  return lie_vector(a);
}

// Symplectic form transported from the coadjoint orbit:
// omega_p(v, w) = killing(p, [lift(v), lift(w)]). The value is independent of
// the choice of lifts because killing(p, [p, .]) = 0.
inline double kks(const LieVector& p, const Vec3& v, const Vec3& w) {
  const LieVector a = tangent_lift(p, v);
  const LieVector b = tangent_lift(p, w);
  return killing(p, bracket(a, b));
}

// Cyclic sum -xi([[x,y],z]) + xi([[x,z],y]) - xi([[y,z],x]); vanishes by the
// Jacobi identity, which is what makes the form closed.
inline double jacobi_cyclic(const DualVector& xi, const LieVector& x, const LieVector& y,
                            const LieVector& z) {
  return -pairing(xi, bracket(bracket(x, y), z)) + pairing(xi, bracket(bracket(x, z), y)) -
         pairing(xi, bracket(bracket(y, z), x));
}

// |kks(p, e1, e2)| on a tangent basis from ad(p); positive certifies that the
// form is non-degenerate at p.
inline double nondegeneracy_check(const LieVector& p) {
  const auto [e1, e2] = independent_ad_columns(p);
  const double val = std::abs(kks(p, e1, e2));
  if (val <= 1e-10 * std::max(1.0, norm(p) * norm_sq(p)))
    fail(errc::degenerate_point, "kks vanished on a tangent basis");
  return val;
}

}  // namespace sl2
