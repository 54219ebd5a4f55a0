#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "sl2/algebra.hpp"

namespace sl2 {

enum class OrbitTag {
  one_sheeted,
  two_sheeted_upper,
  two_sheeted_lower,
  cone_upper,
  cone_lower,
  zero,
};

inline const char* to_string(OrbitTag t) {
  switch (t) {
    case OrbitTag::one_sheeted: return "one_sheeted";
    case OrbitTag::two_sheeted_upper: return "two_sheeted_upper";
    case OrbitTag::two_sheeted_lower: return "two_sheeted_lower";
    case OrbitTag::cone_upper: return "cone_upper";
    case OrbitTag::cone_lower: return "cone_lower";
    case OrbitTag::zero: return "zero";
  }
  return "unknown";
}

inline bool has_lambda(OrbitTag t) {
  return t == OrbitTag::one_sheeted || t == OrbitTag::two_sheeted_upper ||
         t == OrbitTag::two_sheeted_lower;
}

// Orbit of the adjoint action: level set of x^2 + y^2 - z^2 together with the
// sign of z where the level set has two components.
struct OrbitClass {
  OrbitTag tag = OrbitTag::zero;
  double lambda = 0.0;  // > 0 for the hyperboloid classes, 0 otherwise
};

inline constexpr double kClassifyTol = 1e-9;

inline OrbitClass classify(const LieVector& h, double tol = kClassifyTol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("classify: tol must be >= 0");
  if (std::abs(h.x) <= tol && std::abs(h.y) <= tol && std::abs(h.z) <= tol)
    return {OrbitTag::zero, 0.0};
  const double q = h.x * h.x + h.y * h.y - h.z * h.z;
  if (std::abs(q) <= tol * std::max(1.0, norm_sq(h))) {
    if (std::abs(h.z) <= tol)
      fail(errc::indeterminate, "numerically on the cone with ambiguous sheet");
    return {h.z > 0.0 ? OrbitTag::cone_upper : OrbitTag::cone_lower, 0.0};
  }
  if (q > 0.0) return {OrbitTag::one_sheeted, std::sqrt(q)};
  return {h.z > 0.0 ? OrbitTag::two_sheeted_upper : OrbitTag::two_sheeted_lower, std::sqrt(-q)};
}

// Canonical representative of a class and an explicit SL(2,R) conjugator onto it.
struct NormalFormResult {
  GroupElement conjugator;
  LieVector representative;
  OrbitClass orbit_class;
};

namespace detail {

struct Col2 {
  double u = 0.0, v = 0.0;
};

// Unit vector with a deterministic sign: the component of largest magnitude is
// made positive, ties resolved toward the second component.
inline Col2 sign_normalized_unit(Col2 c) {
  const double n = std::hypot(c.u, c.v);
  c.u /= n;
  c.v /= n;
  const double lead = (std::abs(c.v) >= std::abs(c.u)) ? c.v : c.u;
  if (lead < 0.0) {
    c.u = -c.u;
    c.v = -c.v;
  }
  return c;
}

inline Col2 real_eigenvector(const Mat2& m, double lam) {
  const Col2 c1{m.m12, lam - m.m11};
  const Col2 c2{lam - m.m22, m.m21};
  const bool pick1 = c1.u * c1.u + c1.v * c1.v >= c2.u * c2.u + c2.v * c2.v;
  return sign_normalized_unit(pick1 ? c1 : c2);
}

inline Mat2 from_columns(const Col2& a, const Col2& b) { return {a.u, b.u, a.v, b.v}; }

}  // namespace detail

inline NormalFormResult normal_form(const LieVector& h) {
  const OrbitClass cls = classify(h);
  if (cls.tag == OrbitTag::zero) fail(errc::zero_input, "normal_form requires h != 0");

  const Mat2 m = to_matrix(h);
  Mat2 g;
  LieVector rep;

  switch (cls.tag) {
    case OrbitTag::one_sheeted: {
      // Diagonalize over R, push the eigenbasis into SL(2,R) by scaling its
      // first column with 1/det, then compose with the fixed diagonalizer of
      // lambda*A (columns (1,1)/sqrt2 and (-1,1)/sqrt2).
      const double lam = cls.lambda;
      const detail::Col2 vp = detail::real_eigenvector(m, lam);
      const detail::Col2 vm = detail::real_eigenvector(m, -lam);
      Mat2 q = detail::from_columns(vp, vm);
      const double dq = det(q);
      q.m11 /= dq;
      q.m21 /= dq;
      const double r = 1.0 / std::sqrt(2.0);
      const Mat2 q0{r, -r, r, r};
      g = q0 * inverse(q);
      rep = {lam, 0.0, 0.0};
      break;
    }
    case OrbitTag::two_sheeted_upper:
    case OrbitTag::two_sheeted_lower: {
      // Real Jordan form from the eigenvector (m12, i*lam - m11) for i*lam;
      // m12 = x + z cannot vanish on these orbits. The sign of det[u v]
      // decides which of the two rotation blocks is reachable inside SL(2,R),
      // hence the sheet.
      const double lam = cls.lambda;
      const detail::Col2 u{m.m12, -m.m11};
      const detail::Col2 v{0.0, lam};
      const double dq = u.u * v.v - v.u * u.v;
      Mat2 qt;
      if (dq > 0.0) {
        const double s = std::sqrt(dq);
        qt = {u.u / s, v.u / s, u.v / s, v.v / s};
        rep = {0.0, 0.0, lam};
      } else {
        const double s = std::sqrt(-dq);
        qt = {v.u / s, u.u / s, v.v / s, u.v / s};
        rep = {0.0, 0.0, -lam};
      }
      g = inverse(qt);
      break;
    }
    case OrbitTag::cone_upper:
    case OrbitTag::cone_lower: {
      // Nilpotent Jordan form: v2 is the standard basis vector with the larger
      // image column v1 = M v2, so M maps v2 -> v1 -> 0. Rescaling (v1, v2)
      // inside SL(2,R) reaches [[0,2],[0,0]] when det[v1 v2] > 0 and
      // [[0,-2],[0,0]] otherwise.
      const detail::Col2 c1{m.m11, m.m21};
      const detail::Col2 c2{m.m12, m.m22};
      const bool pick1 = c1.u * c1.u + c1.v * c1.v >= c2.u * c2.u + c2.v * c2.v;
      const detail::Col2 v1 = pick1 ? c1 : c2;
      const Mat2 q = pick1 ? Mat2{v1.u, 1.0, v1.v, 0.0} : Mat2{v1.u, 0.0, v1.v, 1.0};
      const double dq = det(q);
      double s, t;
      if (dq > 0.0) {
        s = 1.0 / std::sqrt(2.0 * dq);
        t = 2.0 * s;
        rep = {1.0, 0.0, 1.0};
      } else {
        s = 1.0 / std::sqrt(-2.0 * dq);
        t = -2.0 * s;
        rep = {-1.0, 0.0, -1.0};
      }
      const Mat2 qs{q.m11 * s, q.m12 * t, q.m21 * s, q.m22 * t};
      g = inverse(qs);
      break;
    }
    case OrbitTag::zero:
      break;  // unreachable
  }

  return {GroupElement{detail::project_to_unit_det(g)}, rep, cls};
}

// Conjugator from h to k when both lie on the same orbit; empty otherwise.
inline std::optional<GroupElement> same_orbit(const LieVector& h, const LieVector& k,
                                              double tol = kClassifyTol) {
  const OrbitClass a = classify(h, tol);
  const OrbitClass b = classify(k, tol);
  if (a.tag != b.tag) return std::nullopt;
  if (a.tag == OrbitTag::zero) return GroupElement{Mat2::identity()};
  if (has_lambda(a.tag)) {
    const double scale = std::max({1.0, a.lambda * a.lambda, b.lambda * b.lambda});
    if (std::abs(a.lambda - b.lambda) > tol * scale) return std::nullopt;
  }
  const NormalFormResult na = normal_form(h);
  const NormalFormResult nb = normal_form(k);
  const Mat2 g = inverse(nb.conjugator.mat) * na.conjugator.mat;
  return GroupElement{detail::project_to_unit_det(g)};
}

// Deterministic points exactly on the class quadric, by direct parametrization.
inline std::vector<LieVector> orbit_sample(const OrbitClass& cls, std::size_t n,
                                           std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("orbit_sample: n must be >= 1");
  std::vector<LieVector> out;
  out.reserve(n);
  if (cls.tag == OrbitTag::zero) {
    if (n > 1) fail(errc::zero_class_not_sampleable, "the zero class is a single point");
    out.push_back({0.0, 0.0, 0.0});
    return out;
  }
  if (has_lambda(cls.tag) && !(cls.lambda > 0.0))
    fail(errc::non_positive_lambda, "lambda must be > 0");

  std::mt19937_64 rng(seed);
  const auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double two_pi = 2.0 * 3.14159265358979323846;
  const double lam = cls.lambda;

  for (std::size_t i = 0; i < n; ++i) {
    const double theta = two_pi * unit();
    const double c = std::cos(theta), s = std::sin(theta);
    switch (cls.tag) {
      case OrbitTag::one_sheeted: {
        const double t = lam * (6.0 * unit() - 3.0);
        const double r = std::sqrt(lam * lam + t * t);
        out.push_back({r * c, r * s, t});
        break;
      }
      case OrbitTag::two_sheeted_upper:
      case OrbitTag::two_sheeted_lower: {
        const double r = 3.0 * lam * unit();
        const double z = std::sqrt(lam * lam + r * r);
        out.push_back({r * c, r * s, cls.tag == OrbitTag::two_sheeted_upper ? z : -z});
        break;
      }
      case OrbitTag::cone_upper:
      case OrbitTag::cone_lower: {
        const double r = 3.0 * (1.0 - unit());  // (0, 3]
        out.push_back({r * c, r * s, cls.tag == OrbitTag::cone_upper ? r : -r});
        break;
      }
      case OrbitTag::zero:
        break;  // unreachable
    }
  }
  return out;
}

}  // namespace sl2
