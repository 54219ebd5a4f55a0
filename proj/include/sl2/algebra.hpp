#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "sl2/errors.hpp"
#include "sl2/linalg.hpp"

namespace sl2 {

// Element x*A + y*B + z*C of the traceless 2x2 matrix algebra, in the basis
//   A = [[0,1],[1,0]],  B = [[1,0],[0,-1]],  C = [[0,1],[-1,0]].
struct LieVector {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline LieVector operator+(const LieVector& a, const LieVector& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline LieVector operator-(const LieVector& a, const LieVector& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline LieVector operator*(double s, const LieVector& v) { return {s * v.x, s * v.y, s * v.z}; }
inline LieVector operator-(const LieVector& v) { return {-v.x, -v.y, -v.z}; }

inline double norm_sq(const LieVector& v) { return v.x * v.x + v.y * v.y + v.z * v.z; }
inline double norm(const LieVector& v) { return std::sqrt(norm_sq(v)); }

inline Vec3 coords(const LieVector& v) { return {v.x, v.y, v.z}; }
inline LieVector lie_vector(const Vec3& v) { return {v.x, v.y, v.z}; }

// Real 2x2 matrix, row-major entries.
struct Mat2 {
  double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}
inline Mat2 operator*(double s, const Mat2& a) {
  return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
}
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

inline double trace(const Mat2& a) { return a.m11 + a.m22; }

inline double frobenius_sq(const Mat2& a) {
  return a.m11 * a.m11 + a.m12 * a.m12 + a.m21 * a.m21 + a.m22 * a.m22;
}

// Determinant with fma compensation: exact up to one rounding in the final sum.
inline double det(const Mat2& a) {
  const double w = a.m12 * a.m21;
  const double e = std::fma(a.m12, a.m21, -w);
  const double f = std::fma(a.m11, a.m22, -w);
  return f - e;
}

inline Mat2 inverse(const Mat2& a) {
  const double d = det(a);
  return {a.m22 / d, -a.m12 / d, -a.m21 / d, a.m11 / d};
}

// Member of SL(2,R): |det(mat) - 1| <= 1e-9 * max(1, ||mat||^2).
struct GroupElement {
  Mat2 mat;
};

inline bool is_special_linear(const Mat2& a, double tol = 1e-9) {
  return std::abs(det(a) - 1.0) <= tol * std::max(1.0, frobenius_sq(a));
}

namespace detail {

inline double ulp_of(double x) {
  x = std::abs(x);
  return std::nextafter(x, std::numeric_limits<double>::infinity()) - x;
}

// Nudge single entries by about an ulp until the stored determinant is 1 to
// within its quantization floor. Entry perturbations are capped at 1e-11.
inline Mat2 project_to_unit_det(Mat2 g) {
  for (int pass = 0; pass < 4; ++pass) {
    const double err = det(g) - 1.0;
    if (err == 0.0) break;
    double* entry[4] = {&g.m11, &g.m12, &g.m21, &g.m22};
    const double grad[4] = {g.m22, -g.m21, -g.m12, g.m11};  // d(det)/d(entry)
    int best = -1;
    double best_gran = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double cof = std::abs(grad[k]);
      if (cof == 0.0) continue;
      const double step = std::abs(err) / cof;
      if (step > 1e-11) continue;
      const double gran = cof * ulp_of(*entry[k]);
      if (best < 0 || gran < best_gran) {
        best = k;
        best_gran = gran;
      }
    }
    if (best < 0 || std::abs(err) <= 0.5 * best_gran) break;
    *entry[best] -= err / grad[best];
  }
  return g;
}

}  // namespace detail

struct Basis {
  Mat2 a, b, c;
};

inline Basis basis() {
  return {{0.0, 1.0, 1.0, 0.0}, {1.0, 0.0, 0.0, -1.0}, {0.0, 1.0, -1.0, 0.0}};
}

inline Mat2 to_matrix(const LieVector& h) {
  return {h.y, h.x + h.z, h.x - h.z, -h.y};
}

inline LieVector from_matrix(const Mat2& m, double tol = 1e-9) {
  if (std::abs(m.m11 + m.m22) > tol * std::max(1.0, frobenius_sq(m)))
    fail(errc::not_traceless, "matrix has nonzero trace");
  return {0.5 * (m.m12 + m.m21), m.m11, 0.5 * (m.m12 - m.m21)};
}

// Commutator [u, v] = UV - VU expressed back in basis coordinates.
// The trace of a commutator vanishes identically, so no trace check is needed.
inline LieVector bracket(const LieVector& u, const LieVector& v) {
  const Mat2 a = to_matrix(u), b = to_matrix(v);
  const Mat2 c = a * b - b * a;
  return {0.5 * (c.m12 + c.m21), c.m11, 0.5 * (c.m12 - c.m21)};
}

using AdMatrix = Mat3;

// Matrix of ad(h) = [h, .] in the (A, B, C) basis; column j is bracket(h, e_j).
// Its kernel is the line through h and its rank is 2 for h != 0.
inline AdMatrix ad(const LieVector& h) {
  Mat3 r;
  r.m = {{{0.0, -2.0 * h.z, 2.0 * h.y},
          {2.0 * h.z, 0.0, -2.0 * h.x},
          {2.0 * h.y, -2.0 * h.x, 0.0}}};
  return r;
}

// Killing form B(u, v) = tr(ad(u) ad(v)).
inline double killing(const LieVector& u, const LieVector& v) {
  const Mat3 a = ad(u), b = ad(v);
  double t = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t += a.m[i][j] * b.m[j][i];
  return t;
}

// Gram matrix of the Killing form in the (A, B, C) basis: diag(8, 8, -8).
inline Mat3 killing_gram() {
  Mat3 g;
  g.m[0][0] = 8.0;
  g.m[1][1] = 8.0;
  g.m[2][2] = -8.0;
  return g;
}

// det(to_matrix(h)) = z^2 - x^2 - y^2 = -killing(h, h)/8.
inline double det_form(const LieVector& h) {
  return h.z * h.z - h.x * h.x - h.y * h.y;
}

// Closed-form exponential. With M = to_matrix(h) and d = det(M), M^2 = -d*I,
// so exp(M) = c(d)*I + g(d)*M where c(d) = cos(sqrt(d)) and g(d) = sin(sqrt(d))/sqrt(d)
// continued analytically through d <= 0 (cosh/sinh branch).
inline GroupElement exp(const LieVector& h) {
  const Mat2 m = to_matrix(h);
  const double d = det_form(h);
  double c, g;
  if (std::abs(d) < 1e-12) {
    c = 1.0;
    g = 1.0;
  } else if (std::abs(d) < 1e-4) {
    // Both branches share one Taylor series in d; avoids cancellation near d = 0.
    c = 1.0 + d * (-1.0 / 2.0 + d * (1.0 / 24.0 + d * (-1.0 / 720.0 + d / 40320.0)));
    g = 1.0 + d * (-1.0 / 6.0 + d * (1.0 / 120.0 + d * (-1.0 / 5040.0 + d / 362880.0)));
  } else if (d > 0.0) {
    const double s = std::sqrt(d);
    c = std::cos(s);
    g = std::sin(s) / s;
  } else {
    const double s = std::sqrt(-d);
    c = std::cosh(s);
    g = std::sinh(s) / s;
  }
  Mat2 r{c + g * m.m11, g * m.m12, g * m.m21, c + g * m.m22};
  return GroupElement{detail::project_to_unit_det(r)};
}

// Adjoint action g h g^{-1}.
inline LieVector conjugate(const GroupElement& g, const LieVector& h) {
  const Mat2 m = g.mat * to_matrix(h) * inverse(g.mat);
  return {0.5 * (m.m12 + m.m21), m.m11, 0.5 * (m.m12 - m.m21)};
}

// The two strongest independent columns of ad(h); they span the tangent plane
// of the orbit through h (the third column is dependent, the kernel is h itself).
inline std::pair<Vec3, Vec3> independent_ad_columns(const LieVector& h) {
  const Mat3 a = ad(h);
  const Vec3 cols[3] = {column(a, 0), column(a, 1), column(a, 2)};
  int order[3] = {0, 1, 2};
  for (int i = 0; i < 2; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (norm_sq(cols[order[j]]) > norm_sq(cols[order[i]])) std::swap(order[i], order[j]);
  const Vec3 first = cols[order[0]];
  for (int i = 1; i < 3; ++i) {
    const Vec3 cand = cols[order[i]];
    if (norm(cross(first, cand)) > 1e-8 * norm(first) * norm(cand)) return {first, cand};
  }
  fail(errc::degenerate_point, "ad(h) has rank < 2");
}

}  // namespace sl2
