#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "sl2/sl2.hpp"

namespace testutil {

// Deterministic uniform doubles independent of distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  sl2::LieVector lie(double range) {
    return {uniform(-range, range), uniform(-range, range), uniform(-range, range)};
  }
  sl2::Vec3 vec3(double range) {
    return {uniform(-range, range), uniform(-range, range), uniform(-range, range)};
  }
  sl2::DualVector dual(double range) {
    return {uniform(-range, range), uniform(-range, range), uniform(-range, range)};
  }
  sl2::GroupElement group(double range = 2.0) {
    sl2::LieVector h = lie(range);
    const double n = sl2::norm(h);
    if (n > range) h = (range / n) * h;
    return sl2::exp(h);
  }

 private:
  std::mt19937_64 eng_;
};

// --- independent oracles (raw-double arithmetic, no library kernels) --------

using Raw2 = std::array<double, 4>;  // row-major 2x2

inline Raw2 raw_mul(const Raw2& a, const Raw2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Raw2 raw_from(const sl2::Mat2& m) { return {m.m11, m.m12, m.m21, m.m22}; }

// Truncated power series sum_{k=0}^{terms} M^k / k!.
inline Raw2 exp_series(const sl2::Mat2& m, int terms = 50) {
  const Raw2 a = raw_from(m);
  Raw2 sum{1.0, 0.0, 0.0, 1.0};
  Raw2 term{1.0, 0.0, 0.0, 1.0};
  for (int k = 1; k <= terms; ++k) {
    term = raw_mul(term, a);
    for (double& e : term) e /= static_cast<double>(k);
    for (int i = 0; i < 4; ++i) sum[i] += term[i];
  }
  return sum;
}

// Conjugation g m g^{-1} by plain 2x2 arithmetic.
inline Raw2 conjugate_oracle(const Raw2& g, const Raw2& m) {
  const double d = g[0] * g[3] - g[1] * g[2];
  const Raw2 ginv{g[3] / d, -g[1] / d, -g[2] / d, g[0] / d};
  return raw_mul(raw_mul(g, m), ginv);
}

// Killing form straight from the Gram matrix diag(8, 8, -8).
inline double killing_oracle(const sl2::LieVector& u, const sl2::LieVector& v) {
  return 8.0 * (u.x * v.x + u.y * v.y - u.z * v.z);
}

inline double max_abs_diff(const Raw2& a, const Raw2& b) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

inline double dist(const sl2::Vec3& a, const sl2::Vec3& b) { return sl2::norm(a - b); }

// Distance from a point to the line through `base` with direction `dir`.
inline double line_distance(const sl2::Vec3& p, const sl2::Vec3& base, const sl2::Vec3& dir) {
  const sl2::Vec3 d = (1.0 / sl2::norm(dir)) * dir;
  const sl2::Vec3 w = p - base;
  return sl2::norm(w - sl2::dot(w, d) * d);
}

}  // namespace testutil
