#pragma once

// Small fixed-size vector helpers and the cyclic index convention shared by
// every module. All pentagon data is stored zero-based and indices wrap
// mod 5.

#include <array>
#include <cmath>
#include <numbers>

namespace pentagramma {

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

// Golden ratio (1 + sqrt 5) / 2.
inline constexpr double kGolden = std::numbers::phi;

// Reduces any integer index onto 0..N-1.
template <int N = 5>
constexpr int cyc(int i) noexcept {
  const int m = i % N;
  return m < 0 ? m + N : m;
}

// A value repeated around a 5-cycle with wraparound indexing.
template <typename T>
struct Cycle5 {
  std::array<T, 5> values{};

  constexpr T& operator[](int i) noexcept { return values[cyc(i)]; }
  constexpr const T& operator[](int i) const noexcept { return values[cyc(i)]; }

  // Cyclic shift: result[i] = (*this)[i + by].
  constexpr Cycle5 shifted(int by) const noexcept {
    Cycle5 out;
    for (int i = 0; i < 5; ++i) out.values[i] = (*this)[i + by];
    return out;
  }

  friend constexpr bool operator==(const Cycle5&, const Cycle5&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) noexcept {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) noexcept { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) noexcept {
  const double n = norm(a);
  return {a[0] / n, a[1] / n, a[2] / n};
}

// Angle between two directions, stable for nearly parallel vectors.
inline double angle_between(const Vec3& a, const Vec3& b) noexcept {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

} // namespace pentagramma
