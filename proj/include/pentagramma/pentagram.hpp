#pragma once

// Napier's rules for right spherical triangles and the algebra of the
// self-polar spherical pentagon.
//
// Conventions: everything is zero-based and cyclic mod 5. Pentagon side i
// joins vertices i+2 and i+3, alpha_i = tan^2 of side i, and the defining
// relation reads 1 + alpha_i = alpha_{i+2} * alpha_{i+3}.

#include "pentagramma/errors.hpp"
#include "pentagramma/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace pentagramma {

// The five circular parts (a, b, pi/2 - A, pi/2 - c, pi/2 - B) of a right
// spherical triangle with legs a, b, hypotenuse c and angles A, B.
struct NapierParts {
  Cycle5<double> parts;

  double operator[](int i) const noexcept { return parts[i]; }
  friend bool operator==(const NapierParts&, const NapierParts&) = default;
};

// Parts of the right triangle with legs a, b in (0, pi/2).
inline NapierParts right_triangle_parts(double a, double b) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(a > 0.0 && a < half_pi && b > 0.0 && b < half_pi)) {
    throw DomainError("right triangle legs must lie in (0, pi/2)");
  }
  const double c = std::acos(std::cos(a) * std::cos(b));
  const double angle_a = std::atan2(std::tan(a), std::sin(b));
  const double angle_b = std::atan2(std::tan(b), std::sin(a));
  return {{{a, b, half_pi - angle_a, half_pi - c, half_pi - angle_b}}};
}

// Napierian rotation: cyclic shift by one position.
inline NapierParts napier_rotate(const NapierParts& t) noexcept { return {t.parts.shifted(1)}; }

// Gaussian reflection in a vertex, i.e. the rotation applied twice.
inline NapierParts gauss_reflect(const NapierParts& t) noexcept { return napier_rotate(napier_rotate(t)); }

// Residuals of both rules at all five middle parts. Entries 0..4 are rule I
// (sin middle = tan * tan of the adjacent parts), entries 5..9 are rule II
// (sin middle = cos * cos of the opposite parts).
inline std::array<double, 10> verify_napier(const NapierParts& t) noexcept {
  std::array<double, 10> out{};
  for (int i = 0; i < 5; ++i) {
    const double middle = std::sin(t[i]);
    out[i] = middle - std::tan(t[i - 1]) * std::tan(t[i + 1]);
    out[5 + i] = middle - std::cos(t[i + 2]) * std::cos(t[i + 3]);
  }
  return out;
}

inline double max_abs(const auto& values) noexcept {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

// Five positive squared tangents of the pentagon sides.
class AlphaCycle {
public:
  static constexpr double kMin = 1e-8;
  static constexpr double kMax = 1e8;

  AlphaCycle() = default;

  explicit AlphaCycle(const std::array<double, 5>& values) : values_{values} {
    for (double a : values) {
      if (!(a >= kMin && a <= kMax)) {
        throw DomainError("alpha entries must lie in [1e-8, 1e8] (got " + std::to_string(a) + ")");
      }
    }
  }

  double operator[](int i) const noexcept { return values_[i]; }
  const std::array<double, 5>& values() const noexcept { return values_.values; }

  // 1 + alpha_i - alpha_{i+2} alpha_{i+3} for each i.
  std::array<double, 5> relation_residuals() const noexcept {
    std::array<double, 5> out{};
    for (int i = 0; i < 5; ++i) out[i] = 1.0 + values_[i] - values_[i + 2] * values_[i + 3];
    return out;
  }

  // Largest residual relative to the size of the terms involved.
  double max_relative_residual() const noexcept {
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double scale = std::max(1.0 + values_[i], values_[i + 2] * values_[i + 3]);
      worst = std::max(worst, std::abs(1.0 + values_[i] - values_[i + 2] * values_[i + 3]) / scale);
    }
    return worst;
  }

  double product() const noexcept {
    double p = 1.0;
    for (double a : values_.values) p *= a;
    return p;
  }

  AlphaCycle shifted(int by) const { return AlphaCycle(values_.shifted(by).values); }

private:
  Cycle5<double> values_{};
};

inline AlphaCycle alphas_from_sides(const std::array<double, 5>& sides) {
  std::array<double, 5> alphas{};
  for (int i = 0; i < 5; ++i) {
    const double p = sides[i];
    if (!(p > 0.0 && p < std::numbers::pi / 2)) {
      throw DomainError("pentagon sides must lie in (0, pi/2)");
    }
    const double t = std::tan(p);
    alphas[i] = t * t;
  }
  return AlphaCycle(alphas);
}

inline std::array<double, 5> sides_from_alphas(const AlphaCycle& c) noexcept {
  std::array<double, 5> sides{};
  for (int i = 0; i < 5; ++i) sides[i] = std::atan(std::sqrt(c[i]));
  return sides;
}

// Completes the pentagon from alpha_0 and alpha_2.
inline AlphaCycle complete_from_two(double alpha, double gamma) {
  if (!(alpha > 0.0 && gamma > 0.0)) {
    throw DomainError("alpha and gamma must be positive");
  }
  const double beta = (1.0 + alpha + gamma) / (alpha * gamma);
  const double delta = (1.0 + alpha) / gamma;
  const double epsilon = (1.0 + gamma) / alpha;
  return AlphaCycle({alpha, beta, gamma, delta, epsilon});
}

struct PentagramInvariants {
  double sum_form;   // 3 + sum alpha_i
  double product;    // prod alpha_i
  double sqrt_form;  // sqrt(prod (1 + alpha_i))
};

inline PentagramInvariants pentagram_invariants(const AlphaCycle& c) noexcept {
  double sum = 3.0;
  double shifted = 1.0;
  for (double a : c.values()) {
    sum += a;
    shifted *= 1.0 + a;
  }
  return {sum, c.product(), std::sqrt(shifted)};
}

// Parts of the right triangle cut off at pentagon index i. For i = 0 this is
// (p1', p4', p2', p0', p3') with p' = pi/2 - p; the others follow by
// Gaussian reflection.
inline NapierParts pentagon_triangle_parts(const AlphaCycle& c, int i) noexcept {
  const auto sides = sides_from_alphas(c);
  auto co = [&](int j) { return std::numbers::pi / 2 - sides[cyc(j)]; };
  return {{{co(i + 1), co(i + 4), co(i + 2), co(i), co(i + 3)}}};
}

struct SpherePentagon {
  std::array<Vec3, 5> vertices{};
  std::array<double, 5> sides{};

  // <P_{k-1}, P_{k+1}> for each k; all zero for a genuine pentagon.
  std::array<double, 5> orthogonality_residuals() const noexcept {
    std::array<double, 5> out{};
    for (int k = 0; k < 5; ++k) out[k] = dot(vertices[cyc(k - 1)], vertices[cyc(k + 1)]);
    return out;
  }

  // tan^2 of the arcs joining vertices i+2 and i+3.
  std::array<double, 5> measured_alphas() const noexcept {
    std::array<double, 5> out{};
    for (int i = 0; i < 5; ++i) {
      const double t = std::tan(angle_between(vertices[cyc(i + 2)], vertices[cyc(i + 3)]));
      out[i] = t * t;
    }
    return out;
  }
};

// Vertices on the unit sphere with P2 = (1,0,0) and P0 = (0,1,0).
inline SpherePentagon build_sphere_vertices(const AlphaCycle& c, double tol = 1e-10) {
  const auto p = sides_from_alphas(c);
  SpherePentagon out;
  out.sides = p;
  out.vertices[2] = {1.0, 0.0, 0.0};
  out.vertices[0] = {0.0, 1.0, 0.0};
  out.vertices[4] = {0.0, std::cos(p[2]), std::sin(p[2])};
  out.vertices[3] = {std::cos(p[0]), 0.0, std::sin(p[0])};
  // Along the ray perpendicular to the plane of P3 and P4; unit length only
  // when the cycle is consistent, so normalise and let the checks decide.
  out.vertices[1] = normalized({std::cos(p[4]), std::cos(p[3]), -std::cos(p[2]) * std::sin(p[4])});

  const double worst = max_abs(out.orthogonality_residuals());
  if (!(worst <= tol)) {
    throw InvariantError("alpha cycle is not a Napier pentagon (orthogonality residual " +
                         std::to_string(worst) + ")");
  }
  const auto measured = out.measured_alphas();
  for (int i = 0; i < 5; ++i) {
    if (!(std::abs(measured[i] - c[i]) <= tol * std::max(1.0, c[i]))) {
      throw InvariantError("rebuilt pentagon sides disagree with the alpha cycle");
    }
  }
  return out;
}

} // namespace pentagramma
