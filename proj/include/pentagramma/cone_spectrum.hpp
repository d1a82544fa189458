#pragma once

// The quadratic cone through the pentagon vertices, its characteristic cubic
//
//     t (2t - 1)^2 = omega (t - 1),   omega = prod alpha_i,
//
// and the passage from the three real roots to the elliptic modulus.

#include "pentagramma/errors.hpp"
#include "pentagramma/geometry.hpp"
#include "pentagramma/pentagram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace pentagramma {

// z^2 + p xz + q yz + r xy = 0
struct ConeQuadric {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;

  double evaluate(const Vec3& v) const noexcept {
    const auto [x, y, z] = v;
    return z * z + p * x * z + q * y * z + r * x * y;
  }
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

inline ConeQuadric cone_coefficients(double alpha, double gamma) {
  if (!(alpha > 0.0 && gamma > 0.0)) {
    throw DomainError("cone coefficients need alpha, gamma > 0");
  }
  return {-std::sqrt(alpha), -std::sqrt(gamma), -(1.0 + alpha + gamma) / std::sqrt(alpha * gamma)};
}

inline Matrix3 characteristic_matrix(const ConeQuadric& c) noexcept {
  return {{{0.0, c.r / 2, c.p / 2}, {c.r / 2, 0.0, c.q / 2}, {c.p / 2, c.q / 2, 1.0}}};
}

// omega_0 = golden^5 = (11 + 5 sqrt 5) / 2.
inline double critical_omega() noexcept { return (11.0 + 5.0 * std::sqrt(5.0)) / 2.0; }

// The roots of the characteristic cubic ordered G < 0 < G' <= G''.
struct SpectralTriple {
  double G = 0.0;
  double Gp = 0.0;
  double Gpp = 0.0;
  double omega = 0.0;

  // Value of t (2t-1)^2 - omega (t-1) at each root.
  std::array<double, 3> root_residuals() const noexcept {
    auto f = [this](double t) { return t * (2 * t - 1) * (2 * t - 1) - omega * (t - 1); };
    return {f(G), f(Gp), f(Gpp)};
  }

  // Relative residuals of G G' G'' = -omega/4, (G-1)(G'-1)(G''-1) = -1/4 and
  // (2G-1)(2G'-1)(2G''-1) = -omega.
  std::array<double, 3> product_identities() const noexcept {
    return {(G * Gp * Gpp + omega / 4) / (omega / 4),
            ((G - 1) * (Gp - 1) * (Gpp - 1) + 0.25) / 0.25,
            ((2 * G - 1) * (2 * Gp - 1) * (2 * Gpp - 1) + omega) / omega};
  }

  // Semi-axes sqrt(-G/G'), sqrt(-G/G'') of the projected ellipse.
  double major_axis() const noexcept { return std::sqrt(-G / Gp); }
  double minor_axis() const noexcept { return std::sqrt(-G / Gpp); }
};

namespace detail {

inline double polish_cubic_root(double t, double omega) noexcept {
  auto f = [omega](double x) { return ((4 * x - 4) * x + (1 - omega)) * x + omega; };
  auto df = [omega](double x) { return (12 * x - 8) * x + (1 - omega); };
  for (int i = 0; i < 2; ++i) {
    const double slope = df(t);
    if (slope == 0.0) break;
    const double next = t - f(t) / slope;
    if (!(std::abs(f(next)) < std::abs(f(t)))) break;
    t = next;
  }
  return t;
}

} // namespace detail

inline SpectralTriple solve_characteristic(double omega) {
  const double omega0 = critical_omega();
  if (!(omega >= omega0 - 1e-12)) {
    throw SubcriticalError("omega = " + std::to_string(omega) +
                           " is below the critical value; only one real root");
  }
  if (omega - omega0 < 1e-10) {
    return {-kGolden, kGolden * kGolden / 2, kGolden * kGolden / 2, omega};
  }
  // Monic form t^3 - t^2 + (1-omega)/4 t + omega/4, shifted by t = s + 1/3.
  const double c1 = (1.0 - omega) / 4.0;
  const double c0 = omega / 4.0;
  const double P = c1 - 1.0 / 3.0;
  const double Q = -2.0 / 27.0 + c1 / 3.0 + c0;
  const double radius = 2.0 * std::sqrt(-P / 3.0);
  const double arg = std::clamp(3.0 * Q / (P * radius), -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  std::array<double, 3> roots{};
  for (int j = 0; j < 3; ++j) {
    const double s = radius * std::cos(theta - 2.0 * std::numbers::pi * j / 3.0);
    roots[j] = detail::polish_cubic_root(s + 1.0 / 3.0, omega);
  }
  std::sort(roots.begin(), roots.end());
  return {roots[0], roots[1], roots[2], omega};
}

struct BridgeModulus {
  double k = 0.0;
  double cnw = 1.0;  // expected cn(2K/5, k) = -G'/G
  double dnw = 1.0;  // expected dn(2K/5, k) = G'/G''
};

// k^2 = (G'^-2 - G''^-2) / (G'^-2 - G^-2). A double root G' = G'' is the
// regular pentagon and gives k = 0.
inline BridgeModulus modulus_from_spectrum(const SpectralTriple& s) {
  if (!(s.G < 0.0 && s.Gp > 0.0 && s.Gpp >= s.Gp)) {
    throw DomainError("spectral triple is not ordered G < 0 < G' <= G''");
  }
  const double a = 1.0 / (s.Gp * s.Gp);
  // G'^-2 - G''^-2 written without cancellation.
  const double numerator = (s.Gpp - s.Gp) * (s.Gpp + s.Gp) / (s.Gp * s.Gp * s.Gpp * s.Gpp);
  const double denominator = a - 1.0 / (s.G * s.G);
  const double k2 = std::max(0.0, numerator / denominator);
  if (!(k2 < 1.0)) throw DomainError("spectral triple maps to k >= 1");
  return {std::sqrt(k2), -s.Gp / s.G, s.Gp / s.Gpp};
}

} // namespace pentagramma
