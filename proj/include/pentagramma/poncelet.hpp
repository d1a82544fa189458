#pragma once

// Poncelet chords between two nested circles and their elliptic
// linearisation.
//
// Outer circle: centre C, radius R. Inner circle: centre c at distance a
// from C, radius r. A vertex A_i on the outer circle is recorded by the
// half-angle phi_i (2 phi_i = angle A_i C P, with P on the ray from c
// through C). Consecutive tangent chords satisfy
//
//     (R+a) cos phi_{i+1} cos phi_i + (R-a) sin phi_{i+1} sin phi_i = r,
//
// so phi_i = am(u_0 + i t) with dn t = (R-a)/(R+a), cn t = r/(R+a). The
// polygon closes after n chords and m turns iff n t = 2 m K.

#include "pentagramma/elliptic.hpp"
#include "pentagramma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace pentagramma {

struct TwoCircleConfig {
  double R = 1.0;  // outer radius
  double r = 0.5;  // inner radius
  double a = 0.0;  // centre distance
};

// Checks strict nesting (a + r < R) and the centre condition a < r, then
// rescales to R = 1.
inline TwoCircleConfig validate_config(const TwoCircleConfig& c) {
  if (!(c.R > 0.0)) throw GeometryError("outer radius R must be positive");
  if (!(c.r > 0.0)) throw GeometryError("inner radius r must be positive");
  if (!(c.a >= 0.0)) throw GeometryError("centre distance a must be non-negative");
  if (!(c.a < c.r)) throw GeometryError("outer centre must lie inside the inner circle (a < r)");
  if (!(c.a + c.r < c.R)) throw GeometryError("inner circle must be strictly inside the outer one (a + r < R)");
  return {1.0, c.r / c.R, c.a / c.R};
}

struct PonceletModulus {
  double k = 0.0;
  double alpha = 0.0;  // am t, with cos alpha = r/(R+a)
  // sqrt(1 - k^2 sin^2 alpha) - (R-a)/(R+a)
  double dn_residual = 0.0;
  // 4Ra/((R+a)^2 - r^2) - [1 - ((R-a)^2 - r^2)/((R+a)^2 - r^2)]
  double k2_residual = 0.0;
};

inline PonceletModulus modulus_of_config(const TwoCircleConfig& config) {
  const TwoCircleConfig c = validate_config(config);
  const double outer = (c.R + c.a) * (c.R + c.a) - c.r * c.r;
  const double k2 = 4.0 * c.R * c.a / outer;
  if (!(k2 < 1.0)) throw DomainError("two-circle configuration gives k >= 1");
  PonceletModulus out;
  out.k = std::sqrt(k2);
  out.alpha = std::acos(c.r / (c.R + c.a));
  const double s = std::sin(out.alpha);
  out.dn_residual = std::sqrt(1.0 - k2 * s * s) - (c.R - c.a) / (c.R + c.a);
  out.k2_residual = k2 - (1.0 - ((c.R - c.a) * (c.R - c.a) - c.r * c.r) / outer);
  return out;
}

// Left side minus right side of the chord relation.
inline double chord_relation_residual(const TwoCircleConfig& c, double phi, double next) noexcept {
  return (c.R + c.a) * std::cos(next) * std::cos(phi) + (c.R - c.a) * std::sin(next) * std::sin(phi) - c.r;
}

// The same relation in the geometric form R cos(phi' - phi) + a cos(phi' + phi) = r.
inline double chord_geometric_residual(const TwoCircleConfig& c, double phi, double next) noexcept {
  return c.R * std::cos(next - phi) + c.a * std::cos(next + phi) - c.r;
}

// tan((phi_{i+1} + phi_{i-1})/2) = (R-a)/(R+a) tan phi_i, cross-multiplied so
// that poles of the tangent are harmless.
inline double recursion_residual(const TwoCircleConfig& c, double prev, double cur, double next) noexcept {
  const double half = 0.5 * (next + prev);
  const double ratio = (c.R - c.a) / (c.R + c.a);
  return std::sin(half) * std::cos(cur) - ratio * std::sin(cur) * std::cos(half);
}

// Next vertex half-angle along the counter-clockwise tangent.
inline double chord_step(const TwoCircleConfig& config, double phi, std::optional<double> prev = std::nullopt) {
  const TwoCircleConfig c = validate_config(config);
  const double A = (c.R + c.a) * std::cos(phi);
  const double B = (c.R - c.a) * std::sin(phi);
  const double rho = std::hypot(A, B);
  if (!(c.r <= rho)) throw NoTangentError("chord relation has no real solution");
  const double theta = std::atan2(B, A);
  const double spread = std::acos(c.r / rho);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto forward = [&](double target) {
    double step = std::fmod(target - phi, two_pi);
    if (step <= 0.0) step += two_pi;
    return step;
  };
  const double next = phi + std::min(forward(theta + spread), forward(theta - spread));
  if (prev) {
    const double res = recursion_residual(c, *prev, phi, next);
    if (!(std::abs(res) <= 1e-10)) {
      throw InvariantError("chord recursion violated (residual " + std::to_string(res) + ")");
    }
  }
  return next;
}

struct PonceletTrajectory {
  TwoCircleConfig config;
  std::vector<double> phis;  // unwrapped, n + 1 entries
};

inline PonceletTrajectory trajectory(const TwoCircleConfig& c, double phi0, int n) {
  if (n < 1) throw DomainError("trajectory needs at least one step");
  validate_config(c);
  PonceletTrajectory out{c, {phi0}};
  out.phis.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    std::optional<double> prev;
    if (i > 0) prev = out.phis[static_cast<std::size_t>(i) - 1];
    out.phis.push_back(chord_step(c, out.phis.back(), prev));
  }
  return out;
}

// max_i |phi_i - am(u_0 + i t)| with u_0 = F(phi_0), t = F(alpha).
inline double shadowing_residual(const PonceletTrajectory& traj) {
  const PonceletModulus m = modulus_of_config(traj.config);
  const elliptic::EllipticContext ctx(m.k);
  const double u0 = ctx.F(traj.phis.front());
  const double t = ctx.F(m.alpha);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.phis.size(); ++i) {
    worst = std::max(worst, std::abs(traj.phis[i] - ctx.am(u0 + static_cast<double>(i) * t)));
  }
  return worst;
}

// F(alpha, k) - (m/n) F(pi, k); zero exactly for closing configurations.
inline double closure_residual(const TwoCircleConfig& c, int n, int m) {
  if (n < 1 || m < 1) throw DomainError("closure needs n, m >= 1");
  const PonceletModulus mod = modulus_of_config(c);
  const elliptic::EllipticContext ctx(mod.k);
  return ctx.F(mod.alpha) - static_cast<double>(m) / n * ctx.F(std::numbers::pi);
}

// phi_n - phi_0 - m pi after n geometric chord steps.
inline double closure_gap(const TwoCircleConfig& c, double phi0, int n, int m) {
  const auto traj = trajectory(c, phi0, n);
  return traj.phis.back() - traj.phis.front() - m * std::numbers::pi;
}

// Bisection in the centre distance a for a configuration that closes after n
// chords and m turns, with R and r fixed.
inline TwoCircleConfig search_closing_config(int n, int m, double R, double r) {
  if (n < 3 || m < 1 || m >= n) throw DomainError("need n >= 3 and 1 <= m < n");
  if (!(R > 0.0 && r > 0.0 && r < R)) throw GeometryError("need 0 < r < R");
  double lo = 0.0;
  double hi = std::min(r, R - r) - 1e-9 * R;
  auto f = [&](double a) { return closure_residual({R, r, a}, n, m); };
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {R, r, lo};
  if (fhi == 0.0) return {R, r, hi};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NoSolutionError("closure residual has no sign change for a in [0, min(r, R-r)) (n=" +
                          std::to_string(n) + ", m=" + std::to_string(m) + "; residual " + std::to_string(flo) +
                          " at a=0, " + std::to_string(fhi) + " at a=" + std::to_string(hi) + ")");
  }
  while (hi - lo > 1e-13 * R) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {R, r, 0.5 * (lo + hi)};
}

} // namespace pentagramma
