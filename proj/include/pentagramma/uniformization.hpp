#pragma once

// Parametrisation of Napier pentagons by Jacobi functions at the fifth
// division points of the period:
//
//   r_j(k, u) = ( cn(u_j) / sqrt(c5),  sqrt(d5) sn(u_j) / sqrt(c5),  1 ),
//   u_j = u + 4 j K / 5,   c5 = cn(2K/5),   d5 = dn(2K/5).
//
// The squared tangents of consecutive chord angles satisfy the pentagon
// relation 1 + alpha_j = alpha_{j-2} alpha_{j+2} for every (k, u).

#include "pentagramma/cone_spectrum.hpp"
#include "pentagramma/elliptic.hpp"
#include "pentagramma/errors.hpp"
#include "pentagramma/geometry.hpp"
#include "pentagramma/pentagram.hpp"

#include <array>
#include <cmath>
#include <string>

namespace pentagramma {

struct PentagonFrame {
  double k = 0.0;
  double u = 0.0;
  double K = 0.0;
  double c5 = 1.0;
  double d5 = 1.0;
  std::array<Vec3, 5> vectors{};

  const Vec3& operator[](int j) const noexcept { return vectors[cyc(j)]; }
};

namespace detail {

struct DivisionConstants {
  double c5;
  double d5;
};

inline DivisionConstants division_constants(const elliptic::EllipticContext& ctx) {
  const auto t = ctx.triple(0.4 * ctx.K());
  // 2K/5 < K, so cn > 0; anything else is a kernel bug.
  if (!(t.cn > 0.0)) throw InvariantError("cn(2K/5) is not positive");
  return {t.cn, t.dn};
}

inline Vec3 frame_vector(const elliptic::EllipticContext& ctx, const DivisionConstants& dc, double u, int j) {
  const auto t = ctx.triple(u + 0.8 * j * ctx.K());
  const double scale = 1.0 / std::sqrt(dc.c5);
  return {t.cn * scale, std::sqrt(dc.d5) * t.sn * scale, 1.0};
}

} // namespace detail

// r_j for an arbitrary integer j; r_{j+5} = r_j up to rounding.
inline Vec3 frame_vector_at(double k, double u, int j) {
  const elliptic::EllipticContext ctx(k);
  return detail::frame_vector(ctx, detail::division_constants(ctx), u, j);
}

inline PentagonFrame frame_vectors(double k, double u) {
  const elliptic::EllipticContext ctx(k);
  const auto dc = detail::division_constants(ctx);
  PentagonFrame f;
  f.k = k;
  f.u = u;
  f.K = ctx.K();
  f.c5 = dc.c5;
  f.d5 = dc.d5;
  for (int j = 0; j < 5; ++j) f.vectors[j] = detail::frame_vector(ctx, dc, u, j);
  return f;
}

namespace detail {

inline void check_chord(const Vec3& a, const Vec3& b, double tol) {
  if (std::abs(dot(a, b)) <= tol * norm(a) * norm(b)) {
    throw ChordDegenerateError("consecutive frame vectors are orthogonal");
  }
}

} // namespace detail

// alpha_j = |r_j x r_{j+1}|^2 / (r_j . r_{j+1})^2
inline AlphaCycle alpha_sequence(const PentagonFrame& f, double tol = 1e-12) {
  std::array<double, 5> out{};
  for (int j = 0; j < 5; ++j) {
    const Vec3& a = f[j];
    const Vec3& b = f[j + 1];
    detail::check_chord(a, b, tol);
    const Vec3 c = cross(a, b);
    const double d = dot(a, b);
    out[j] = dot(c, c) / (d * d);
  }
  return AlphaCycle(out);
}

// beta_j = |r_j x r_{j+1}|^2 / (|r_j|^2 |r_{j+1}|^2), the squared sine of the chord.
inline std::array<double, 5> beta_sequence(const PentagonFrame& f, double tol = 1e-12) {
  std::array<double, 5> out{};
  for (int j = 0; j < 5; ++j) {
    const Vec3& a = f[j];
    const Vec3& b = f[j + 1];
    detail::check_chord(a, b, tol);
    const Vec3 c = cross(a, b);
    out[j] = dot(c, c) / (dot(a, a) * dot(b, b));
  }
  return out;
}

inline double omega_of_k(double k, double u = 0.0) { return alpha_sequence(frame_vectors(k, u)).product(); }

// Upper end of the bisection bracket for k_of_omega.
inline constexpr double kOmegaBracketTop = 0.999999;

// Inverse of omega_of_k by bisection on k. omega(k) is increasing (observed,
// and checked on a grid by the tests), with omega(0) = golden^5.
inline double k_of_omega(double omega) {
  const double omega0 = critical_omega();
  if (!(omega >= omega0 - 1e-12)) {
    throw SubcriticalError("omega = " + std::to_string(omega) + " is below the critical value");
  }
  if (omega <= omega0) return 0.0;
  double lo = 0.0;
  double hi = kOmegaBracketTop;
  if (omega > omega_of_k(hi)) {
    throw DomainError("omega = " + std::to_string(omega) + " needs k beyond the supported range");
  }
  while (hi - lo > 1e-16) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (omega_of_k(mid) < omega) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace pentagramma
