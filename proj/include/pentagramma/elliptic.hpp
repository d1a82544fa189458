#pragma once

// Real Jacobi elliptic functions for a modulus 0 <= k < 1.
//
// K(k) and the amplitude come from one arithmetic-geometric-mean ladder:
// the forward sweep gives K = pi / (2 a_N), and the backward phase recursion
// (descending Landen/Gauss transformation)
//
//     phi_N = 2^N a_N u,   phi_{n-1} = (phi_n + asin(c_n / a_n * sin phi_n)) / 2
//
// yields am(u) as a continuous, strictly increasing function. The incomplete
// integral F(phi, k) is evaluated through Carlson's symmetric form R_F, which
// keeps the am/F round trip an honest two-route check.

#include "pentagramma/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace pentagramma::elliptic {

inline constexpr double kDefaultTol = 1e-12;

// Larger moduli make K blow up logarithmically; nothing in the pentagon or
// Poncelet constructions gets that close to 1.
inline constexpr double kMaxModulus = 1.0 - 1e-12;

struct JacobiTriple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

namespace detail {

inline void check_modulus(double k) {
  if (!(k >= 0.0) || !(k <= kMaxModulus)) {
    throw DomainError("elliptic modulus must satisfy 0 <= k < 1 (got " + std::to_string(k) + ")");
  }
}

// Forward AGM sweep from (1, k', k). depth == 0 iff k == 0.
struct AgmLadder {
  static constexpr int kCapacity = 40;
  std::array<double, kCapacity> a{};
  std::array<double, kCapacity> c{};
  int depth = 0;
  double quarter_period = std::numbers::pi / 2;
};

inline AgmLadder build_ladder(double k) {
  AgmLadder ladder;
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  double c = k;
  ladder.a[0] = a;
  ladder.c[0] = c;
  int n = 0;
  while (std::abs(c) > 1e-16 * a && n + 1 < AgmLadder::kCapacity) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = an;
    b = bn;
    ++n;
    ladder.a[n] = a;
    ladder.c[n] = c;
  }
  ladder.depth = n;
  ladder.quarter_period = std::numbers::pi / (2.0 * a);
  return ladder;
}

// Carlson's R_F(x, y, z) by duplication; relative error below 1e-16 for
// the tolerance used here.
inline double carlson_rf(double x, double y, double z) {
  constexpr double kErrTol = 0.0008;
  for (int iter = 0; iter < 100; ++iter) {
    const double sx = std::sqrt(x);
    const double sy = std::sqrt(y);
    const double sz = std::sqrt(z);
    const double lambda = sx * (sy + sz) + sy * sz;
    x = 0.25 * (x + lambda);
    y = 0.25 * (y + lambda);
    z = 0.25 * (z + lambda);
    const double mean = (x + y + z) / 3.0;
    const double dx = (mean - x) / mean;
    const double dy = (mean - y) / mean;
    const double dz = (mean - z) / mean;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < kErrTol) {
      const double e2 = dx * dy - dz * dz;
      const double e3 = dx * dy * dz;
      return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mean);
    }
  }
  throw InvariantError("carlson_rf failed to converge");
}

} // namespace detail

// Immutable evaluation context: modulus, cached AGM ladder and tolerance.
// Safe to share between threads.
class EllipticContext {
public:
  explicit EllipticContext(double k, double tol = kDefaultTol)
      : k_(k), tol_(tol), kp2_(0.0) {
    detail::check_modulus(k);
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    ladder_ = detail::build_ladder(k);
    kp2_ = (1.0 - k) * (1.0 + k);
  }

  double k() const noexcept { return k_; }
  double K() const noexcept { return ladder_.quarter_period; }
  double tol() const noexcept { return tol_; }
  double complementary_squared() const noexcept { return kp2_; }

  // Amplitude, continuous and strictly increasing on the whole real line.
  double am(double u) const noexcept {
    const auto [reduced, turns] = reduce(u);
    return amplitude_reduced(reduced) + static_cast<double>(turns) * std::numbers::pi;
  }

  JacobiTriple triple(double u) const noexcept {
    const auto [reduced, turns] = reduce(u);
    const double phi = amplitude_reduced(reduced);
    // am(u + 2K) = am(u) + pi flips the sign of sn and cn.
    const double sign = (turns % 2 == 0) ? 1.0 : -1.0;
    const double sn = sign * std::sin(phi);
    const double cn = sign * std::cos(phi);
    const double dn = std::sqrt(kp2_ + k_ * k_ * cn * cn);
    return {sn, cn, dn};
  }

  // F(phi, k), extended by F(-phi) = -F(phi) and F(phi + pi) = F(phi) + 2K.
  double F(double phi) const {
    const double turns = std::round(phi / std::numbers::pi);
    const double reduced = phi - turns * std::numbers::pi;
    const double s = std::sin(reduced);
    const double c = std::cos(reduced);
    double value = 0.0;
    if (s != 0.0) {
      value = s * detail::carlson_rf(c * c, 1.0 - k_ * k_ * s * s, 1.0);
    }
    return value + 2.0 * turns * K();
  }

  // Addition formulas for sn, cn, dn at u + v.
  JacobiTriple sum(double u, double v) const {
    const JacobiTriple a = triple(u);
    const JacobiTriple b = triple(v);
    const double k2 = k_ * k_;
    const double denom = 1.0 - k2 * a.sn * a.sn * b.sn * b.sn;
    if (denom < tol_) {
      throw DomainError("addition-formula denominator vanished");
    }
    return {(a.sn * b.cn * b.dn + a.cn * b.sn * a.dn) / denom,
            (a.cn * b.cn - a.sn * b.sn * a.dn * b.dn) / denom,
            (a.dn * b.dn - k2 * a.sn * b.sn * a.cn * b.cn) / denom};
  }

  // tan((am x + am y) / 2), cross-checked against dn((x-y)/2) tan am((x+y)/2).
  double half_angle_tan(double x, double y) const {
    const double half = 0.5 * (am(x) + am(y));
    if (std::abs(std::cos(half)) < tol_) {
      throw NearPoleError("tan((am x + am y)/2) is at a pole");
    }
    const double lhs = std::tan(half);
    const double rhs = triple(0.5 * (x - y)).dn * std::tan(am(0.5 * (x + y)));
    if (!(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)))) {
      throw InvariantError("half-angle identity violated");
    }
    return lhs;
  }

private:
  struct Reduced {
    double value;
    long turns;
  };

  // u = value + 2K * turns with value in [-K, K].
  Reduced reduce(double u) const noexcept {
    const double period = 2.0 * K();
    const double turns = std::round(u / period);
    return {u - turns * period, static_cast<long>(turns)};
  }

  double amplitude_reduced(double u) const noexcept {
    const int n = ladder_.depth;
    double phi = std::ldexp(ladder_.a[n] * u, n);
    for (int i = n; i >= 1; --i) {
      phi = 0.5 * (phi + std::asin(ladder_.c[i] / ladder_.a[i] * std::sin(phi)));
    }
    return phi;
  }

  double k_;
  double tol_;
  double kp2_;
  detail::AgmLadder ladder_;
};

inline double complete_K(double k) { return EllipticContext(k).K(); }

inline double incomplete_F(double phi, double k) { return EllipticContext(k).F(phi); }

inline double am(double u, double k) { return EllipticContext(k).am(u); }

inline JacobiTriple jacobi_triple(double u, double k) { return EllipticContext(k).triple(u); }

inline JacobiTriple jacobi_sum(double u, double v, double k) { return EllipticContext(k).sum(u, v); }

inline double half_angle_tan(double x, double y, double k) {
  return EllipticContext(k).half_angle_tan(x, y);
}

} // namespace pentagramma::elliptic
