#pragma once

// Euler and Rogers dilogarithms on [0, 1] and the five-term relation.

#include "pentagramma/errors.hpp"
#include "pentagramma/geometry.hpp"
#include "pentagramma/pentagram.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace pentagramma {

inline constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

namespace detail {

inline double li2_series(double x) noexcept {
  double sum = 0.0;
  double power = x;
  for (int n = 1; n < 200; ++n) {
    const double term = power / (static_cast<double>(n) * n);
    sum += term;
    if (term < 1e-18 * sum) break;
    power *= x;
  }
  return sum;
}

} // namespace detail

// Li_2(x) = sum x^n / n^2 on [0, 1]. Series below 1/2, reflection above.
inline double li2(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("li2 is defined here on [0, 1] only");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kPi2 / 6.0;
  if (x <= 0.5) return detail::li2_series(x);
  return kPi2 / 6.0 - std::log(x) * std::log1p(-x) - detail::li2_series(1.0 - x);
}

// L(x) = Li_2(x) + log(x) log(1-x) / 2, with L(0) = 0 and L(1) = pi^2/6.
inline double rogers_L(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("Rogers dilogarithm is defined here on [0, 1] only");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kPi2 / 6.0;
  return li2(x) + 0.5 * std::log(x) * std::log1p(-x);
}

namespace detail {

inline void check_open_unit(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError(std::string(name) + " must lie in (0, 1)");
}

} // namespace detail

// L(x) + L(y) - L(xy) - L(x(1-y)/(1-xy)) - L(y(1-x)/(1-xy))
inline double spence_residual(double x, double y) {
  detail::check_open_unit(x, "x");
  detail::check_open_unit(y, "y");
  const double d = 1.0 - x * y;
  return rogers_L(x) + rogers_L(y) - rogers_L(x * y) - rogers_L(x * (1.0 - y) / d) - rogers_L(y * (1.0 - x) / d);
}

// b_{n-1} b_{n+1} = 1 - b_n and a_n = b_n / (1 - b_n), so that
// a_{n-2} a_{n+2} = 1 + a_n. The a-relation is exactly the pentagon relation
// of AlphaCycle with the same labels: a_n plays alpha_n and b_n plays beta_n.
struct FiveCycle {
  Cycle5<double> b;
  Cycle5<double> a;

  std::array<double, 5> b_residuals() const noexcept {
    std::array<double, 5> out{};
    for (int n = 0; n < 5; ++n) out[n] = b[n - 1] * b[n + 1] - (1.0 - b[n]);
    return out;
  }

  std::array<double, 5> a_residuals() const noexcept {
    std::array<double, 5> out{};
    for (int n = 0; n < 5; ++n) out[n] = a[n - 2] * a[n + 2] - (1.0 + a[n]);
    return out;
  }

  double rogers_sum() const {
    double s = 0.0;
    for (double v : b.values) s += rogers_L(v);
    return s;
  }
};

inline FiveCycle five_cycle(double x, double y) {
  detail::check_open_unit(x, "x");
  detail::check_open_unit(y, "y");
  const double d = 1.0 - x * y;
  FiveCycle out;
  out.b.values = {x, d, y, (1.0 - y) / d, (1.0 - x) / d};
  for (int n = 0; n < 5; ++n) out.a.values[n] = out.b.values[n] / (1.0 - out.b.values[n]);
  return out;
}

// The five-cycle through beta_0 = alpha_0/(1+alpha_0) and beta_2.
inline FiveCycle five_cycle_from_alphas(const AlphaCycle& c) {
  return five_cycle(c[0] / (1.0 + c[0]), c[2] / (1.0 + c[2]));
}

// sum L(beta_j) - pi^2/2
inline double pentagon_five_term(const std::array<double, 5>& betas) {
  double s = 0.0;
  for (double b : betas) {
    detail::check_open_unit(b, "beta");
    s += rogers_L(b);
  }
  return s - kPi2 / 2.0;
}

} // namespace pentagramma
