#pragma once

// Reference evaluations that share no code with the library kernels. They
// are slow and only used to check the fast paths.

#include "pentagramma/pentagram.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace pentagramma::oracle {

// F(phi, k) by adaptive Gauss-Kronrod quadrature of 1/sqrt(1 - k^2 sin^2 x).
inline double quadrature_F(double phi, double k) {
  auto integrand = [k](double x) {
    const double s = std::sin(x);
    return 1.0 / std::sqrt(1.0 - k * k * s * s);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, phi, 15, 1e-15);
}

inline double quadrature_K(double k) { return quadrature_F(std::numbers::pi / 2, k); }

// am(u) on [0, K] by bisection on the quadrature integral.
inline double quadrature_am(double u, double k) {
  double lo = 0.0;
  double hi = std::numbers::pi / 2;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (quadrature_F(mid, k) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Parts of the right triangle with legs a, b solved by the spherical law of
// cosines alone.
inline NapierParts law_of_cosines_parts(double a, double b) {
  constexpr double half_pi = std::numbers::pi / 2;
  const double c = std::acos(std::cos(a) * std::cos(b));
  const double angle_a = std::acos((std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c)));
  const double angle_b = std::acos((std::cos(b) - std::cos(a) * std::cos(c)) / (std::sin(a) * std::sin(c)));
  return {{{a, b, half_pi - angle_a, half_pi - c, half_pi - angle_b}}};
}

} // namespace pentagramma::oracle
