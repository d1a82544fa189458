#pragma once

// Central projection of a Napier pentagon onto the tangent plane z = 1 at the
// cone axis. The five image points lie on the ellipse with semi-axes
// sqrt(-G/G') and sqrt(-G/G''), parametrised by eccentric anomalies.

#include "pentagramma/cone_spectrum.hpp"
#include "pentagramma/errors.hpp"
#include "pentagramma/geometry.hpp"
#include "pentagramma/uniformization.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace pentagramma {

struct EllipseAxes {
  double major = 1.0;  // along x
  double minor = 1.0;  // along y
};

struct PlanarPentagon {
  std::array<Vec2, 5> points{};
  EllipseAxes axes{};
  // Unwrapped so that consecutive anomalies increase by less than 2 pi.
  std::array<double, 5> anomalies{};

  const Vec2& operator[](int i) const noexcept { return points[cyc(i)]; }
  double anomaly(int i) const noexcept { return anomalies[cyc(i)]; }
};

// phi in [0, 2 pi) with point = (a cos phi, b sin phi).
inline double eccentric_anomaly(const Vec2& point, const EllipseAxes& axes, double tol = 1e-9) {
  const double cx = point[0] / axes.major;
  const double sy = point[1] / axes.minor;
  const double off = cx * cx + sy * sy - 1.0;
  if (!(std::abs(off) <= tol)) {
    throw OffEllipseError("point is off the ellipse by " + std::to_string(off));
  }
  double phi = std::atan2(sy, cx);
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  return phi;
}

inline std::array<double, 5> unwrap_increasing(const std::array<double, 5>& raw) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::array<double, 5> out = raw;
  for (int i = 1; i < 5; ++i) {
    double step = std::fmod(raw[i] - out[i - 1], two_pi);
    if (step < 0.0) step += two_pi;
    out[i] = out[i - 1] + step;
  }
  return out;
}

inline PlanarPentagon planar_pentagon(const std::array<Vec2, 5>& points, const EllipseAxes& axes,
                                      double tol = 1e-9) {
  PlanarPentagon out;
  out.points = points;
  out.axes = axes;
  std::array<double, 5> raw{};
  for (int i = 0; i < 5; ++i) raw[i] = eccentric_anomaly(points[i], axes, tol);
  out.anomalies = unwrap_increasing(raw);
  return out;
}

// Projected pentagon of a frame. The axes come from a least-squares fit of
// A x^2 + B y^2 = 1 through all five points, then every point is checked.
inline PlanarPentagon pentagon_from_frame(const PentagonFrame& f, double tol = 1e-9) {
  std::array<Vec2, 5> pts{};
  double sxx = 0, sxy = 0, syy = 0, bx = 0, by = 0;
  for (int j = 0; j < 5; ++j) {
    if (f.vectors[j][2] != 1.0) throw InvariantError("frame vector is off the tangent plane");
    pts[j] = {f.vectors[j][0], f.vectors[j][1]};
    const double x2 = pts[j][0] * pts[j][0];
    const double y2 = pts[j][1] * pts[j][1];
    sxx += x2 * x2;
    sxy += x2 * y2;
    syy += y2 * y2;
    bx += x2;
    by += y2;
  }
  const double det = sxx * syy - sxy * sxy;
  if (!(std::abs(det) > 1e-14 * sxx * syy)) throw SingularError("ellipse fit is singular");
  const double A = (bx * syy - by * sxy) / det;
  const double B = (sxx * by - sxy * bx) / det;
  if (!(A > 0.0 && B > 0.0)) throw InvariantError("points do not lie on an ellipse");
  for (const auto& p : pts) {
    const double off = A * p[0] * p[0] + B * p[1] * p[1] - 1.0;
    if (!(std::abs(off) <= tol)) {
      throw InvariantError("frame points are not on a common axis-aligned ellipse");
    }
  }
  return planar_pentagon(pts, {1.0 / std::sqrt(A), 1.0 / std::sqrt(B)}, tol);
}

namespace detail {

inline void check_denominator(double den, const Vec2& a, const Vec2& b) {
  const double scale = std::hypot(a[0], a[1]) * std::hypot(b[0], b[1]);
  if (!(std::abs(den) > 1e-12 * std::max(scale, 1e-300))) {
    throw SingularError("reference points are collinear with the origin");
  }
}

} // namespace detail

// R_i from R_{i+2} and R_{i-2} through the two orthogonality relations.
inline Vec2 recover_from_pm2(const PlanarPentagon& pg, int i) {
  const Vec2& a = pg[i + 2];
  const Vec2& b = pg[i - 2];
  const double den = a[0] * b[1] - a[1] * b[0];
  detail::check_denominator(den, a, b);
  return {(a[1] - b[1]) / den, (b[0] - a[0]) / den};
}

// R_i from its neighbours R_{i-1}, R_{i+1} through the confocal relation.
inline Vec2 recover_from_pm1(const PlanarPentagon& pg, const SpectralTriple& s, int i) {
  const Vec2& prev = pg[i - 1];
  const Vec2& next = pg[i + 1];
  const double den = prev[0] * next[1] - next[0] * prev[1];
  detail::check_denominator(den, prev, next);
  const double g = 2 * s.G - 1;
  return {-(2 * s.Gp - 1) / g * (next[1] - prev[1]) / den, (2 * s.Gpp - 1) / g * (next[0] - prev[0]) / den};
}

inline double orthogonality_residual(const PlanarPentagon& pg, int i) noexcept {
  const Vec2& a = pg[i - 1];
  const Vec2& b = pg[i + 1];
  return a[0] * b[0] + a[1] * b[1] + 1.0;
}

// x_i x_{i+1}/(2G'-1) + y_i y_{i+1}/(2G''-1) + 1/(2G-1)
inline double confocal_residual(const PlanarPentagon& pg, const SpectralTriple& s, int i) noexcept {
  const Vec2& a = pg[i];
  const Vec2& b = pg[i + 1];
  return a[0] * b[0] / (2 * s.Gp - 1) + a[1] * b[1] / (2 * s.Gpp - 1) + 1.0 / (2 * s.G - 1);
}

// tan^2 of the chord angle at the sphere centre, from planar coordinates.
inline std::array<double, 5> chord_alphas(const PlanarPentagon& pg) noexcept {
  std::array<double, 5> out{};
  for (int i = 0; i < 5; ++i) {
    const auto [x0, y0] = pg[i];
    const auto [x1, y1] = pg[i + 1];
    const double w = x0 * y1 - y0 * x1;
    const double num = (x0 - x1) * (x0 - x1) + (y0 - y1) * (y0 - y1) + w * w;
    const double d = x0 * x1 + y0 * y1 + 1.0;
    out[i] = num / (d * d);
  }
  return out;
}

// sin^2 of the same angle.
inline std::array<double, 5> chord_betas(const PlanarPentagon& pg) noexcept {
  std::array<double, 5> out{};
  for (int i = 0; i < 5; ++i) {
    const auto [x0, y0] = pg[i];
    const auto [x1, y1] = pg[i + 1];
    const double w = x0 * y1 - y0 * x1;
    const double num = (x0 - x1) * (x0 - x1) + (y0 - y1) * (y0 - y1) + w * w;
    out[i] = num / ((x0 * x0 + y0 * y0 + 1.0) * (x1 * x1 + y1 * y1 + 1.0));
  }
  return out;
}

// Residuals of the anomaly identities, four per vertex i at offsets 4i..4i+3:
//   sin(S2)/cos(D2) - G/G'' sin phi_i,   cos(S2)/cos(D2) - G/G' cos phi_i,
//   sin(S1)/cos(D1) - G(2G-1)/(G''(2G''-1)) sin phi_i,
//   cos(S1)/cos(D1) - G(2G-1)/(G'(2G'-1)) cos phi_i,
// where S_m, D_m are the half sum and half difference of phi_{i-m}, phi_{i+m}.
// The two spellings of the neighbour coefficients, sqrt(G(G-1)/(G''(G''-1)))
// and G(2G-1)/(G''(2G''-1)), must agree for any root triple of the cubic.
inline std::array<double, 20> anomaly_identity_residuals(const PlanarPentagon& pg, const SpectralTriple& s,
                                                      double tol = 1e-9) {
  const double G = s.G;
  const double near_y = G * (2 * G - 1) / (s.Gpp * (2 * s.Gpp - 1));
  const double near_x = G * (2 * G - 1) / (s.Gp * (2 * s.Gp - 1));
  const double root_y = std::sqrt(G * (G - 1) / (s.Gpp * (s.Gpp - 1)));
  const double root_x = std::sqrt(G * (G - 1) / (s.Gp * (s.Gp - 1)));
  if (!(std::abs(root_y - near_y) <= tol * std::abs(near_y) && std::abs(root_x - near_x) <= tol * std::abs(near_x))) {
    throw InvariantError("spectral triple does not satisfy the characteristic cubic");
  }

  std::array<double, 20> out{};
  for (int i = 0; i < 5; ++i) {
    const double phi = pg.anomaly(i);
    for (int m = 1; m <= 2; ++m) {
      const double lo = pg.anomaly(i - m);
      const double hi = pg.anomaly(i + m);
      const double half_sum = 0.5 * (lo + hi);
      const double half_diff_cos = std::cos(0.5 * (lo - hi));
      const double cy = (m == 2) ? G / s.Gpp : near_y;
      const double cx = (m == 2) ? G / s.Gp : near_x;
      const int base = 4 * i + (m == 2 ? 0 : 2);
      out[base] = std::sin(half_sum) / half_diff_cos - cy * std::sin(phi);
      out[base + 1] = std::cos(half_sum) / half_diff_cos - cx * std::cos(phi);
    }
  }
  return out;
}

} // namespace pentagramma
