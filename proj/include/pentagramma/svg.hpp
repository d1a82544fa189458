#pragma once

// Static SVG 1.1 drawings: the projected pentagon with its ellipse, and a
// Poncelet chord trajectory between two circles.

#include "pentagramma/gauss_projection.hpp"
#include "pentagramma/poncelet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace pentagramma::svg {

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string header(double half_extent) {
  const std::string lo = num(-half_extent);
  const std::string size = num(2 * half_extent);
  // y grows downwards in SVG; flip so the drawing uses the usual orientation.
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" viewBox=\"" +
         lo + " " + lo + " " + size + " " + size + "\">\n<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" +
         num(half_extent / 200) + "\">\n";
}

inline const char* footer() { return "</g>\n</svg>\n"; }

} // namespace detail

inline std::string pentagon_svg(const PlanarPentagon& pg) {
  const double extent = 1.15 * std::max(pg.axes.major, pg.axes.minor);
  std::string out = detail::header(extent);
  out += "<ellipse cx=\"0\" cy=\"0\" rx=\"" + detail::num(pg.axes.major) + "\" ry=\"" + detail::num(pg.axes.minor) +
         "\" stroke=\"#888888\"/>\n";
  out += "<path stroke=\"#1f4e9c\" d=\"";
  for (int i = 0; i < 5; ++i) {
    out += (i == 0 ? "M" : " L") + detail::num(pg[i][0]) + " " + detail::num(pg[i][1]);
  }
  out += " Z\"/>\n";
  // The star: each vertex joined to the one two steps ahead.
  out += "<path stroke=\"#c0392b\" d=\"";
  for (int i = 0; i <= 5; ++i) {
    const auto& p = pg[2 * i];
    out += (i == 0 ? "M" : " L") + detail::num(p[0]) + " " + detail::num(p[1]);
  }
  out += "\"/>\n";
  return out + detail::footer();
}

// Outer circle centred at the origin; inner centre at (-a, 0); vertex i at
// R (cos 2 phi_i, sin 2 phi_i).
inline std::string poncelet_svg(const PonceletTrajectory& traj) {
  const auto& c = traj.config;
  std::string out = detail::header(1.1 * c.R);
  out += "<circle cx=\"0\" cy=\"0\" r=\"" + detail::num(c.R) + "\" stroke=\"#888888\"/>\n";
  out += "<circle cx=\"" + detail::num(-c.a) + "\" cy=\"0\" r=\"" + detail::num(c.r) + "\" stroke=\"#888888\"/>\n";
  out += "<polyline stroke=\"#1f4e9c\" points=\"";
  for (std::size_t i = 0; i < traj.phis.size(); ++i) {
    if (i) out += " ";
    out += detail::num(c.R * std::cos(2 * traj.phis[i])) + "," + detail::num(c.R * std::sin(2 * traj.phis[i]));
  }
  out += "\"/>\n";
  return out + detail::footer();
}

} // namespace pentagramma::svg
