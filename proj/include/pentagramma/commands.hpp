#pragma once

// Command bodies behind the `pentagramma` CLI. Each returns a RunReport and
// lets library exceptions escape; exit_code_for() maps them for the shell.

#include "pentagramma/cone_spectrum.hpp"
#include "pentagramma/dilogarithm.hpp"
#include "pentagramma/elliptic.hpp"
#include "pentagramma/errors.hpp"
#include "pentagramma/gauss_projection.hpp"
#include "pentagramma/pentagram.hpp"
#include "pentagramma/poncelet.hpp"
#include "pentagramma/report.hpp"
#include "pentagramma/uniformization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace pentagramma::cli {

using report::RunReport;

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kDomain = 2,
  kInvariant = 3,
  kSubcritical = 4,
  kSearchFailed = 5,
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SubcriticalError*>(&e)) return kSubcritical;
  if (dynamic_cast<const NoSolutionError*>(&e)) return kSearchFailed;
  if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const GeometryError*>(&e)) return kDomain;
  if (dynamic_cast<const Error*>(&e)) return kInvariant;
  return kCheckFailed;
}

namespace detail {

inline std::vector<double> vec(const std::array<double, 5>& a) { return {a.begin(), a.end()}; }

inline double max_abs_of(const auto& xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

inline std::vector<double> flatten(const std::array<Vec3, 5>& vs) {
  std::vector<double> out;
  for (const auto& v : vs) out.insert(out.end(), v.begin(), v.end());
  return out;
}

inline void add_spectrum(RunReport& rep, const SpectralTriple& s) {
  rep.outputs["G"] = s.G;
  rep.outputs["G_prime"] = s.Gp;
  rep.outputs["G_double_prime"] = s.Gpp;
  rep.check("root_product_identities", max_abs_of(s.product_identities()), 1e-10);
  rep.check("root_residuals", max_abs_of(s.root_residuals()) / std::max(1.0, s.omega), 1e-10);
}

} // namespace detail

inline RunReport pentagram(double alpha, double gamma) {
  RunReport rep;
  rep.command = "pentagram";
  rep.inputs["alpha"] = alpha;
  rep.inputs["gamma"] = gamma;

  const AlphaCycle c = complete_from_two(alpha, gamma);
  const auto inv = pentagram_invariants(c);
  rep.outputs["alphas"] = detail::vec(c.values());
  rep.outputs["sides"] = detail::vec(sides_from_alphas(c));
  rep.outputs["omega"] = inv.product;
  rep.outputs["sum_form"] = inv.sum_form;
  rep.outputs["sqrt_form"] = inv.sqrt_form;
  rep.check("alpha_relations", c.max_relative_residual(), 1e-12);
  rep.check("sum_equals_product", (inv.sum_form - inv.product) / inv.product, 1e-12);
  rep.check("sqrt_equals_product", (inv.sqrt_form - inv.product) / inv.product, 1e-12);

  const ConeQuadric cone = cone_coefficients(alpha, gamma);
  rep.outputs["cone_p"] = cone.p;
  rep.outputs["cone_q"] = cone.q;
  rep.outputs["cone_r"] = cone.r;
  rep.check("cone_r_cross_check", (cone.r + c[1] * std::sqrt(alpha * gamma)) / std::abs(cone.r), 1e-12);

  const SpherePentagon sphere = build_sphere_vertices(c);
  rep.outputs["vertices"] = detail::flatten(sphere.vertices);
  double on_cone = 0.0;
  for (const auto& v : sphere.vertices) on_cone = std::max(on_cone, std::abs(cone.evaluate(v)));
  rep.check("vertices_orthogonality", detail::max_abs_of(sphere.orthogonality_residuals()), 1e-10);
  rep.check("vertices_on_cone", on_cone, 1e-10);

  const SpectralTriple s = solve_characteristic(inv.product);
  detail::add_spectrum(rep, s);
  rep.outputs["k"] = modulus_from_spectrum(s).k;
  rep.outputs["semi_axes"] = std::vector<double>{s.major_axis(), s.minor_axis()};
  if (inv.product - critical_omega() < 1e-6) {
    rep.warnings.push_back("near-critical: omega is within 1e-6 of golden^5, the pentagon is almost regular (k ~ 0)");
  }
  return rep;
}

inline RunReport cubic_roots(double omega) {
  RunReport rep;
  rep.command = "cubic-roots";
  rep.inputs["omega"] = omega;
  const SpectralTriple s = solve_characteristic(omega);
  detail::add_spectrum(rep, s);
  rep.outputs["critical_omega"] = critical_omega();
  return rep;
}

// Frame, alpha and beta sequences, and every identity that can be checked
// on a single (k, u).
inline RunReport napier(double k, double u) {
  RunReport rep;
  rep.command = "napier";
  rep.inputs["k"] = k;
  rep.inputs["u"] = u;

  const PentagonFrame f = frame_vectors(k, u);
  const AlphaCycle alphas = alpha_sequence(f);
  const auto betas = beta_sequence(f);
  rep.outputs["K"] = f.K;
  rep.outputs["vectors"] = detail::flatten(f.vectors);
  rep.outputs["alphas"] = detail::vec(alphas.values());
  rep.outputs["betas"] = detail::vec(betas);
  rep.outputs["omega"] = alphas.product();

  rep.check("pentagon_relation", detail::max_abs_of(alphas.relation_residuals()), 1e-10);
  const auto inv = pentagram_invariants(alphas);
  rep.check("sum_equals_product", (inv.sum_form - inv.product) / inv.product, 1e-9);
  double beta_gap = 0.0;
  for (int j = 0; j < 5; ++j) beta_gap = std::max(beta_gap, std::abs(betas[j] - alphas[j] / (1.0 + alphas[j])));
  rep.check("beta_equals_alpha_over_1_plus_alpha", beta_gap, 1e-12);
  const double five_term = pentagon_five_term(betas);
  rep.outputs["rogers_sum"] = five_term + kPi2 / 2.0;
  rep.check("five_term_identity", five_term, 1e-10);

  const SpectralTriple s = solve_characteristic(alphas.product());
  detail::add_spectrum(rep, s);
  rep.check("bridge_cn", f.c5 + s.Gp / s.G, 1e-9);
  rep.check("bridge_dn", f.d5 - s.Gp / s.Gpp, 1e-9);

  const PlanarPentagon pg = pentagon_from_frame(f);
  rep.outputs["semi_axes"] = std::vector<double>{pg.axes.major, pg.axes.minor};
  rep.outputs["anomalies"] = detail::vec(pg.anomalies);
  rep.check("semi_axes_vs_spectrum",
            std::max(std::abs(pg.axes.major - s.major_axis()), std::abs(pg.axes.minor - s.minor_axis())), 1e-8);
  rep.check("anomaly_identities", detail::max_abs_of(anomaly_identity_residuals(pg, s)), 1e-8);
  double recovery = 0.0;
  double confocal = 0.0;
  double orthogonal = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (const Vec2& p : {recover_from_pm2(pg, i), recover_from_pm1(pg, s, i)}) {
      recovery = std::max({recovery, std::abs(p[0] - pg[i][0]), std::abs(p[1] - pg[i][1])});
    }
    confocal = std::max(confocal, std::abs(confocal_residual(pg, s, i)));
    orthogonal = std::max(orthogonal, std::abs(orthogonality_residual(pg, i)));
  }
  rep.check("vertex_recovery", recovery, 1e-9);
  rep.check("confocal_relation", confocal, 1e-9);
  rep.check("planar_orthogonality", orthogonal, 1e-10);
  const auto planar = chord_alphas(pg);
  double chord = 0.0;
  for (int j = 0; j < 5; ++j) chord = std::max(chord, std::abs(planar[j] - alphas[j]) / alphas[j]);
  rep.check("planar_chord_alphas", chord, 1e-10);
  return rep;
}

// One CSV row per (k, u) over k = 0, 0.1, ..., 0.9 and `samples` u values
// per k drawn over one period. Rows are in grid order.
inline std::string napier_grid_csv(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::string out =
      "k,u,alpha_0,alpha_1,alpha_2,alpha_3,alpha_4,beta_0,beta_1,beta_2,beta_3,beta_4,omega,relation_residual,"
      "five_term_residual\n";
  auto cell = [](double v) { return report::format_number(v); };
  for (int i = 0; i <= 9; ++i) {
    const double k = i / 10.0;
    const double period = 4.0 * elliptic::complete_K(k);
    for (int s = 0; s < samples; ++s) {
      const double u = std::uniform_real_distribution<double>(0.0, period)(rng);
      const PentagonFrame f = frame_vectors(k, u);
      std::string row = cell(k) + "," + cell(u);
      try {
        const AlphaCycle alphas = alpha_sequence(f);
        const auto betas = beta_sequence(f);
        for (double a : alphas.values()) row += "," + cell(a);
        for (double b : betas) row += "," + cell(b);
        row += "," + cell(alphas.product()) + "," + cell(detail::max_abs_of(alphas.relation_residuals())) + "," +
               cell(pentagon_five_term(betas));
      } catch (const ChordDegenerateError&) {
        row += ",,,,,,,,,,,,,";
      }
      out += row + "\n";
    }
  }
  return out;
}

namespace detail {

inline void add_bridge_checks(RunReport& rep, const SpectralTriple& s, double k_expected) {
  const BridgeModulus b = modulus_from_spectrum(s);
  const elliptic::EllipticContext ctx(b.k);
  const auto t = ctx.triple(0.4 * ctx.K());
  rep.outputs["k"] = b.k;
  rep.outputs["K"] = ctx.K();
  rep.outputs["cn_2K_over_5"] = t.cn;
  rep.outputs["dn_2K_over_5"] = t.dn;
  rep.check("bridge_cn", t.cn - b.cnw, 1e-9);
  rep.check("bridge_dn", t.dn - b.dnw, 1e-9);
  rep.check("modulus_routes_agree", b.k - k_expected, 1e-9);
}

} // namespace detail

// omega -> roots -> k, then the fifth-period values of cn and dn.
inline RunReport bridge_from_omega(double omega) {
  RunReport rep;
  rep.command = "bridge";
  rep.inputs["omega"] = omega;
  const SpectralTriple s = solve_characteristic(omega);
  detail::add_spectrum(rep, s);
  const double k = k_of_omega(omega);
  rep.outputs["k_by_inversion"] = k;
  detail::add_bridge_checks(rep, s, k);
  return rep;
}

// k -> omega(k) -> roots, then back to k through the root formula.
inline RunReport bridge_from_k(double k) {
  RunReport rep;
  rep.command = "bridge";
  rep.inputs["k"] = k;
  const double omega = omega_of_k(k);
  rep.outputs["omega"] = omega;
  rep.check("omega_u_independence", (omega_of_k(k, 1.1) - omega) / omega, 1e-9);
  const SpectralTriple s = solve_characteristic(omega);
  detail::add_spectrum(rep, s);
  detail::add_bridge_checks(rep, s, k);
  return rep;
}

inline RunReport poncelet(const TwoCircleConfig& c, int steps, double phi0) {
  RunReport rep;
  rep.command = "poncelet";
  rep.inputs["R"] = c.R;
  rep.inputs["r"] = c.r;
  rep.inputs["a"] = c.a;
  rep.inputs["steps"] = static_cast<double>(steps);
  rep.inputs["phi0"] = phi0;

  const PonceletModulus m = modulus_of_config(c);
  rep.outputs["k"] = m.k;
  rep.outputs["alpha"] = m.alpha;
  rep.check("dn_t_identity", m.dn_residual, 1e-12);
  rep.check("k_squared_identity", m.k2_residual, 1e-12);

  const auto traj = trajectory(c, phi0, steps);
  rep.outputs["phis"] = traj.phis;
  double chord = 0.0;
  double recursion = 0.0;
  for (std::size_t i = 0; i + 1 < traj.phis.size(); ++i) {
    chord = std::max(chord, std::abs(chord_relation_residual(c, traj.phis[i], traj.phis[i + 1])));
    if (i > 0) {
      recursion = std::max(recursion, std::abs(recursion_residual(c, traj.phis[i - 1], traj.phis[i], traj.phis[i + 1])));
    }
  }
  rep.check("chord_relation", chord, 1e-12);
  rep.check("chord_recursion", recursion, 1e-10);
  rep.check("elliptic_shadowing", shadowing_residual(traj), 1e-9);

  double best = INFINITY;
  std::string best_label;
  for (int n = 3; n <= 12; ++n) {
    for (int turns = 1; 2 * turns < n; ++turns) {
      if (std::gcd(n, turns) != 1) continue;
      const double res = closure_residual(c, n, turns);
      const std::string label = std::to_string(n) + "/" + std::to_string(turns);
      rep.outputs["closure_residual_" + label] = res;
      if (std::abs(res) < best) {
        best = std::abs(res);
        best_label = label;
      }
    }
  }
  rep.outputs["closest_closure"] = best_label;
  return rep;
}

// Fixed (n, m, R, r); solves for the centre distance and checks closure
// geometrically from five starting points.
inline RunReport poncelet_solve(int n, int turns, double R, double r, std::uint64_t seed) {
  RunReport rep;
  rep.command = "poncelet";
  rep.inputs["n"] = static_cast<double>(n);
  rep.inputs["m"] = static_cast<double>(turns);
  rep.inputs["R"] = R;
  rep.inputs["r"] = r;

  const TwoCircleConfig c = search_closing_config(n, turns, R, r);
  const PonceletModulus m = modulus_of_config(c);
  rep.outputs["a"] = c.a;
  rep.outputs["k"] = m.k;
  rep.outputs["alpha"] = m.alpha;
  rep.check("closure_residual", closure_residual(c, n, turns), 1e-12);
  std::mt19937_64 rng(seed);
  double gap = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double phi0 = std::uniform_real_distribution<double>(0.0, std::numbers::pi)(rng);
    gap = std::max(gap, std::abs(closure_gap(c, phi0, n, turns)));
  }
  rep.check("geometric_closure_5_starts", gap, 1e-8);
  rep.check("elliptic_shadowing", shadowing_residual(trajectory(c, 0.0, n)), 1e-9);
  return rep;
}

} // namespace pentagramma::cli
