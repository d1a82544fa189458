#include "pentagramma/commands.hpp"
#include "pentagramma/svg.hpp"
#include "pentagramma/verification.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace pentagramma;

struct Globals {
  bool json = false;
  std::optional<double> tol;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open " + path + " for writing");
  out << text;
}

int emit(report::RunReport rep, const Globals& g) {
  if (g.tol) rep.override_tolerance(*g.tol);
  std::cout << (g.json ? report::to_json(rep) : report::to_text(rep)) << '\n';
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
  return rep.pass() ? cli::kPass : cli::kCheckFailed;
}

std::optional<double> env_tolerance() {
  const char* raw = std::getenv("PENTAGRAMMA_TOL");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (*end != '\0' || !(v > 0.0)) throw DomainError(std::string("PENTAGRAMMA_TOL is not a positive number: ") + raw);
  return v;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pentagram, elliptic-function and Poncelet computations"};
  app.require_subcommand(1);
  Globals g;
  double tol_flag = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_flag, "Override every check tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "Print the run report as JSON");

  auto* pent = app.add_subcommand("pentagram", "Complete a pentagram from two alphas and solve its cone");
  double alpha = 0.0;
  double gamma = 0.0;
  pent->add_option("--alpha", alpha)->required();
  pent->add_option("--gamma", gamma)->required();

  auto* cubic = app.add_subcommand("cubic-roots", "Roots of the characteristic cubic for a given omega");
  double cubic_omega = 0.0;
  cubic->add_option("--omega", cubic_omega)->required();

  auto* nap = app.add_subcommand("napier", "Elliptic frame and pentagram identities at (k, u)");
  double nap_k = 0.5;
  double nap_u = 0.0;
  int grid = 0;
  std::uint64_t grid_seed = 20240601;
  std::string nap_csv;
  std::string nap_svg;
  nap->add_option("--k", nap_k);
  nap->add_option("--u", nap_u);
  nap->add_option("--grid", grid, "Samples per k for the CSV grid (k = 0, 0.1, ..., 0.9)")->check(CLI::PositiveNumber);
  nap->add_option("--seed", grid_seed);
  nap->add_option("--csv", nap_csv, "Write the grid CSV here (requires --grid)");
  nap->add_option("--svg", nap_svg, "Write the projected pentagon as SVG");

  auto* bridge = app.add_subcommand("bridge", "Relate omega and the elliptic modulus k");
  double bridge_omega = 0.0;
  double bridge_k = 0.0;
  auto* omega_opt = bridge->add_option("--omega", bridge_omega);
  auto* k_opt = bridge->add_option("--k", bridge_k);
  omega_opt->excludes(k_opt);
  bridge->require_option(1);

  auto* pon = app.add_subcommand("poncelet", "Poncelet chords between two nested circles");
  TwoCircleConfig config{1.0, 0.5, 0.1};
  int steps = 10;
  double phi0 = 0.0;
  std::vector<int> solve;
  std::uint64_t pon_seed = 20240601;
  std::string pon_svg;
  std::string pon_csv;
  pon->add_option("--R", config.R);
  pon->add_option("--r", config.r);
  pon->add_option("--a", config.a);
  pon->add_option("--steps", steps)->check(CLI::PositiveNumber);
  pon->add_option("--phi0", phi0);
  pon->add_option("--solve", solve, "n m: find the centre distance that closes after n chords and m turns")
      ->expected(2);
  pon->add_option("--seed", pon_seed);
  pon->add_option("--svg", pon_svg);
  pon->add_option("--csv", pon_csv);

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance criteria");
  std::uint64_t verify_seed = verification::Options{}.seed;
  verify->add_option("--seed", verify_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    g.tol = *tol_opt ? std::optional<double>(tol_flag) : env_tolerance();

    if (*pent) return emit(cli::pentagram(alpha, gamma), g);
    if (*cubic) return emit(cli::cubic_roots(cubic_omega), g);

    if (*nap) {
      if (!nap_csv.empty() && grid == 0) throw DomainError("--csv needs --grid");
      if (grid > 0) {
        const std::string csv = cli::napier_grid_csv(grid_seed, grid);
        if (nap_csv.empty()) {
          std::cout << csv;
          return cli::kPass;
        }
        write_file(nap_csv, csv);
      }
      auto rep = cli::napier(nap_k, nap_u);
      if (!nap_svg.empty()) write_file(nap_svg, svg::pentagon_svg(pentagon_from_frame(frame_vectors(nap_k, nap_u))));
      return emit(std::move(rep), g);
    }

    if (*bridge) return emit(*omega_opt ? cli::bridge_from_omega(bridge_omega) : cli::bridge_from_k(bridge_k), g);

    if (*pon) {
      if (!solve.empty()) {
        auto rep = cli::poncelet_solve(solve[0], solve[1], config.R, config.r, pon_seed);
        config.a = std::get<double>(rep.outputs.at("a"));
        steps = solve[0];
        if (!pon_svg.empty()) write_file(pon_svg, svg::poncelet_svg(trajectory(config, phi0, steps)));
        return emit(std::move(rep), g);
      }
      auto rep = cli::poncelet(config, steps, phi0);
      const auto traj = trajectory(config, phi0, steps);
      if (!pon_svg.empty()) write_file(pon_svg, svg::poncelet_svg(traj));
      if (!pon_csv.empty()) {
        std::string csv = "i,phi\n";
        for (std::size_t i = 0; i < traj.phis.size(); ++i) {
          csv += std::to_string(i) + "," + report::format_number(traj.phis[i]) + "\n";
        }
        write_file(pon_csv, csv);
      }
      return emit(std::move(rep), g);
    }

    if (*verify) {
      verification::Options opts;
      opts.seed = verify_seed;
      opts.tol_override = g.tol;
      const auto results = verification::run_acceptance(opts);
      bool all = true;
      for (const auto& r : results) {
        std::cout << verification::format_result(r);
        all = all && r.pass();
      }
      return all ? cli::kPass : cli::kCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
  return cli::kCheckFailed;
}
