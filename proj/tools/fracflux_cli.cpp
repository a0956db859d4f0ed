// fracflux: run the fractional-flux diffusion scenarios from the command line.
//
//   fracflux scenarios
//   fracflux run --scenario pulse-reflective --flux caputo --out-dir out/
//   fracflux run --config out/manifest.json --out-dir replay/
//   fracflux compare --scenario fig7-zero --flux-a rl --flux-b caputo

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracflux/app.h"
#include "fracflux/csv.h"
#include "fracflux/errors.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitUnstable = 3;

std::vector<double> parse_times(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) {
      throw fracflux::ConfigError("bad snapshot time '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

void add_common(CLI::App* cmd, fracflux::RunOptions& o, std::string& snaps) {
  cmd->add_option("--scenario", o.scenario, "Named scenario (see `scenarios`)");
  cmd->add_option("--config", o.config, "JSON config or manifest file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--alpha", o.alpha, "Fractional order in (0, 1]");
  cmd->add_option("--n", o.n, "Number of grid intervals");
  cmd->add_option("--dt", o.dt, "Time step");
  cmd->add_option("--t-end", o.t_end, "Final time");
  cmd->add_option("--snapshots", snaps, "Comma-separated snapshot times");
  cmd->add_option("--left-value", o.left_value,
                  "Override left boundary value (Dirichlet value or flux)");
  cmd->add_option("--right-value", o.right_value,
                  "Override right boundary value (Dirichlet value or flux)");
  cmd->add_option("--steady-tol", o.steady_tol,
                  "Stop once the max per-step change drops below this");
  cmd->add_flag("--force-inconsistent-bc", o.force_inconsistent_bc,
                "Allow initial data that disagrees with Dirichlet values");
  cmd->add_option("--out-dir", o.out_dir, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-fractional diffusion with conserved non-local fluxes"};
  app.require_subcommand(1);

  fracflux::RunOptions run_opts;
  std::string run_snaps;
  auto* run_cmd = app.add_subcommand("run", "Run one scenario");
  add_common(run_cmd, run_opts, run_snaps);
  run_cmd->add_option("--flux", run_opts.flux,
                      "fourier | rl | caputo | parsimonious");

  fracflux::RunOptions cmp_opts;
  std::string cmp_snaps, flux_a = "rl", flux_b = "caputo";
  auto* cmp_cmd = app.add_subcommand("compare", "Run a scenario under two laws");
  add_common(cmp_cmd, cmp_opts, cmp_snaps);
  cmp_cmd->add_option("--flux-a", flux_a, "First flux law")
      ->capture_default_str();
  cmp_cmd->add_option("--flux-b", flux_b, "Second flux law")
      ->capture_default_str();

  auto* list_cmd = app.add_subcommand("scenarios", "List scenario names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_cmd->parsed()) {
      for (const auto& name : fracflux::scenario_names()) {
        const auto s = fracflux::make_scenario(name);
        std::cout << name << "\t" << s.expected_qualitative << '\n';
      }
      return 0;
    }
    if (run_cmd->parsed()) {
      if (!run_snaps.empty()) run_opts.snapshots = parse_times(run_snaps);
      if (!run_opts.scenario && !run_opts.config) {
        std::cerr << "run: need --scenario or --config\n";
        return kExitConfig;
      }
      const auto result = fracflux::run_command(run_opts);
      std::cout << "wrote " << result.snapshots.size() << " snapshots ("
                << result.final.step << " steps, t = "
                << fracflux::format_number(result.final.t) << ") to "
                << run_opts.out_dir.string() << '\n';
      return 0;
    }
    if (cmp_cmd->parsed()) {
      if (!cmp_snaps.empty()) cmp_opts.snapshots = parse_times(cmp_snaps);
      if (!cmp_opts.scenario && !cmp_opts.config) {
        std::cerr << "compare: need --scenario or --config\n";
        return kExitConfig;
      }
      fracflux::FluxLaw a{}, b{};
      try {
        a = fracflux::parse_flux_law(flux_a);
        b = fracflux::parse_flux_law(flux_b);
      } catch (const std::invalid_argument& e) {
        throw fracflux::ConfigError(e.what());
      }
      const auto out = fracflux::compare_command(cmp_opts, a, b);
      for (const auto& s : out.verdict["snapshots"]) {
        std::cout << "t = " << fracflux::format_number(s["t"].get<double>())
                  << "  max|diff| = "
                  << fracflux::format_number(s["max_abs_diff"].get<double>())
                  << '\n';
      }
      return 0;
    }
  } catch (const fracflux::InstabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnstable;
  } catch (const fracflux::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
