#ifndef FRACFLUX_APP_H
#define FRACFLUX_APP_H

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracflux/diagnostics.h"
#include "fracflux/scenarios.h"

namespace fracflux {

inline constexpr const char* kToolVersion = "1.0.0";

/// Fully resolved run description. Written as manifest.json and echoed in
/// summary.json; feeding it back through --config reproduces the run.
struct RunManifest {
  Scenario scenario;
  std::string tool_version = kToolVersion;

  nlohmann::json to_json() const;
};

/// Command-line overrides. Unset members leave the file/scenario values.
struct RunOptions {
  std::optional<std::string> scenario;
  std::optional<std::filesystem::path> config;
  std::optional<std::string> flux;
  std::optional<double> alpha;
  std::optional<std::size_t> n;
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<std::vector<double>> snapshots;
  std::optional<double> left_value;
  std::optional<double> right_value;
  std::optional<double> steady_tol;
  bool force_inconsistent_bc = false;
  std::filesystem::path out_dir = ".";
};

/// Precedence: flags over config file over scenario defaults.
/// Throws ConfigError on unknown scenario/keys or malformed values.
RunManifest resolve_manifest(const RunOptions& opts);

/// Builds a manifest from its JSON form (manifest.json or a config file).
/// Keys absent from `j` keep the values already in `base`.
void apply_config_json(const nlohmann::json& j, Scenario& base);

/// Summary document: manifest, downsampled mass and min/max traces,
/// max-principle report, steady-state time and, for RL, the final flux split.
nlohmann::json make_summary(const RunManifest& manifest,
                            const RunResult& result,
                            std::size_t max_trace_points = 10000);

/// Writes snapshots.csv, summary.json and manifest.json into opts.out_dir.
RunResult run_command(const RunOptions& opts);

struct CompareOutcome {
  RunResult a;
  RunResult b;
  nlohmann::json verdict;
};

/// Runs one scenario under two laws (concurrently) and writes compare.csv
/// and compare.json into opts.out_dir.
CompareOutcome compare_command(const RunOptions& opts, FluxLaw law_a,
                               FluxLaw law_b);

}  // namespace fracflux

#endif  // FRACFLUX_APP_H
