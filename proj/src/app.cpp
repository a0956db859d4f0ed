#include "fracflux/app.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "fracflux/csv.h"
#include "fracflux/errors.h"

namespace fracflux {

using nlohmann::json;

namespace {

json bc_to_json(const BoundaryCondition& bc) {
  return {{"type", bc.is_dirichlet() ? "dirichlet" : "fixed_flux"},
          {"value", bc.value}};
}

BoundaryCondition bc_from_json(const json& j, BoundaryCondition bc) {
  for (const auto& [key, val] : j.items()) {
    if (key == "type") {
      const auto type = val.get<std::string>();
      if (type == "dirichlet") {
        bc.kind = BoundaryCondition::Kind::Dirichlet;
      } else if (type == "fixed_flux") {
        bc.kind = BoundaryCondition::Kind::FixedFlux;
      } else {
        throw ConfigError("boundary type must be dirichlet or fixed_flux, got '" +
                          type + "'");
      }
    } else if (key == "value") {
      bc.value = val.get<double>();
    } else {
      throw ConfigError("unknown boundary key '" + key + "'");
    }
  }
  return bc;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open " + path.string() + " for writing");
  os << text;
  if (!os) throw ConfigError("failed writing " + path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Snapshots past a shortened t_end are dropped and t_end itself is added.
void clip_snapshots(SimConfig& cfg) {
  auto& ts = cfg.snapshot_times;
  const double limit = cfg.t_end + 0.5 * cfg.dt;
  ts.erase(std::remove_if(ts.begin(), ts.end(),
                          [limit](double t) { return t > limit; }),
           ts.end());
  if (ts.empty() || std::llround(ts.back() / cfg.dt) !=
                        std::llround(cfg.t_end / cfg.dt)) {
    ts.push_back(cfg.t_end);
  }
}

template <typename T>
std::vector<std::size_t> sample_indices(const std::vector<T>& v,
                                        std::size_t max_points) {
  std::vector<std::size_t> idx;
  if (v.empty() || max_points == 0) return idx;
  const std::size_t stride =
      std::max<std::size_t>(1, (v.size() + max_points - 2) / (max_points - 1));
  for (std::size_t i = 0; i < v.size(); i += stride) idx.push_back(i);
  if (idx.back() != v.size() - 1) {
    if (idx.size() == max_points) idx.back() = v.size() - 1;
    else idx.push_back(v.size() - 1);
  }
  return idx;
}

}  // namespace

json RunManifest::to_json() const {
  const auto& c = scenario.cfg;
  json j;
  j["scenario"] = scenario.name;
  j["alpha"] = c.alpha;
  j["n"] = scenario.grid.n;
  j["dx"] = scenario.grid.dx();
  j["dt"] = c.dt;
  j["t_end"] = c.t_end;
  j["snapshot_times"] = c.snapshot_times;
  j["flux"] = std::string(to_string(c.law));
  j["bc"] = {{"left", bc_to_json(c.bc.left)}, {"right", bc_to_json(c.bc.right)}};
  j["initial"] = {{"profile", std::string(to_string(scenario.initial.shape))},
                  {"scale", scenario.initial.scale},
                  {"offset", scenario.initial.offset}};
  j["diffusivity"] = c.diffusivity;
  j["stability_warn_ratio"] = c.stability_warn_ratio;
  j["steady_tol"] = c.steady_tol ? json(*c.steady_tol) : json(nullptr);
  j["force_inconsistent_bc"] = c.force_inconsistent_bc;
  j["stability_ratio"] = stability_ratio(c, scenario.grid);
  j["tool_version"] = tool_version;
  return j;
}

void apply_config_json(const json& j, Scenario& s) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  auto& c = s.cfg;
  try {
    for (const auto& [key, val] : j.items()) {
      if (key == "scenario") {
        s.name = val.get<std::string>();
      } else if (key == "alpha") {
        c.alpha = val.get<double>();
      } else if (key == "n") {
        s.grid.n = val.get<std::size_t>();
      } else if (key == "dt") {
        c.dt = val.get<double>();
      } else if (key == "t_end") {
        c.t_end = val.get<double>();
      } else if (key == "snapshot_times") {
        c.snapshot_times = val.get<std::vector<double>>();
      } else if (key == "flux") {
        c.law = parse_flux_law(val.get<std::string>());
      } else if (key == "bc") {
        for (const auto& [side, bj] : val.items()) {
          if (side == "left") c.bc.left = bc_from_json(bj, c.bc.left);
          else if (side == "right") c.bc.right = bc_from_json(bj, c.bc.right);
          else throw ConfigError("unknown bc side '" + side + "'");
        }
      } else if (key == "initial") {
        for (const auto& [ik, iv] : val.items()) {
          if (ik == "profile") {
            s.initial.shape = parse_profile_shape(iv.get<std::string>());
          } else if (ik == "scale") {
            s.initial.scale = iv.get<double>();
          } else if (ik == "offset") {
            s.initial.offset = iv.get<double>();
          } else {
            throw ConfigError("unknown initial key '" + ik + "'");
          }
        }
      } else if (key == "diffusivity") {
        c.diffusivity = val.get<double>();
      } else if (key == "stability_warn_ratio") {
        c.stability_warn_ratio = val.get<double>();
      } else if (key == "steady_tol") {
        if (val.is_null()) c.steady_tol.reset();
        else c.steady_tol = val.get<double>();
      } else if (key == "force_inconsistent_bc") {
        c.force_inconsistent_bc = val.get<bool>();
      } else if (key == "dx" || key == "stability_ratio" ||
                 key == "tool_version") {
        // Derived or informational; recomputed on output.
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

RunManifest resolve_manifest(const RunOptions& opts) {
  json file;
  if (opts.config) {
    std::ifstream is(*opts.config);
    if (!is) throw ConfigError("cannot read config " + opts.config->string());
    try {
      is >> file;
    } catch (const json::exception& e) {
      throw ConfigError("config " + opts.config->string() +
                        " is not valid JSON: " + e.what());
    }
  }

  std::optional<std::string> name = opts.scenario;
  if (!name && file.is_object() && file.contains("scenario")) {
    name = file["scenario"].get<std::string>();
  }

  RunManifest m;
  if (name && *name != "custom") {
    m.scenario = make_scenario(*name);
  } else {
    m.scenario.name = "custom";
  }
  if (opts.config) {
    apply_config_json(file, m.scenario);
    if (name) m.scenario.name = *name;
  }

  auto& c = m.scenario.cfg;
  if (opts.flux) {
    try {
      c.law = parse_flux_law(*opts.flux);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (opts.alpha) c.alpha = *opts.alpha;
  if (opts.n) m.scenario.grid.n = *opts.n;
  if (opts.dt) c.dt = *opts.dt;
  if (opts.t_end) c.t_end = *opts.t_end;
  if (opts.snapshots) {
    c.snapshot_times = *opts.snapshots;
    std::sort(c.snapshot_times.begin(), c.snapshot_times.end());
  } else if (opts.t_end) {
    clip_snapshots(c);
  }
  if (opts.left_value) c.bc.left.value = *opts.left_value;
  if (opts.right_value) c.bc.right.value = *opts.right_value;
  if (opts.steady_tol) c.steady_tol = *opts.steady_tol;
  if (opts.force_inconsistent_bc) c.force_inconsistent_bc = true;
  return m;
}

json make_summary(const RunManifest& manifest, const RunResult& result,
                  std::size_t max_trace_points) {
  const auto& trace = result.trace;
  json s;
  s["manifest"] = manifest.to_json();
  s["steps"] = result.final.step;
  s["final_time"] = result.final.t;
  s["steady_state_time"] = result.steady_state_time
                               ? json(*result.steady_state_time)
                               : json(nullptr);
  s["warnings"] = result.warnings;

  // Trace point 0 is the initial state, then one point per step.
  struct Point { double t, mass, min, max; };
  std::vector<Point> pts;
  pts.reserve(trace.steps.size() + 1);
  pts.push_back({0.0, trace.initial_mass, trace.initial_min, trace.initial_max});
  for (const auto& r : trace.steps) pts.push_back({r.t, r.mass, r.min, r.max});

  json t = json::array(), mass = json::array(), mn = json::array(),
       mx = json::array();
  for (std::size_t i : sample_indices(pts, max_trace_points)) {
    t.push_back(pts[i].t);
    mass.push_back(pts[i].mass);
    mn.push_back(pts[i].min);
    mx.push_back(pts[i].max);
  }
  s["mass_trace"] = {{"t", t}, {"mass", mass}};
  s["min_max_trace"] = {{"t", t}, {"min", mn}, {"max", mx}};

  const auto initial = manifest.scenario.initial_field();
  const auto mp = max_principle_check(trace, initial.u);
  s["max_principle"] = {{"lower_bound", mp.lower_bound},
                        {"upper_bound", mp.upper_bound},
                        {"tol", mp.tol},
                        {"violated", mp.violated}};
  if (mp.violated) {
    s["max_principle"]["step"] = mp.step;
    s["max_principle"]["t"] = mp.t;
    s["max_principle"]["value"] = mp.value;
    s["max_principle"]["kind"] = mp.below ? "below_lower_bound"
                                          : "above_upper_bound";
  }

  if (manifest.scenario.cfg.law == FluxLaw::RiemannLiouville &&
      result.final_faces.has_decomposition()) {
    const auto& grid = manifest.scenario.grid;
    json xf = json::array();
    for (std::size_t i = 0; i < grid.n; ++i) {
      xf.push_back((static_cast<double>(i) + 0.5) * grid.dx());
    }
    s["flux_decomposition"] = {{"t", result.final.t},
                               {"x_face", xf},
                               {"q", result.final_faces.q},
                               {"diffusive", result.final_faces.diffusive},
                               {"advective", result.final_faces.advective}};
  }
  return s;
}

RunResult run_command(const RunOptions& opts) {
  const RunManifest m = resolve_manifest(opts);
  const auto& sc = m.scenario;
  RunResult result = run(sc.cfg, sc.grid, sc.initial_field());

  std::filesystem::create_directories(opts.out_dir);
  std::ostringstream csv;
  write_snapshots_csv(csv, result.snapshots, sc.grid);
  write_file(opts.out_dir / "snapshots.csv", csv.str());
  write_file(opts.out_dir / "manifest.json", dump(m.to_json()));
  write_file(opts.out_dir / "summary.json", dump(make_summary(m, result)));
  return result;
}

CompareOutcome compare_command(const RunOptions& opts, FluxLaw law_a,
                               FluxLaw law_b) {
  RunManifest ma = resolve_manifest(opts);
  RunManifest mb = ma;
  ma.scenario.cfg.law = law_a;
  mb.scenario.cfg.law = law_b;

  auto launch = [](const RunManifest& m) {
    return run(m.scenario.cfg, m.scenario.grid, m.scenario.initial_field());
  };
  auto fut_a = std::async(std::launch::async, launch, std::cref(ma));
  auto fut_b = std::async(std::launch::async, launch, std::cref(mb));
  CompareOutcome out{fut_a.get(), fut_b.get(), {}};

  if (out.a.snapshots.size() != out.b.snapshots.size()) {
    throw ConfigError(
        "compare: runs stopped at different times; drop steady_tol");
  }

  json snaps = json::array();
  double overall = 0.0;
  for (std::size_t s = 0; s < out.a.snapshots.size(); ++s) {
    const auto& ua = out.a.snapshots[s].u;
    const auto& ub = out.b.snapshots[s].u;
    double worst = 0.0;
    for (std::size_t i = 0; i < ua.size(); ++i) {
      worst = std::max(worst, std::abs(ua[i] - ub[i]));
    }
    overall = std::max(overall, worst);
    snaps.push_back({{"t", out.a.snapshots[s].t}, {"max_abs_diff", worst}});
  }
  out.verdict = {{"scenario", ma.scenario.name},
                 {"flux_a", std::string(to_string(law_a))},
                 {"flux_b", std::string(to_string(law_b))},
                 {"snapshots", snaps},
                 {"max_abs_diff", overall},
                 {"manifest_a", ma.to_json()},
                 {"manifest_b", mb.to_json()}};

  std::filesystem::create_directories(opts.out_dir);
  std::ostringstream csv;
  write_compare_csv(csv, out.a.snapshots, out.b.snapshots, ma.scenario.grid);
  write_file(opts.out_dir / "compare.csv", csv.str());
  write_file(opts.out_dir / "compare.json", dump(out.verdict));
  return out;
}

}  // namespace fracflux
