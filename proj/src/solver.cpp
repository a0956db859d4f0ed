#include "fracflux/solver.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>

#include "fracflux/errors.h"

namespace fracflux {

namespace {

// Runaway threshold relative to the initial magnitude.
constexpr double kBlowupFactor = 1e12;

void apply_update(std::span<const double> u, std::span<const double> q,
                  const SimConfig& cfg, double dx, std::span<double> next) {
  const std::size_t n = u.size() - 1;
  const double r = cfg.dt / dx;

  for (std::size_t i = 1; i < n; ++i) {
    next[i] = u[i] + r * (q[i - 1] - q[i]);
  }

  const BoundaryCondition& left = cfg.bc.left;
  if (left.is_dirichlet()) {
    next[0] = left.value;
  } else {
    next[0] = u[0] + 2.0 * r * (left.value - q[0]);
  }

  const BoundaryCondition& right = cfg.bc.right;
  if (right.is_dirichlet()) {
    next[n] = right.value;
  } else {
    next[n] = u[n] + 2.0 * r * (q[n - 1] - right.value);
  }
}

void validate(const SimConfig& cfg, const Grid& grid, const Field& initial) {
  if (grid.n < 1) throw ConfigError("grid needs n >= 1");
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) {
    throw ConfigError("alpha must lie in (0, 1]");
  }
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw ConfigError("dt must be positive and finite");
  }
  if (!(cfg.t_end >= 0.0) || !std::isfinite(cfg.t_end)) {
    throw ConfigError("t_end must be non-negative and finite");
  }
  if (cfg.steady_tol && !(*cfg.steady_tol > 0.0)) {
    throw ConfigError("steady-state tolerance must be positive");
  }
  if (!std::is_sorted(cfg.snapshot_times.begin(), cfg.snapshot_times.end())) {
    throw ConfigError("snapshot times must be sorted");
  }
  for (double ts : cfg.snapshot_times) {
    if (ts < 0.0 || ts > cfg.t_end + 0.5 * cfg.dt) {
      std::ostringstream os;
      os << "snapshot time " << ts << " outside [0, " << cfg.t_end << "]";
      throw ConfigError(os.str());
    }
  }
  if (initial.u.size() != grid.nodes()) {
    throw ConfigError("initial field has " + std::to_string(initial.u.size()) +
                      " nodes, grid has " + std::to_string(grid.nodes()));
  }
  for (double v : initial.u) {
    if (!std::isfinite(v)) throw ConfigError("initial field is not finite");
  }

  if (cfg.force_inconsistent_bc) return;
  auto check = [](const BoundaryCondition& bc, double node, const char* side) {
    if (!bc.is_dirichlet()) return;
    const double tol = 1e-12 * std::max(1.0, std::abs(bc.value));
    if (std::abs(node - bc.value) > tol) {
      std::ostringstream os;
      os << side << " Dirichlet value " << bc.value
         << " disagrees with initial data " << node
         << " (use --force-inconsistent-bc to override)";
      throw ConfigError(os.str());
    }
  };
  check(cfg.bc.left, initial.u.front(), "left");
  check(cfg.bc.right, initial.u.back(), "right");
}

}  // namespace

double stability_ratio(const SimConfig& cfg, const Grid& grid) {
  // The Fourier law is the alpha = 1 member regardless of cfg.alpha.
  const double order = cfg.law == FluxLaw::Fourier ? 1.0 : cfg.alpha;
  return cfg.dt / std::pow(grid.dx(), 1.0 + order);
}

Field step(const Field& u, std::span<const double> faces, const SimConfig& cfg,
           const Grid& grid) {
  if (u.u.size() != grid.nodes() || faces.size() != grid.n) {
    throw std::domain_error("step: field/face sizes do not match the grid");
  }
  Field next{std::vector<double>(u.u.size()), u.t + cfg.dt, u.step + 1};
  apply_update(u.u, faces, cfg, grid.dx(), next.u);
  for (double v : next.u) {
    if (!std::isfinite(v)) {
      throw InstabilityError("non-finite value at step " +
                                 std::to_string(next.step),
                             next.step, next.t);
    }
  }
  return next;
}

RunResult run(const SimConfig& cfg, const Grid& grid, const Field& initial) {
  validate(cfg, grid, initial);

  const double dx = grid.dx();
  const std::size_t n = grid.n;
  const auto table = GrunwaldTable::build(cfg.alpha, dx, n);
  FaceFluxKernel kernel(cfg.law, table, cfg.diffusivity);

  RunResult result;
  const double ratio = stability_ratio(cfg, grid);
  if (ratio > cfg.stability_warn_ratio) {
    std::ostringstream os;
    os << "stability ratio dt/dx^(1+alpha) = " << ratio
       << " exceeds advisory threshold " << cfg.stability_warn_ratio;
    result.warnings.push_back(os.str());
    std::cerr << "warning: " << os.str() << '\n';
  }

  const auto total_steps =
      static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
  std::vector<std::size_t> snap_steps;
  for (double ts : cfg.snapshot_times) {
    const auto k = static_cast<std::size_t>(std::llround(ts / cfg.dt));
    if (snap_steps.empty() || snap_steps.back() != k) snap_steps.push_back(k);
  }
  auto next_snap = snap_steps.begin();

  std::vector<double> u = initial.u;
  std::vector<double> next(u.size());
  std::vector<double> q(n);

  const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
  double scale = std::max(std::abs(*lo), std::abs(*hi));
  if (scale == 0.0) scale = 1.0;
  const double blowup = kBlowupFactor * scale;

  auto& trace = result.trace;
  trace.dt = cfg.dt;
  trace.initial_mass = total_mass(u, dx);
  trace.initial_min = *lo;
  trace.initial_max = *hi;
  trace.steps.reserve(total_steps);

  auto take_snapshot = [&](std::size_t k) {
    const double t = static_cast<double>(k) * cfg.dt;
    result.snapshots.push_back(Field{u, t, k});
    if (cfg.law == FluxLaw::RiemannLiouville) {
      FaceFluxes split = rl_faces_weighted(u, table);
      trace.flux_splits.push_back(
          {t, std::move(split.diffusive), std::move(split.advective)});
    }
  };

  if (next_snap != snap_steps.end() && *next_snap == 0) {
    take_snapshot(0);
    ++next_snap;
  }

  std::size_t k = 0;
  while (k < total_steps) {
    kernel(u, q);
    apply_update(u, q, cfg, dx, next);
    ++k;
    const double t = static_cast<double>(k) * cfg.dt;

    double change = 0.0;
    double mn = next[0], mx = next[0];
    for (std::size_t i = 0; i <= n; ++i) {
      const double v = next[i];
      if (!std::isfinite(v) || std::abs(v) > blowup) {
        std::ostringstream os;
        os << "solution blew up at step " << k << " (t = " << t
           << ", node " << i << ", value " << v << "); stability ratio "
           << ratio;
        throw InstabilityError(os.str(), k, t);
      }
      change = std::max(change, std::abs(v - u[i]));
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    u.swap(next);
    trace.steps.push_back({k, t, total_mass(u, dx), mn, mx, change});

    if (next_snap != snap_steps.end() && *next_snap == k) {
      take_snapshot(k);
      ++next_snap;
    }
    if (cfg.steady_tol && change < *cfg.steady_tol) {
      result.steady_state_time = t;
      break;
    }
  }

  result.final = Field{u, static_cast<double>(k) * cfg.dt, k};
  // Stopped early: the remaining snapshots would all show the steady field.
  if (next_snap != snap_steps.end() &&
      (result.snapshots.empty() || result.snapshots.back().step != k)) {
    take_snapshot(k);
  }
  result.final_faces =
      evaluate_faces(cfg.law, result.final.u, table, cfg.diffusivity);
  return result;
}

}  // namespace fracflux
