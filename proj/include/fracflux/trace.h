#ifndef FRACFLUX_TRACE_H
#define FRACFLUX_TRACE_H

#include <cstddef>
#include <span>
#include <vector>

namespace fracflux {

/// Discrete mass with half-volume end weights:
/// (dx/2) u_0 + dx * sum_{i=1}^{n-1} u_i + (dx/2) u_n.
double total_mass(std::span<const double> u, double dx);

struct StepRecord {
  std::size_t step = 0;  // completed step index, 1-based
  double t = 0.0;
  double mass = 0.0;
  double min = 0.0;
  double max = 0.0;
  double max_change = 0.0;  // max_i |u_i^{k+1} - u_i^k|
};

/// RL face-flux split captured at a snapshot time.
struct FluxSplitSnapshot {
  double t = 0.0;
  std::vector<double> diffusive;
  std::vector<double> advective;
};

struct DiagnosticTrace {
  double dt = 0.0;
  // Values at t = 0, before any step.
  double initial_mass = 0.0;
  double initial_min = 0.0;
  double initial_max = 0.0;
  std::vector<StepRecord> steps;
  std::vector<FluxSplitSnapshot> flux_splits;
};

}  // namespace fracflux

#endif  // FRACFLUX_TRACE_H
