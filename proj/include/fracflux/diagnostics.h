#ifndef FRACFLUX_DIAGNOSTICS_H
#define FRACFLUX_DIAGNOSTICS_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fracflux/scenarios.h"
#include "fracflux/trace.h"

namespace fracflux {

struct MaxPrincipleReport {
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double tol = 0.0;
  bool violated = false;
  // First offending step, when violated.
  std::size_t step = 0;
  double t = 0.0;
  double value = 0.0;
  bool below = false;
};

/// Scans the trace for the first step whose min falls below min(g) - tol or
/// whose max exceeds max(g) + tol. Report only.
MaxPrincipleReport max_principle_check(const DiagnosticTrace& trace,
                                       std::span<const double> initial,
                                       double tol = 1e-6);

/// First recorded time with max per-step change < eps, if any.
std::optional<double> steady_state_time(const DiagnosticTrace& trace,
                                        double eps);

/// Largest |(M_{k+1} - M_k) - dt (q_left - q_right)| over the trace.
/// Meaningful only when both ends carry fixed-flux conditions.
double mass_balance_defect(const DiagnosticTrace& trace, double q_left,
                           double q_right);

struct EquivarianceReport {
  double a = 1.0;
  double b = 0.0;
  FluxLaw law = FluxLaw::Caputo;
  std::vector<double> snapshot_times;
  std::vector<double> deviations;  // max_i |u'_i - (a u_i + b)| per snapshot
  double max_deviation = 0.0;
};

/// Runs `base` and its affine image under `law` and compares snapshots.
EquivarianceReport equivariance_test(const Scenario& base, FluxLaw law,
                                     double a, double b);

}  // namespace fracflux

#endif  // FRACFLUX_DIAGNOSTICS_H
