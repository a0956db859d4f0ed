#include "fracflux/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracflux {

double total_mass(std::span<const double> u, double dx) {
  if (u.empty()) return 0.0;
  if (u.size() == 1) return 0.0;
  double interior = 0.0;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) interior += u[i];
  return 0.5 * dx * u.front() + dx * interior + 0.5 * dx * u.back();
}

MaxPrincipleReport max_principle_check(const DiagnosticTrace& trace,
                                       std::span<const double> initial,
                                       double tol) {
  MaxPrincipleReport report;
  report.tol = tol;
  if (initial.empty()) return report;
  const auto [lo, hi] = std::minmax_element(initial.begin(), initial.end());
  report.lower_bound = *lo;
  report.upper_bound = *hi;
  for (const auto& rec : trace.steps) {
    const bool below = rec.min < report.lower_bound - tol;
    const bool above = rec.max > report.upper_bound + tol;
    if (below || above) {
      report.violated = true;
      report.step = rec.step;
      report.t = rec.t;
      report.below = below;
      report.value = below ? rec.min : rec.max;
      break;
    }
  }
  return report;
}

std::optional<double> steady_state_time(const DiagnosticTrace& trace,
                                        double eps) {
  for (const auto& rec : trace.steps) {
    if (rec.max_change < eps) return rec.t;
  }
  return std::nullopt;
}

double mass_balance_defect(const DiagnosticTrace& trace, double q_left,
                           double q_right) {
  double worst = 0.0;
  double prev = trace.initial_mass;
  const double expected = trace.dt * (q_left - q_right);
  for (const auto& rec : trace.steps) {
    worst = std::max(worst, std::abs((rec.mass - prev) - expected));
    prev = rec.mass;
  }
  return worst;
}

EquivarianceReport equivariance_test(const Scenario& base, FluxLaw law,
                                     double a, double b) {
  Scenario plain = base;
  plain.cfg.law = law;
  Scenario mapped = affine_transform(plain, a, b);

  const RunResult ref = run(plain.cfg, plain.grid, plain.initial_field());
  const RunResult img = run(mapped.cfg, mapped.grid, mapped.initial_field());
  if (ref.snapshots.size() != img.snapshots.size()) {
    throw std::logic_error("equivariance runs produced different snapshots");
  }

  EquivarianceReport report;
  report.a = a;
  report.b = b;
  report.law = law;
  for (std::size_t s = 0; s < ref.snapshots.size(); ++s) {
    const auto& u = ref.snapshots[s].u;
    const auto& v = img.snapshots[s].u;
    double dev = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      dev = std::max(dev, std::abs(v[i] - (a * u[i] + b)));
    }
    report.snapshot_times.push_back(ref.snapshots[s].t);
    report.deviations.push_back(dev);
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  return report;
}

}  // namespace fracflux
