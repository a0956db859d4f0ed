#ifndef FRACFLUX_SOLVER_H
#define FRACFLUX_SOLVER_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracflux/flux.h"
#include "fracflux/trace.h"

namespace fracflux {

/// n + 1 equispaced nodes on [0, 1]. Interior control volumes have width dx,
/// the two end volumes dx / 2.
struct Grid {
  std::size_t n = 100;

  double dx() const { return 1.0 / static_cast<double>(n); }
  double x(std::size_t i) const {
    return static_cast<double>(i) / static_cast<double>(n);
  }
  std::size_t nodes() const { return n + 1; }
};

struct BoundaryCondition {
  enum class Kind { Dirichlet, FixedFlux };

  Kind kind = Kind::FixedFlux;
  double value = 0.0;

  static BoundaryCondition dirichlet(double v) { return {Kind::Dirichlet, v}; }
  static BoundaryCondition fixed_flux(double q) { return {Kind::FixedFlux, q}; }
  /// Zero prescribed flux.
  static BoundaryCondition reflective() { return fixed_flux(0.0); }

  bool is_dirichlet() const { return kind == Kind::Dirichlet; }
  bool operator==(const BoundaryCondition&) const = default;
};

struct BoundarySpec {
  BoundaryCondition left;
  BoundaryCondition right;

  bool operator==(const BoundarySpec&) const = default;
};

struct SimConfig {
  double alpha = 0.5;
  double dt = 0.0005;
  double t_end = 1.0;
  /// Requested output times; snapped to the nearest step multiple.
  std::vector<double> snapshot_times;
  FluxLaw law = FluxLaw::Caputo;
  BoundarySpec bc;
  double diffusivity = 1.0;
  double stability_warn_ratio = 0.5;
  /// Stop early once the max per-step change falls below this value.
  std::optional<double> steady_tol;
  /// Accept initial data that disagrees with Dirichlet boundary values.
  bool force_inconsistent_bc = false;
};

struct Field {
  std::vector<double> u;
  double t = 0.0;
  std::size_t step = 0;
};

struct RunResult {
  std::vector<Field> snapshots;
  DiagnosticTrace trace;
  Field final;
  /// Faces of the final field; carries the RL diffusive/advective split.
  FaceFluxes final_faces;
  std::optional<double> steady_state_time;
  std::vector<std::string> warnings;
};

/// dt / dx^(1 + alpha), with alpha taken as 1 for the Fourier law. Advisory
/// only; no proven bound exists for the fractional scheme.
double stability_ratio(const SimConfig& cfg, const Grid& grid);

/// One explicit conservative update. Interior nodes receive
/// (dt/dx)(q_{i-1/2} - q_{i+1/2}); Dirichlet ends are pinned, fixed-flux
/// ends use the half-volume balance with factor 2.
/// Throws InstabilityError if a non-finite value appears.
Field step(const Field& u, std::span<const double> faces, const SimConfig& cfg,
           const Grid& grid);

/// Marches `initial` to cfg.t_end (or to steady state when cfg.steady_tol is
/// set). Deterministic: identical inputs give bit-identical results.
///
/// Throws ConfigError for invalid settings or Dirichlet data inconsistent
/// with the initial field, InstabilityError on blow-up.
RunResult run(const SimConfig& cfg, const Grid& grid, const Field& initial);

}  // namespace fracflux

#endif  // FRACFLUX_SOLVER_H
