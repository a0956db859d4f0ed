#ifndef FRACFLUX_SCENARIOS_H
#define FRACFLUX_SCENARIOS_H

#include <string>
#include <string_view>
#include <vector>

#include "fracflux/solver.h"

namespace fracflux {

/// Triangular pulse of unit area peaking at x = 0.5 with height 5.
double triangular_pulse(double x);

/// (64 pi^3 / (pi^2 - 4)) (x - 1/4)^2 sin(4 pi x) on 0 < x < 1/4, else 0.
double fig7_bump(double x);

enum class ProfileShape { Zero, TriangularPulse, Fig7Bump };

std::string_view to_string(ProfileShape shape);
ProfileShape parse_profile_shape(std::string_view name);

/// scale * shape(x) + offset.
struct InitialProfile {
  ProfileShape shape = ProfileShape::Zero;
  double scale = 1.0;
  double offset = 0.0;

  double operator()(double x) const;
  std::vector<double> sample(const Grid& grid) const;
  bool operator==(const InitialProfile&) const = default;
};

struct Scenario {
  std::string name;
  Grid grid;
  SimConfig cfg;
  InitialProfile initial;
  std::string expected_qualitative;

  Field initial_field() const;
};

/// pulse-reflective, ice-warsaw, ice-minneapolis, fig7-zero, fig7-shifted.
const std::vector<std::string>& scenario_names();

/// Throws ConfigError listing the valid names when `name` is unknown.
/// The flux law defaults to Caputo; callers set cfg.law as needed.
Scenario make_scenario(std::string_view name);

/// Maps initial and boundary data through v -> a v + b. Dirichlet values
/// follow the same map, prescribed fluxes scale by a only.
Scenario affine_transform(const Scenario& base, double a, double b);

}  // namespace fracflux

#endif  // FRACFLUX_SCENARIOS_H
