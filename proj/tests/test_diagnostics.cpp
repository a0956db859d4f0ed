#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fracflux/diagnostics.h"

using namespace fracflux;

TEST_CASE("total mass") {
  const Grid grid{100};
  CHECK(total_mass(std::vector<double>(101, 1.0), grid.dx()) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(total_mass(std::vector<double>(101, 0.0), grid.dx()) == 0.0);
  const auto pulse = make_scenario("pulse-reflective").initial_field().u;
  CHECK(std::abs(total_mass(pulse, grid.dx()) - 1.0) <= 1e-12);
  // End nodes carry half weight.
  CHECK(total_mass(std::vector<double>{2.0, 0.0, 0.0, 4.0}, 1.0 / 3) ==
        doctest::Approx(1.0));
}

TEST_CASE("max principle: Caputo on fig7-zero holds") {
  const auto s = make_scenario("fig7-zero");
  const auto r = run(s.cfg, s.grid, s.initial_field());
  const auto rep = max_principle_check(r.trace, s.initial_field().u, 1e-6);
  CHECK_FALSE(rep.violated);
  CHECK(rep.lower_bound == 0.0);
  CHECK(rep.upper_bound > 0.0);
}

TEST_CASE("max principle: RL on fig7-shifted dips below 5") {
  auto s = make_scenario("fig7-shifted");
  s.cfg.law = FluxLaw::RiemannLiouville;
  const auto r = run(s.cfg, s.grid, s.initial_field());
  const auto rep = max_principle_check(r.trace, s.initial_field().u, 1e-6);
  REQUIRE(rep.violated);
  CHECK(rep.below);
  CHECK(rep.lower_bound == 5.0);
  CHECK(rep.value < 5.0 - 1e-6);
  CHECK(rep.step >= 1);
}

TEST_CASE("max principle: constant field under Caputo") {
  const Grid grid{50};
  SimConfig cfg;
  cfg.t_end = 0.5;
  const Field u{std::vector<double>(51, 4.0), 0.0, 0};
  const auto r = run(cfg, grid, u);
  CHECK_FALSE(max_principle_check(r.trace, u.u).violated);
}

TEST_CASE("steady-state time") {
  SUBCASE("constant field settles on the first step") {
    const Grid grid{50};
    SimConfig cfg;
    cfg.t_end = 0.01;
    const auto r = run(cfg, grid, Field{std::vector<double>(51, 1.0), 0.0, 0});
    const auto t = steady_state_time(r.trace, 1e-10);
    REQUIRE(t.has_value());
    CHECK(*t == cfg.dt);
  }
  SUBCASE("pulse under Caputo flattens to unit height") {
    auto s = make_scenario("pulse-reflective");
    s.cfg.t_end = 100.0;
    s.cfg.snapshot_times = {};
    s.cfg.steady_tol = 1e-10;
    const auto r = run(s.cfg, s.grid, s.initial_field());
    const auto t = steady_state_time(r.trace, 1e-10);
    REQUIRE(t.has_value());
    CHECK(*t == r.steady_state_time.value());
    CHECK(*t < 100.0);
    for (double v : r.final.u) CHECK(std::abs(v - 1.0) <= 1e-3);
  }
  SUBCASE("a diverging trace never settles") {
    DiagnosticTrace trace;
    trace.dt = 0.1;
    for (std::size_t k = 1; k <= 50; ++k) {
      trace.steps.push_back({k, 0.1 * k, 1.0, -std::pow(3.0, k),
                             std::pow(3.0, k), std::pow(3.0, k)});
    }
    CHECK_FALSE(steady_state_time(trace, 1e-10).has_value());
  }
}

TEST_CASE("mass balance defect is zero for every law") {
  auto s = make_scenario("pulse-reflective");
  s.cfg.t_end = 2.0;
  s.cfg.snapshot_times = {};
  for (auto law : {FluxLaw::RiemannLiouville, FluxLaw::Caputo,
                   FluxLaw::Parsimonious}) {
    s.cfg.law = law;
    const auto r = run(s.cfg, s.grid, s.initial_field());
    CHECK(mass_balance_defect(r.trace, 0.0, 0.0) <= 1e-13);
  }
}

TEST_CASE("equivariance reports") {
  SUBCASE("Caputo shift on fig7") {
    const auto rep = equivariance_test(make_scenario("fig7-zero"),
                                       FluxLaw::Caputo, 1.0, 5.0);
    CHECK(rep.deviations.size() == 3);
    CHECK(rep.max_deviation <= 1e-10);
  }
  SUBCASE("RL scaling with zero Dirichlet data") {
    for (const char* name : {"fig7-zero", "ice-warsaw"}) {
      const auto rep = equivariance_test(make_scenario(name),
                                         FluxLaw::RiemannLiouville, 2.0, 0.0);
      CHECK(rep.max_deviation <= 1e-10);
    }
  }
  SUBCASE("RL shift on the ice problem fails and grows") {
    const auto rep = equivariance_test(make_scenario("ice-warsaw"),
                                       FluxLaw::RiemannLiouville, 1.0, 32.0);
    CHECK(rep.max_deviation > 1e-6);
    REQUIRE(rep.deviations.size() >= 3);
    CHECK(rep.deviations.front() == 0.0);  // t = 0
    CHECK(std::is_sorted(rep.deviations.begin(), rep.deviations.end()));
    CHECK(rep.deviations.back() > 1.0);
  }
}

TEST_CASE("RL flux splits: advective part vanishes with zero left data") {
  auto s = make_scenario("fig7-zero");
  s.cfg.law = FluxLaw::RiemannLiouville;
  const auto r = run(s.cfg, s.grid, s.initial_field());
  REQUIRE(r.trace.flux_splits.size() == 3);
  for (const auto& split : r.trace.flux_splits) {
    for (double a : split.advective) CHECK(a == 0.0);
  }

  auto m = make_scenario("ice-minneapolis");
  m.cfg.law = FluxLaw::RiemannLiouville;
  m.cfg.t_end = 0.05;
  m.cfg.snapshot_times = {0.0, 0.05};
  const auto rm = run(m.cfg, m.grid, m.initial_field());
  REQUIRE(rm.trace.flux_splits.size() == 2);
  for (double d : rm.trace.flux_splits[0].diffusive) CHECK(d == 0.0);
  for (double a : rm.trace.flux_splits[0].advective) CHECK(a < 0.0);
}
