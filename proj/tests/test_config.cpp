#include "doctest.h"
#include "rhd/config.hpp"

#include <cstdio>
#include <string>

using namespace rhd;

TEST_CASE("settings land in the right fields") {
  RunSpec spec;
  apply_setting(spec, "delta", "300");
  apply_setting(spec, "alpha", "0.5");
  apply_setting(spec, "horizon_mode", "variable");
  apply_setting(spec, "max_k", "5");
  apply_setting(spec, "capacity_rule", "unbounded");
  apply_setting(spec, "metric_space", "geographic");
  apply_setting(spec, "rng_seed", "42");
  apply_setting(spec, "population_size", "64");
  apply_setting(spec, "budget", "generations");
  apply_setting(spec, "generations", "250");
  apply_setting(spec, "n_agents", "12");
  apply_setting(spec, "travel_budget", "inf");

  CHECK(spec.sim.delta == 300.0);
  CHECK(spec.sim.alpha == 0.5);
  CHECK(spec.sim.horizon.kind == HorizonMode::Kind::Variable);
  CHECK(spec.sim.horizon.k == 5);
  CHECK(spec.sim.capacity.kind == CapacityRule::Kind::Unbounded);
  CHECK(spec.sim.space == MetricSpace::Geographic);
  CHECK(spec.sim.rng_seed == 42);
  CHECK(spec.synthetic.rng_seed == 42);  // one seed drives both
  CHECK(spec.sim.ga.population_size == 64);
  CHECK(spec.sim.ga.budget.kind == GABudget::Kind::Generations);
  CHECK(spec.sim.ga.budget.generations == 250);
  CHECK(spec.synthetic.n_agents == 12);
  CHECK(spec.synthetic.travel_budget == kUnboundedBudget);
}

TEST_CASE("unknown keys and bad values are rejected") {
  RunSpec spec;
  CHECK_THROWS_AS(apply_setting(spec, "nope", "1"), std::invalid_argument);
  CHECK_THROWS_AS(apply_setting(spec, "alpha", "abc"), std::invalid_argument);
  CHECK_THROWS_AS(apply_setting(spec, "total_windows", "3.5"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_setting(spec, "horizon_mode", "sometimes"),
                  std::invalid_argument);
}

TEST_CASE("config files parse with comments and override in order") {
  const std::string path = "/tmp/rhd_test_config.cfg";
  FILE* f = std::fopen(path.c_str(), "w");
  std::fputs(
      "# synthetic benchmark\n"
      "alpha = 0.75\n"
      "delta = 5        # seconds\n"
      "tasks_per_window = 10\n"
      "alpha = 0.25\n",
      f);
  std::fclose(f);

  RunSpec spec;
  apply_config_file(spec, path);
  CHECK(spec.sim.alpha == 0.25);
  CHECK(spec.sim.delta == 5.0);
  CHECK(spec.synthetic.tasks_per_window == 10);

  f = std::fopen(path.c_str(), "w");
  std::fputs("alpha\n", f);
  std::fclose(f);
  CHECK_THROWS_AS(apply_config_file(spec, path), std::runtime_error);

  CHECK_THROWS_AS(apply_config_file(spec, "/nonexistent/rhd.cfg"),
                  std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("every documented key reads back what was written") {
  RunSpec spec;
  const std::pair<const char*, const char*> cases[] = {
      {"delta", "12"},         {"total_windows", "9"},
      {"alpha", "0.625"},      {"horizon_mode", "variable"},
      {"horizon_k", "4"},      {"capacity_rule", "unbounded"},
      {"capacity_fraction", "0.5"}, {"metric_space", "geographic"},
      {"rng_seed", "123"},     {"population_size", "48"},
      {"p_muta", "0.25"},      {"p_swap", "0.125"},
      {"epsilon", "0.0001"},   {"budget", "generations"},
      {"generations", "77"},   {"wall_seconds", "2.5"},
      {"world_w", "20"},       {"world_h", "15"},
      {"n_agents", "7"},       {"tasks_per_window", "13"},
      {"velocity", "2.5"},     {"travel_budget", "inf"},
  };
  for (const auto& [key, value] : cases) {
    apply_setting(spec, key, value);
    const std::string got = setting_value(spec, key);
    try {
      std::size_t pos = 0;
      const double want = std::stod(value, &pos);
      if (pos == std::string(value).size()) {
        CHECK(std::stod(got) == want);
        continue;
      }
    } catch (const std::exception&) {
    }
    CHECK(got == value);
  }
}
