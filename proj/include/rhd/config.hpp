#pragma once

#include <string>

#include "rhd/model.hpp"
#include "rhd/scenario.hpp"

namespace rhd {

// Everything a run is parameterized by. `sim` mirrors the simulation
// settings, `synthetic` the generator used when no scenario file is given.
struct RunSpec {
  SimConfig sim;
  SyntheticSpec synthetic;
};

// Applies one key=value setting; throws std::invalid_argument on an unknown
// key or a malformed value. Keys follow the field names (delta, total_windows,
// alpha, horizon_mode, horizon_k, max_k, capacity_rule, capacity_fraction,
// metric_space, rng_seed, population_size, p_muta, p_swap, epsilon, budget,
// generations, wall_seconds, world_w, world_h, n_agents, tasks_per_window,
// velocity, travel_budget).
void apply_setting(RunSpec& spec, const std::string& key, const std::string& value);

// key = value file, one setting per line, '#' comments.
void apply_config_file(RunSpec& spec, const std::string& path);

std::string setting_value(const RunSpec& spec, const std::string& key);

}  // namespace rhd
