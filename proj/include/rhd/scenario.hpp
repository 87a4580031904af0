#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhd/geometry.hpp"
#include "rhd/model.hpp"

namespace rhd {

// A complete simulation input: the initial fleet and the request stream,
// bound to one metric space and one cost variant.
struct Scenario {
  MetricSpace space{MetricSpace::Planar};
  CostVariant variant{CostVariant::ReachOnly};
  std::vector<Agent> agents;
  std::vector<Request> requests;  // sorted by (registered_at, id)

  void validate() const;
};

// The synthetic benchmark: uniform-random tasks on a bounded planar world,
// a fixed batch of new tasks per window, a fixed fleet.
struct SyntheticSpec {
  double world_w{10.0};
  double world_h{10.0};
  int n_agents{20};
  int tasks_per_window{10};
  int total_windows{30};
  double velocity{1.0};       // m/s
  double travel_budget{150.0};
  std::uint64_t rng_seed{1};

  void validate() const;
};

// Requests are stamped at their window start (tau * delta).
Scenario generate_synthetic(const SyntheticSpec& spec, double delta);

// Line-oriented text format, one record per line:
//   agent <id> <x> <y> <velocity> <budget|inf>
//   request <id> <t> <x> <y> [<dropoff_x> <dropoff_y>]
void save_scenario(const Scenario& scenario, const std::string& path);
Scenario load_scenario(const std::string& path, double delta);

}  // namespace rhd
