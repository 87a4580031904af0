#pragma once

#include <span>
#include <vector>

#include "rhd/geometry.hpp"
#include "rhd/model.hpp"

namespace rhd {

struct AgentForecast {
  AgentId agent_id{0};
  double completion_time{0};
  Location completion_location;
  bool available_within_horizon{false};
};

// An agent usable for the current window, with the position new tasks would
// start from (current position when idle, predicted end of route otherwise).
struct AvailableAgent {
  AgentId id{0};
  Location start;
};

// Predicts when the agent finishes its remaining route and where. Idle agents
// finish now, where they stand.
AgentForecast forecast(const Agent& agent, double now, MetricSpace space);

// Position at time t >= now, moving along the remaining route at constant
// velocity; clamps to the route end once everything is served.
Location position_at(const Agent& agent, double now, double t, MetricSpace space);

// Agents predicted to free up strictly before now + horizon_s, paired with
// their anticipated start positions. Idle agents always qualify; agents with
// an exhausted travel budget never do.
std::vector<AvailableAgent> availability_anticipation(double horizon_s,
                                                      std::span<const Agent> agents,
                                                      double now,
                                                      MetricSpace space);

// Attach new requests to the end of an agent's route, in order.
void assign_requests(Agent& agent, std::span<const Request> ordered,
                     CostVariant variant, MetricSpace space, double now);

}  // namespace rhd
