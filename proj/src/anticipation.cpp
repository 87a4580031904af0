#include "rhd/anticipation.hpp"

#include <algorithm>

namespace rhd {

AgentForecast forecast(const Agent& agent, double now, MetricSpace space) {
  if (agent.velocity <= 0) {
    throw std::invalid_argument("agent velocity must be > 0");
  }
  AgentForecast f;
  f.agent_id = agent.id;
  if (agent.route.empty()) {
    f.completion_time = now;
    f.completion_location = agent.position;
    return f;
  }
  const double remaining = route_length(agent.position, agent.route, space);
  f.completion_time = now + remaining / agent.velocity;
  f.completion_location = agent.route.back().loc;
  return f;
}

Location position_at(const Agent& agent, double now, double t, MetricSpace space) {
  if (t < now) {
    throw std::invalid_argument("position_at: t must be >= now");
  }
  double travel = (t - now) * agent.velocity;
  Location at = agent.position;
  for (const Waypoint& wp : agent.route) {
    const double leg = distance(at, wp.loc, space);
    if (travel < leg) {
      const double f = leg > 0 ? travel / leg : 0.0;
      return {at.x + (wp.loc.x - at.x) * f, at.y + (wp.loc.y - at.y) * f};
    }
    travel -= leg;
    at = wp.loc;
  }
  return at;
}

std::vector<AvailableAgent> availability_anticipation(double horizon_s,
                                                      std::span<const Agent> agents,
                                                      double now,
                                                      MetricSpace space) {
  if (horizon_s < 0) {
    throw std::invalid_argument("horizon must be >= 0");
  }
  std::vector<AvailableAgent> out;
  for (const Agent& a : agents) {
    if (a.budget_exhausted()) continue;
    if (a.route.empty()) {
      // Idle agents are available at any horizon, including H(0).
      out.push_back({a.id, a.position});
      continue;
    }
    AgentForecast f = forecast(a, now, space);
    if (f.completion_time < now + horizon_s) {
      out.push_back({a.id, f.completion_location});
    }
  }
  return out;
}

void assign_requests(Agent& agent, std::span<const Request> ordered,
                     CostVariant variant, MetricSpace space, double now) {
  for (const Request& r : ordered) {
    if (std::find(agent.plan.begin(), agent.plan.end(), r.id) != agent.plan.end()) {
      throw std::logic_error("request already in agent plan");
    }
    check_location(r.pickup, space);
    if (variant == CostVariant::PickupDropoff) {
      if (!r.dropoff) {
        throw std::invalid_argument("pickup/dropoff assignment needs a dropoff");
      }
      agent.route.push_back({r.pickup, r.id, false});
      agent.route.push_back({*r.dropoff, r.id, true});
    } else {
      agent.route.push_back({r.pickup, r.id, true});
    }
    agent.plan.push_back(r.id);
  }
  if (!ordered.empty()) agent.plan_issued_at = now;
}

}  // namespace rhd
