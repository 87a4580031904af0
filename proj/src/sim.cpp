#include "rhd/sim.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace rhd {

RequestBuffer::RequestBuffer(std::vector<Request> stream) {
  std::sort(stream.begin(), stream.end(), [](const Request& a, const Request& b) {
    return a.registered_at < b.registered_at ||
           (a.registered_at == b.registered_at && a.id < b.id);
  });
  pending.assign(stream.begin(), stream.end());
}

std::vector<Request> RequestBuffer::take_window(int window, double delta) {
  std::vector<Request> out = std::move(carried);
  carried.clear();
  const double window_end = (window + 1) * delta;
  while (!pending.empty() && pending.front().registered_at < window_end) {
    out.push_back(std::move(pending.front()));
    pending.pop_front();
  }
  std::sort(out.begin(), out.end(), [](const Request& a, const Request& b) {
    return a.registered_at < b.registered_at ||
           (a.registered_at == b.registered_at && a.id < b.id);
  });
  return out;
}

void RequestBuffer::carry(std::vector<Request> unassigned) {
  for (Request& r : unassigned) carried.push_back(std::move(r));
}

void commit_solution(const WindowSolution& solution, std::vector<Agent>& agents,
                     const std::vector<Request>& window_tasks,
                     RequestBuffer& buffer, CostVariant variant,
                     MetricSpace space, double now, int capacity) {
  std::unordered_map<RequestId, const Request*> by_id;
  for (const Request& r : window_tasks) by_id.emplace(r.id, &r);
  std::unordered_map<AgentId, Agent*> agent_by_id;
  for (Agent& a : agents) agent_by_id.emplace(a.id, &a);

  std::unordered_set<RequestId> assigned;
  for (const WindowSolution::Entry& entry : solution.entries) {
    auto ait = agent_by_id.find(entry.agent_id);
    if (ait == agent_by_id.end()) {
      throw std::logic_error("solution references unknown agent");
    }
    if (capacity > 0 && static_cast<int>(entry.requests.size()) > capacity) {
      throw std::logic_error("solution violates the per-agent capacity");
    }
    std::vector<Request> ordered;
    ordered.reserve(entry.requests.size());
    for (RequestId id : entry.requests) {
      auto rit = by_id.find(id);
      if (rit == by_id.end()) {
        throw std::logic_error("solution references a request outside the window");
      }
      if (!assigned.insert(id).second) {
        throw std::logic_error("request assigned twice");
      }
      ordered.push_back(*rit->second);
    }
    assign_requests(*ait->second, ordered, variant, space, now);
  }

  std::vector<Request> leftovers;
  for (const Request& r : window_tasks) {
    if (!assigned.count(r.id)) leftovers.push_back(r);
  }
  buffer.carry(std::move(leftovers));
}

AdvanceDeltas advance_time(std::vector<Agent>& agents, double from, double to,
                           MetricSpace space) {
  if (to < from) throw std::invalid_argument("advance_time: to must be >= from");
  AdvanceDeltas deltas;
  deltas.distance.assign(agents.size(), 0.0);
  deltas.idle.assign(agents.size(), 0.0);

  for (std::size_t i = 0; i < agents.size(); ++i) {
    Agent& a = agents[i];
    double t = from;
    while (t < to && !a.route.empty()) {
      const Waypoint& wp = a.route.front();
      const double leg = distance(a.position, wp.loc, space);
      const double t_arrive = t + leg / a.velocity;
      if (t_arrive <= to) {
        a.position = wp.loc;
        deltas.distance[i] += leg;
        t = t_arrive;
        if (wp.completes_request) {
          auto it = std::find(a.plan.begin(), a.plan.end(), wp.request);
          if (it != a.plan.end()) a.plan.erase(it);
        }
        a.route.pop_front();
        if (a.route.empty()) a.last_route_end_time = t;
      } else {
        const double travel = (to - t) * a.velocity;
        const double f = leg > 0 ? travel / leg : 0.0;
        a.position = {a.position.x + (wp.loc.x - a.position.x) * f,
                      a.position.y + (wp.loc.y - a.position.y) * f};
        deltas.distance[i] += travel;
        t = to;
      }
    }
    if (a.route.empty() && t < to) deltas.idle[i] += to - t;
    a.distance_traveled += deltas.distance[i];
  }
  return deltas;
}

SimMetrics run_simulation(const SimConfig& config, const Scenario& scenario) {
  config.validate();
  scenario.validate();
  if (scenario.space != config.space) {
    throw std::invalid_argument("config metric space differs from the scenario's");
  }

  std::vector<Agent> agents = scenario.agents;
  RequestBuffer buffer(scenario.requests);

  SimMetrics metrics;
  metrics.total_requests = static_cast<int>(scenario.requests.size());
  metrics.windows.reserve(config.total_windows);

  for (int w = 0; w < config.total_windows; ++w) {
    const double now = w * config.delta;
    WindowState state;
    state.window = w;
    state.now = now;
    state.tasks = buffer.take_window(w, config.delta);
    state.agents = agents;
    state.variant = scenario.variant;

    const std::uint64_t window_seed =
        derive_seed(config.rng_seed, static_cast<std::uint64_t>(w));
    WindowDecision decision = solve_window(state, config, window_seed);

    WindowMetrics wm;
    wm.window = w;
    wm.n_tasks = static_cast<int>(state.tasks.size());
    wm.available_agents = decision.available_agents;
    wm.chosen_k = decision.chosen_k;
    wm.fitness = decision.fitness;
    wm.per_k_fitness = decision.per_k_fitness;

    const WindowSolution empty;
    const WindowSolution& sol = decision.has_solution ? decision.result.solution : empty;
    wm.assigned = sol.assigned;
    metrics.total_assigned += sol.assigned;

    for (const auto& entry : sol.entries) {
      WindowAssignmentRecord rec;
      rec.agent_id = entry.agent_id;
      rec.requests = entry.requests;
      for (const Agent& a : agents) {
        if (a.id == entry.agent_id) {
          rec.agent_was_busy = !a.plan.empty();
          break;
        }
      }
      wm.assignments.push_back(std::move(rec));
    }

    const int capacity =
        config.capacity.capacity_for(static_cast<int>(state.tasks.size()));
    commit_solution(sol, agents, state.tasks, buffer, scenario.variant,
                    config.space, now, capacity);
    wm.carried_after = static_cast<int>(buffer.carried.size());

    AdvanceDeltas deltas = advance_time(agents, now, now + config.delta, config.space);
    wm.per_agent_distance = std::move(deltas.distance);
    wm.per_agent_idle = std::move(deltas.idle);
    for (double d : wm.per_agent_distance) wm.distance_added += d;
    for (double d : wm.per_agent_idle) wm.idle_added += d;
    metrics.total_distance += wm.distance_added;
    metrics.total_idle += wm.idle_added;

    metrics.windows.push_back(std::move(wm));
  }

  const double sim_end = config.total_windows * config.delta;
  for (const Agent& a : agents) {
    if (a.route.empty()) {
      metrics.tail_idle += sim_end - std::min(sim_end, a.last_route_end_time);
    }
  }
  metrics.carried_unassigned_end = static_cast<int>(buffer.carried.size());

  if (metrics.total_requests == 0) {
    metrics.vacuous = true;
    metrics.percent_assigned = 100.0;
  } else {
    metrics.percent_assigned =
        100.0 * metrics.total_assigned / metrics.total_requests;
  }
  return metrics;
}

}  // namespace rhd
