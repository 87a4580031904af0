#pragma once

#include <deque>
#include <vector>

#include "rhd/horizon.hpp"
#include "rhd/scenario.hpp"

namespace rhd {

// Requests not yet handed to a window (pending, time-ordered) plus requests
// presented earlier but left unassigned (carried, original t_r kept).
struct RequestBuffer {
  std::deque<Request> pending;
  std::vector<Request> carried;

  explicit RequestBuffer(std::vector<Request> stream);

  // R_tau: pending requests registered inside window tau plus everything
  // carried, sorted by (registered_at, id); both sets leave the buffer.
  std::vector<Request> take_window(int window, double delta);

  void carry(std::vector<Request> unassigned);
};

struct WindowAssignmentRecord {
  AgentId agent_id{0};
  bool agent_was_busy{false};  // nonempty plan at commit time
  std::vector<RequestId> requests;
};

struct WindowMetrics {
  int window{0};
  int n_tasks{0};
  int assigned{0};
  int available_agents{0};
  int chosen_k{0};
  double fitness{0};
  double distance_added{0};
  double idle_added{0};
  int carried_after{0};
  std::vector<double> per_agent_distance;
  std::vector<double> per_agent_idle;
  std::vector<double> per_k_fitness;
  std::vector<WindowAssignmentRecord> assignments;
};

struct SimMetrics {
  double total_distance{0};
  double total_idle{0};
  double tail_idle{0};
  double percent_assigned{100};
  bool vacuous{false};  // no requests were generated at all
  int total_requests{0};
  int total_assigned{0};
  int carried_unassigned_end{0};
  std::vector<WindowMetrics> windows;
};

// Extend the plans of the solution's agents, in solution order, and move
// everything unassigned to the carried set. Throws if the solution references
// unknown agents or tasks, repeats a request, or violates the capacity.
void commit_solution(const WindowSolution& solution, std::vector<Agent>& agents,
                     const std::vector<Request>& window_tasks,
                     RequestBuffer& buffer, CostVariant variant,
                     MetricSpace space, double now, int capacity);

struct AdvanceDeltas {
  std::vector<double> distance;
  std::vector<double> idle;
};

// Move every agent along its route from `from` to `to` at constant velocity;
// reached waypoints are consumed and completed requests leave the plan. Idle
// is the part of the interval spent with an empty route.
AdvanceDeltas advance_time(std::vector<Agent>& agents, double from, double to,
                           MetricSpace space);

// The outer online loop: per window, batch requests, anticipate availability,
// solve, commit, advance. Deterministic for a fixed seed and a Generations
// budget.
SimMetrics run_simulation(const SimConfig& config, const Scenario& scenario);

}  // namespace rhd
