#pragma once

#include <span>
#include <vector>

#include "rhd/ga.hpp"

namespace rhd {

struct OracleResult {
  double objective{0};
  WindowSolution solution;
};

// Exact minimum of the weighted window objective
//   alpha * (sum of route lengths) / l_max + (1 - alpha) * (unassigned count)
// over every subset of tasks, every partition onto agents respecting the
// capacity, and every visit order. Pass l_max = 1 to compare raw distances.
// Ground truth for small instances only: at most 8 tasks and 3 agents.
OracleResult brute_force(std::span<const Request> tasks,
                         std::span<const AvailableAgent> agents, int capacity,
                         double alpha, CostVariant variant, MetricSpace space,
                         double l_max);

// Same objective evaluated for a concrete solution, so GA results can be
// scored on the oracle's scale.
double oracle_objective(const WindowSolution& solution,
                        std::span<const Request> tasks,
                        std::span<const AvailableAgent> agents, double alpha,
                        CostVariant variant, MetricSpace space, double l_max);

OracleResult brute_force(const GAProblem& problem, double l_max);

}  // namespace rhd
