#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rhd/ga.hpp"

namespace rhd {

struct WindowState {
  int window{0};
  double now{0};  // window start, seconds
  std::vector<Request> tasks;
  std::span<const Agent> agents;
  CostVariant variant{CostVariant::ReachOnly};
};

struct WindowDecision {
  bool has_solution{false};  // a GA actually ran and produced assignments
  GAResult result;
  double fitness{0};  // 1 - alpha when nothing could be assigned, 0 when no tasks
  int chosen_k{0};
  int available_agents{0};
  std::vector<double> per_k_fitness;  // variable mode: score per candidate k
};

// One GA run at horizon H(k) = k * delta. Empty task set or empty
// availability set yields an empty decision and the tasks carry over.
WindowDecision solve_window_fixed(int k, const WindowState& state,
                                  const SimConfig& config,
                                  std::uint64_t window_seed);

// Solve for every k in 0..max_k on independently derived RNG streams and keep
// the lowest-fitness solution; exact ties go to the smallest k. A wall-clock
// budget is split evenly across the candidate runs.
WindowDecision solve_window_variable(int max_k, const WindowState& state,
                                     const SimConfig& config,
                                     std::uint64_t window_seed);

WindowDecision solve_window(const WindowState& state, const SimConfig& config,
                            std::uint64_t window_seed);

}  // namespace rhd
