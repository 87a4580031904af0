#include "rhd/horizon.hpp"

namespace rhd {

namespace {

GAParams params_with_wall_budget(const SimConfig& config, int runs_per_window) {
  GAParams p = config.ga;
  if (p.budget.kind == GABudget::Kind::WallClock) {
    const double total =
        p.budget.wall_seconds > 0 ? p.budget.wall_seconds : config.delta;
    p.budget.wall_seconds = total / runs_per_window;
  }
  return p;
}

WindowDecision solve_fixed_impl(int k, const WindowState& state,
                                const SimConfig& config,
                                std::uint64_t window_seed,
                                const GAParams& params) {
  WindowDecision d;
  d.chosen_k = k;
  if (state.tasks.empty()) {
    d.fitness = 0.0;
    return d;
  }
  std::vector<AvailableAgent> available = availability_anticipation(
      k * config.delta, state.agents, state.now, config.space);
  d.available_agents = static_cast<int>(available.size());
  if (available.empty()) {
    d.fitness = 1.0 - config.alpha;
    return d;
  }

  const int capacity =
      config.capacity.capacity_for(static_cast<int>(state.tasks.size()));
  GAProblem problem(state.tasks, std::move(available), capacity, config.alpha,
                    state.variant, config.space, state.window * config.delta);
  Rng rng(derive_seed(window_seed, static_cast<std::uint64_t>(k)));
  d.result = run_ga(problem, params, rng);
  d.fitness = d.result.best_fitness;
  d.has_solution = true;
  return d;
}

}  // namespace

WindowDecision solve_window_fixed(int k, const WindowState& state,
                                  const SimConfig& config,
                                  std::uint64_t window_seed) {
  if (k < 0) throw std::invalid_argument("horizon k must be >= 0");
  return solve_fixed_impl(k, state, config, window_seed,
                          params_with_wall_budget(config, 1));
}

WindowDecision solve_window_variable(int max_k, const WindowState& state,
                                     const SimConfig& config,
                                     std::uint64_t window_seed) {
  if (max_k < 0) throw std::invalid_argument("max_k must be >= 0");
  const GAParams params = params_with_wall_budget(config, max_k + 1);

  // A k whose availability set is empty produces no candidate solution, so it
  // cannot win the comparison; its per-k score is recorded as infinity.
  constexpr double kNoCandidate = std::numeric_limits<double>::infinity();

  WindowDecision fallback;
  bool have_fallback = false;
  WindowDecision best;
  double best_score = kNoCandidate;
  bool have_best = false;
  std::vector<double> per_k;
  per_k.reserve(max_k + 1);
  for (int k = 0; k <= max_k; ++k) {
    WindowDecision d = solve_fixed_impl(k, state, config, window_seed, params);
    const double score = d.has_solution ? d.fitness : kNoCandidate;
    per_k.push_back(score);
    if (!have_fallback) {
      fallback = d;
      have_fallback = true;
    }
    if (d.has_solution && (!have_best || score < best_score)) {
      best = std::move(d);
      best_score = score;
      have_best = true;
    }
  }
  if (!have_best) best = std::move(fallback);  // nothing assignable anywhere
  best.per_k_fitness = std::move(per_k);
  return best;
}

WindowDecision solve_window(const WindowState& state, const SimConfig& config,
                            std::uint64_t window_seed) {
  if (config.horizon.kind == HorizonMode::Kind::Variable) {
    return solve_window_variable(config.horizon.k, state, config, window_seed);
  }
  return solve_window_fixed(config.horizon.k, state, config, window_seed);
}

}  // namespace rhd
