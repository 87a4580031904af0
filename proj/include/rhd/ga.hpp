#pragma once

#include <span>
#include <vector>

#include "rhd/anticipation.hpp"
#include "rhd/geometry.hpp"
#include "rhd/model.hpp"
#include "rhd/rng.hpp"

namespace rhd {

using Gene = RequestId;
constexpr Gene kEmptySlot = -1;

// Flat slot array: agent a owns slots [a*capacity, (a+1)*capacity); the
// non-empty genes of a segment, read left to right, are that agent's visit
// order.
struct Chromosome {
  std::vector<Gene> slots;
};

struct WindowSolution {
  struct Entry {
    AgentId agent_id{0};
    std::vector<RequestId> requests;  // visit order
  };
  std::vector<Entry> entries;
  int assigned{0};
};

// One window's assignment instance. Start->task and task->task distances are
// tabulated up front so fitness evaluation stays allocation-free.
class GAProblem {
 public:
  GAProblem(std::vector<Request> tasks, std::vector<AvailableAgent> agents,
            int capacity, double alpha, CostVariant variant, MetricSpace space,
            double tau_time);

  int n_tasks() const { return static_cast<int>(tasks_.size()); }
  int n_agents() const { return static_cast<int>(agents_.size()); }
  int capacity() const { return capacity_; }
  int n_slots() const { return n_agents() * capacity_; }
  double alpha() const { return alpha_; }
  double tau_time() const { return tau_time_; }
  CostVariant variant() const { return variant_; }
  MetricSpace space() const { return space_; }
  const std::vector<Request>& tasks() const { return tasks_; }
  const std::vector<AvailableAgent>& agents() const { return agents_; }

  int task_index(Gene id) const;  // position of a request id within tasks()

  // sum over agents of the decoded route length l_a
  double total_length(const Chromosome& chr) const;
  int assigned_count(const Chromosome& chr) const;
  double fitness(const Chromosome& chr, double l_max) const;

  WindowSolution decode(const Chromosome& chr) const;

  // invariant check used by tests and fuzzing
  bool valid(const Chromosome& chr) const;

 private:
  std::vector<Request> tasks_;
  std::vector<AvailableAgent> agents_;
  int capacity_;
  double alpha_;
  CostVariant variant_;
  MetricSpace space_;
  double tau_time_;

  Gene min_id_{0};
  std::vector<int> id_to_index_;
  std::vector<double> d_start_;    // n_agents x n_tasks, start -> pickup
  std::vector<double> d_between_;  // n_tasks x n_tasks, end of i -> pickup of j
  std::vector<double> d_service_;  // n_tasks, pickup -> dropoff (0 if reach-only)
};

struct GAResult {
  Chromosome best;
  double best_fitness{0};
  WindowSolution solution;
  int generations{0};
  double l_max{1};
};

// Eq.-style selection probabilities: uniform at tau_time = 0, otherwise
// exp(-t_r/tau_time) normalized, so earlier requests draw first.
std::vector<double> boltzmann_weights(std::span<const Request> tasks,
                                      double tau_time);

std::vector<Chromosome> init_population(const GAProblem& problem,
                                        const GAParams& params, Rng& rng);

// Worst first-generation total distance; frozen for the whole run. Falls back
// to 1 when every chromosome travels nowhere.
double compute_l_max(std::span<const Chromosome> population,
                     const GAProblem& problem);

Chromosome crossover(const Chromosome& parent1, const Chromosome& parent2,
                     Rng& rng);

void mutate_swap(Chromosome& chr, Rng& rng);
void mutate_inversion(Chromosome& chr, Rng& rng);

std::vector<Chromosome> evolve_generation(const std::vector<Chromosome>& population,
                                          std::span<const double> scores,
                                          const GAParams& params, Rng& rng);

GAResult run_ga(const GAProblem& problem, const GAParams& params, Rng& rng);

}  // namespace rhd
