#include "rhd/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace rhd {

GAProblem::GAProblem(std::vector<Request> tasks, std::vector<AvailableAgent> agents,
                     int capacity, double alpha, CostVariant variant,
                     MetricSpace space, double tau_time)
    : tasks_(std::move(tasks)),
      agents_(std::move(agents)),
      capacity_(capacity),
      alpha_(alpha),
      variant_(variant),
      space_(space),
      tau_time_(tau_time) {
  if (tasks_.empty() || agents_.empty()) {
    throw std::invalid_argument("GAProblem needs at least one task and one agent");
  }
  if (capacity_ < 1) {
    throw std::invalid_argument("capacity must be >= 1");
  }
  if (alpha_ < 0 || alpha_ > 1) {
    throw std::invalid_argument("alpha must be in [0,1]");
  }

  const int nt = n_tasks();
  Gene max_id = tasks_[0].id;
  min_id_ = tasks_[0].id;
  for (const Request& r : tasks_) {
    min_id_ = std::min(min_id_, r.id);
    max_id = std::max(max_id, r.id);
  }
  id_to_index_.assign(static_cast<std::size_t>(max_id - min_id_) + 1, -1);
  for (int i = 0; i < nt; ++i) {
    if (id_to_index_[tasks_[i].id - min_id_] != -1) {
      throw std::invalid_argument("duplicate request id in window tasks");
    }
    id_to_index_[tasks_[i].id - min_id_] = i;
  }

  d_start_.resize(static_cast<std::size_t>(n_agents()) * nt);
  d_between_.resize(static_cast<std::size_t>(nt) * nt);
  d_service_.assign(nt, 0.0);
  for (int a = 0; a < n_agents(); ++a) {
    for (int i = 0; i < nt; ++i) {
      d_start_[a * nt + i] = distance(agents_[a].start, tasks_[i].pickup, space_);
    }
  }
  for (int i = 0; i < nt; ++i) {
    const Location from = variant_ == CostVariant::PickupDropoff
                              ? *tasks_[i].dropoff
                              : tasks_[i].pickup;
    for (int j = 0; j < nt; ++j) {
      d_between_[i * nt + j] = distance(from, tasks_[j].pickup, space_);
    }
    if (variant_ == CostVariant::PickupDropoff) {
      d_service_[i] = distance(tasks_[i].pickup, *tasks_[i].dropoff, space_);
    }
  }
}

int GAProblem::task_index(Gene id) const {
  if (id < min_id_ ||
      static_cast<std::size_t>(id - min_id_) >= id_to_index_.size()) {
    return -1;
  }
  return id_to_index_[id - min_id_];
}

double GAProblem::total_length(const Chromosome& chr) const {
  const int nt = n_tasks();
  double total = 0;
  for (int a = 0; a < n_agents(); ++a) {
    int prev = -1;
    for (int s = a * capacity_; s < (a + 1) * capacity_; ++s) {
      const Gene g = chr.slots[s];
      if (g == kEmptySlot) continue;
      const int idx = task_index(g);
      total += prev < 0 ? d_start_[a * nt + idx] : d_between_[prev * nt + idx];
      total += d_service_[idx];
      prev = idx;
    }
  }
  return total;
}

int GAProblem::assigned_count(const Chromosome& chr) const {
  int n = 0;
  for (Gene g : chr.slots) n += g != kEmptySlot;
  return n;
}

double GAProblem::fitness(const Chromosome& chr, double l_max) const {
  const double unassigned_share =
      1.0 - static_cast<double>(assigned_count(chr)) / n_tasks();
  return alpha_ * total_length(chr) / l_max + (1.0 - alpha_) * unassigned_share;
}

WindowSolution GAProblem::decode(const Chromosome& chr) const {
  WindowSolution sol;
  for (int a = 0; a < n_agents(); ++a) {
    WindowSolution::Entry entry;
    entry.agent_id = agents_[a].id;
    for (int s = a * capacity_; s < (a + 1) * capacity_; ++s) {
      if (chr.slots[s] != kEmptySlot) entry.requests.push_back(chr.slots[s]);
    }
    if (!entry.requests.empty()) {
      sol.assigned += static_cast<int>(entry.requests.size());
      sol.entries.push_back(std::move(entry));
    }
  }
  return sol;
}

bool GAProblem::valid(const Chromosome& chr) const {
  if (static_cast<int>(chr.slots.size()) != n_slots()) return false;
  std::vector<bool> seen(tasks_.size(), false);
  for (int a = 0; a < n_agents(); ++a) {
    int count = 0;
    for (int s = a * capacity_; s < (a + 1) * capacity_; ++s) {
      const Gene g = chr.slots[s];
      if (g == kEmptySlot) continue;
      const int idx = task_index(g);
      if (idx < 0) return false;          // not a member of R_tau
      if (seen[idx]) return false;        // duplicate assignment
      seen[idx] = true;
      ++count;
    }
    if (count > capacity_) return false;  // cannot happen with fixed segments
  }
  return true;
}

std::vector<double> boltzmann_weights(std::span<const Request> tasks,
                                      double tau_time) {
  if (tasks.empty()) {
    throw std::invalid_argument("boltzmann_weights needs at least one task");
  }
  std::vector<double> p(tasks.size());
  if (tau_time <= 0) {
    std::fill(p.begin(), p.end(), 1.0 / tasks.size());
    return p;
  }
  // exp(-t/tau) normalized; shifting by the earliest t_r is exact and avoids
  // underflow for large t_r.
  double t_min = tasks[0].registered_at;
  for (const Request& r : tasks) t_min = std::min(t_min, r.registered_at);
  double q = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    p[i] = std::exp(-(tasks[i].registered_at - t_min) / tau_time);
    q += p[i];
  }
  for (double& v : p) v /= q;
  return p;
}

std::vector<Chromosome> init_population(const GAProblem& problem,
                                        const GAParams& params, Rng& rng) {
  const std::vector<double> base =
      boltzmann_weights(problem.tasks(), problem.tau_time());

  std::vector<Chromosome> population;
  population.reserve(params.population_size);
  std::vector<double> weights;
  std::vector<int> remaining;
  std::vector<int> empty_slots;

  for (int c = 0; c < params.population_size; ++c) {
    Chromosome chr;
    chr.slots.assign(problem.n_slots(), kEmptySlot);

    weights = base;
    remaining.resize(problem.n_tasks());
    std::iota(remaining.begin(), remaining.end(), 0);
    empty_slots.resize(problem.n_slots());
    std::iota(empty_slots.begin(), empty_slots.end(), 0);

    while (!remaining.empty() && !empty_slots.empty()) {
      const std::size_t wi = rng.pick_weighted(weights);
      const std::size_t si = rng.uniform_index(empty_slots.size());
      chr.slots[empty_slots[si]] = problem.tasks()[remaining[wi]].id;
      weights.erase(weights.begin() + wi);
      remaining.erase(remaining.begin() + wi);
      empty_slots[si] = empty_slots.back();
      empty_slots.pop_back();
    }
    population.push_back(std::move(chr));
  }
  return population;
}

double compute_l_max(std::span<const Chromosome> population,
                     const GAProblem& problem) {
  if (population.empty()) {
    throw std::invalid_argument("compute_l_max needs a population");
  }
  double worst = 0;
  for (const Chromosome& chr : population) {
    worst = std::max(worst, problem.total_length(chr));
  }
  return worst > 0 ? worst : 1.0;
}

Chromosome crossover(const Chromosome& parent1, const Chromosome& parent2,
                     Rng& rng) {
  const std::size_t len = parent1.slots.size();
  if (parent2.slots.size() != len) {
    throw std::invalid_argument("crossover parents must have equal length");
  }
  const std::size_t cut = rng.uniform_index(len + 1);

  Chromosome child;
  child.slots.assign(len, kEmptySlot);
  std::unordered_set<Gene> present;
  for (std::size_t s = 0; s < cut; ++s) {
    child.slots[s] = parent1.slots[s];
    if (child.slots[s] != kEmptySlot) present.insert(child.slots[s]);
  }

  std::size_t write = cut;
  for (std::size_t s = 0; s < len && write < len; ++s) {
    const Gene g = parent2.slots[s];
    if (g == kEmptySlot || present.count(g)) continue;
    child.slots[write++] = g;
    present.insert(g);
  }
  return child;
}

void mutate_swap(Chromosome& chr, Rng& rng) {
  const std::size_t len = chr.slots.size();
  if (len < 2) return;
  const std::size_t i = rng.uniform_index(len);
  std::size_t j = rng.uniform_index(len - 1);
  if (j >= i) ++j;
  std::swap(chr.slots[i], chr.slots[j]);
}

void mutate_inversion(Chromosome& chr, Rng& rng) {
  const std::size_t len = chr.slots.size();
  if (len < 2) return;
  std::size_t i = rng.uniform_index(len);
  std::size_t j = rng.uniform_index(len);
  if (i > j) std::swap(i, j);
  std::reverse(chr.slots.begin() + i, chr.slots.begin() + j + 1);
}

std::vector<Chromosome> evolve_generation(const std::vector<Chromosome>& population,
                                          std::span<const double> scores,
                                          const GAParams& params, Rng& rng) {
  const int n_pop = static_cast<int>(population.size());
  if (static_cast<int>(scores.size()) != n_pop) {
    throw std::invalid_argument("scores/population size mismatch");
  }
  std::vector<int> order(n_pop);
  std::iota(order.begin(), order.end(), 0);
  // ascending score, ties by lower index, so elite selection is reproducible
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] < scores[b]; });

  const int n_elite = std::min(params.elite_count(), n_pop);
  std::vector<Chromosome> next;
  next.reserve(n_pop);
  for (int e = 0; e < n_elite; ++e) next.push_back(population[order[e]]);

  while (static_cast<int>(next.size()) < n_pop) {
    const std::size_t i1 = rng.uniform_index(n_elite);
    const std::size_t i2 = rng.uniform_index(n_elite);
    Chromosome child = crossover(next[i1], next[i2], rng);
    // Single draw gating both mutations, as the evolution loop prescribes.
    const double v = rng.uniform01();
    if (v < params.p_muta) {
      if (v < params.p_swap) {
        mutate_swap(child, rng);
      } else {
        mutate_inversion(child, rng);
      }
    }
    next.push_back(std::move(child));
  }
  return next;
}

namespace {

// lowest score, ties broken by lowest index
std::pair<int, double> best_of(std::span<const double> scores) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(scores.size()); ++i) {
    if (scores[i] < scores[best]) best = i;
  }
  return {best, scores[best]};
}

}  // namespace

GAResult run_ga(const GAProblem& problem, const GAParams& params, Rng& rng) {
  params.validate();
  const auto t_beg = std::chrono::steady_clock::now();
  const auto budget_left = [&] {
    if (params.budget.kind == GABudget::Kind::Generations) return true;
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - t_beg;
    return elapsed.count() < params.budget.wall_seconds;
  };

  std::vector<Chromosome> population = init_population(problem, params, rng);
  const double l_max = compute_l_max(population, problem);

  std::vector<double> scores(population.size());
  const auto evaluate = [&] {
    for (std::size_t i = 0; i < population.size(); ++i) {
      scores[i] = problem.fitness(population[i], l_max);
    }
  };
  evaluate();

  GAResult result;
  result.l_max = l_max;
  result.generations = 1;

  auto [best_idx, best_score] = best_of(scores);
  result.best = population[best_idx];
  result.best_fitness = best_score;

  double min_now = best_score;
  while (true) {
    if (params.budget.kind == GABudget::Kind::Generations &&
        result.generations >= params.budget.generations) {
      break;
    }
    if (params.budget.kind == GABudget::Kind::WallClock && !budget_left()) {
      break;
    }
    population = evolve_generation(population, scores, params, rng);
    evaluate();
    ++result.generations;

    const double min_prec = min_now;
    auto [idx, score] = best_of(scores);
    min_now = score;
    if (score < result.best_fitness) {
      result.best = population[idx];
      result.best_fitness = score;
    }
    if (std::abs(min_now - min_prec) <= params.epsilon) break;
  }

  result.solution = problem.decode(result.best);
  return result;
}

}  // namespace rhd
