#include "rhd/results.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rhd {

namespace {

using nlohmann::json;

json config_json(const SimConfig& c) {
  json ga{
      {"population_size", c.ga.population_size},
      {"p_muta", c.ga.p_muta},
      {"p_swap", c.ga.p_swap},
      {"elite_fraction", GAParams::kEliteFraction},
      {"epsilon", c.ga.epsilon},
      {"budget", c.ga.budget.kind == GABudget::Kind::WallClock ? "wallclock"
                                                               : "generations"},
      {"generations", c.ga.budget.generations},
      {"wall_seconds", c.ga.budget.wall_seconds},
  };
  return json{
      {"delta", c.delta},
      {"total_windows", c.total_windows},
      {"alpha", c.alpha},
      {"horizon_mode",
       c.horizon.kind == HorizonMode::Kind::Fixed ? "fixed" : "variable"},
      {"horizon_k", c.horizon.k},
      {"capacity_rule", c.capacity.kind == CapacityRule::Kind::Fraction
                            ? "fraction"
                            : "unbounded"},
      {"capacity_fraction", c.capacity.fraction},
      {"metric_space",
       c.space == MetricSpace::Planar ? "planar" : "geographic"},
      {"rng_seed", c.rng_seed},
      {"ga", std::move(ga)},
  };
}

}  // namespace

std::string results_json(const SimConfig& config, const Scenario& scenario,
                         const SimMetrics& metrics) {
  json per_window = json::array();
  for (const WindowMetrics& w : metrics.windows) {
    json entry{
        {"window", w.window},
        {"n_tasks", w.n_tasks},
        {"assigned", w.assigned},
        {"available_agents", w.available_agents},
        {"chosen_k", w.chosen_k},
        {"fitness", w.fitness},
        {"distance_m", w.distance_added},
        {"idle_s", w.idle_added},
        {"carried_after", w.carried_after},
    };
    if (!w.per_k_fitness.empty()) entry["per_k_fitness"] = w.per_k_fitness;
    per_window.push_back(std::move(entry));
  }

  json doc{
      {"config", config_json(config)},
      {"scenario",
       {{"agents", scenario.agents.size()},
        {"requests", scenario.requests.size()},
        {"space", scenario.space == MetricSpace::Planar ? "planar" : "geographic"},
        {"variant", scenario.variant == CostVariant::ReachOnly ? "reach"
                                                               : "pickup_dropoff"}}},
      {"total_distance_m", metrics.total_distance},
      {"total_idle_s", metrics.total_idle},
      {"tail_idle_s", metrics.tail_idle},
      {"percent_assigned", metrics.percent_assigned},
      {"vacuous", metrics.vacuous},
      {"total_requests", metrics.total_requests},
      {"total_assigned", metrics.total_assigned},
      {"carried_unassigned", metrics.carried_unassigned_end},
      {"per_window", std::move(per_window)},
  };
  return doc.dump(2) + "\n";
}

void write_results_json(const SimConfig& config, const Scenario& scenario,
                        const SimMetrics& metrics, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << results_json(config, scenario, metrics);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string results_csv(const SimMetrics& metrics) {
  std::ostringstream out;
  out << "window,n_tasks,assigned,available_agents,chosen_k,fitness,"
         "distance_m,idle_s,carried_after\n";
  out.precision(17);
  for (const WindowMetrics& w : metrics.windows) {
    out << w.window << ',' << w.n_tasks << ',' << w.assigned << ','
        << w.available_agents << ',' << w.chosen_k << ',' << w.fitness << ','
        << w.distance_added << ',' << w.idle_added << ',' << w.carried_after
        << '\n';
  }
  return out.str();
}

void write_results_csv(const SimMetrics& metrics, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << results_csv(metrics);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rhd
