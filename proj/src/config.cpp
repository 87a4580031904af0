#include "rhd/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

namespace rhd {

namespace {

double to_double(const std::string& key, const std::string& v) {
  if (v == "inf" || v == "unbounded") return kUnboundedBudget;
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad value for " + key + ": '" + v + "'");
}

long long to_int(const std::string& key, const std::string& v) {
  long long out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw std::invalid_argument("bad value for " + key + ": '" + v + "'");
  }
  return out;
}

std::string fmt(double v) {
  if (v == kUnboundedBudget) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void apply_setting(RunSpec& spec, const std::string& key, const std::string& value) {
  SimConfig& sim = spec.sim;
  SyntheticSpec& syn = spec.synthetic;
  if (key == "delta") {
    sim.delta = to_double(key, value);
  } else if (key == "total_windows") {
    sim.total_windows = static_cast<int>(to_int(key, value));
    syn.total_windows = sim.total_windows;
  } else if (key == "alpha") {
    sim.alpha = to_double(key, value);
  } else if (key == "horizon_mode") {
    if (value == "fixed") sim.horizon.kind = HorizonMode::Kind::Fixed;
    else if (value == "variable") sim.horizon.kind = HorizonMode::Kind::Variable;
    else throw std::invalid_argument("horizon_mode must be fixed or variable");
  } else if (key == "horizon_k" || key == "max_k") {
    sim.horizon.k = static_cast<int>(to_int(key, value));
  } else if (key == "capacity_rule") {
    if (value == "fraction") sim.capacity.kind = CapacityRule::Kind::Fraction;
    else if (value == "unbounded") sim.capacity.kind = CapacityRule::Kind::Unbounded;
    else throw std::invalid_argument("capacity_rule must be fraction or unbounded");
  } else if (key == "capacity_fraction") {
    sim.capacity.fraction = to_double(key, value);
  } else if (key == "metric_space") {
    if (value == "planar") sim.space = MetricSpace::Planar;
    else if (value == "geographic") sim.space = MetricSpace::Geographic;
    else throw std::invalid_argument("metric_space must be planar or geographic");
  } else if (key == "rng_seed") {
    sim.rng_seed = static_cast<std::uint64_t>(to_int(key, value));
    syn.rng_seed = sim.rng_seed;
  } else if (key == "population_size") {
    sim.ga.population_size = static_cast<int>(to_int(key, value));
  } else if (key == "p_muta") {
    sim.ga.p_muta = to_double(key, value);
  } else if (key == "p_swap") {
    sim.ga.p_swap = to_double(key, value);
  } else if (key == "epsilon") {
    sim.ga.epsilon = to_double(key, value);
  } else if (key == "budget") {
    if (value == "wallclock") sim.ga.budget.kind = GABudget::Kind::WallClock;
    else if (value == "generations") sim.ga.budget.kind = GABudget::Kind::Generations;
    else throw std::invalid_argument("budget must be wallclock or generations");
  } else if (key == "generations") {
    sim.ga.budget.generations = static_cast<int>(to_int(key, value));
  } else if (key == "wall_seconds") {
    sim.ga.budget.wall_seconds = to_double(key, value);
  } else if (key == "world_w") {
    syn.world_w = to_double(key, value);
  } else if (key == "world_h") {
    syn.world_h = to_double(key, value);
  } else if (key == "n_agents") {
    syn.n_agents = static_cast<int>(to_int(key, value));
  } else if (key == "tasks_per_window") {
    syn.tasks_per_window = static_cast<int>(to_int(key, value));
  } else if (key == "velocity") {
    syn.velocity = to_double(key, value);
  } else if (key == "travel_budget") {
    syn.travel_budget = to_double(key, value);
  } else {
    throw std::invalid_argument("unknown setting '" + key + "'");
  }
}

void apply_config_file(RunSpec& spec, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    std::string key, value;
    if (eq == std::string::npos) {
      key = line;
    } else {
      key = line.substr(0, eq);
      value = line.substr(eq + 1);
    }
    const auto strip = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    strip(key);
    strip(value);
    if (key.empty()) continue;
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    }
    try {
      apply_setting(spec, key, value);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

std::string setting_value(const RunSpec& spec, const std::string& key) {
  const SimConfig& sim = spec.sim;
  const SyntheticSpec& syn = spec.synthetic;
  if (key == "delta") return fmt(sim.delta);
  if (key == "total_windows") return std::to_string(sim.total_windows);
  if (key == "alpha") return fmt(sim.alpha);
  if (key == "horizon_mode") {
    return sim.horizon.kind == HorizonMode::Kind::Fixed ? "fixed" : "variable";
  }
  if (key == "horizon_k" || key == "max_k") return std::to_string(sim.horizon.k);
  if (key == "capacity_rule") {
    return sim.capacity.kind == CapacityRule::Kind::Fraction ? "fraction"
                                                             : "unbounded";
  }
  if (key == "capacity_fraction") return fmt(sim.capacity.fraction);
  if (key == "metric_space") {
    return sim.space == MetricSpace::Planar ? "planar" : "geographic";
  }
  if (key == "rng_seed") return std::to_string(sim.rng_seed);
  if (key == "population_size") return std::to_string(sim.ga.population_size);
  if (key == "p_muta") return fmt(sim.ga.p_muta);
  if (key == "p_swap") return fmt(sim.ga.p_swap);
  if (key == "epsilon") return fmt(sim.ga.epsilon);
  if (key == "budget") {
    return sim.ga.budget.kind == GABudget::Kind::WallClock ? "wallclock"
                                                           : "generations";
  }
  if (key == "generations") return std::to_string(sim.ga.budget.generations);
  if (key == "wall_seconds") return fmt(sim.ga.budget.wall_seconds);
  if (key == "world_w") return fmt(syn.world_w);
  if (key == "world_h") return fmt(syn.world_h);
  if (key == "n_agents") return std::to_string(syn.n_agents);
  if (key == "tasks_per_window") return std::to_string(syn.tasks_per_window);
  if (key == "velocity") return fmt(syn.velocity);
  if (key == "travel_budget") return fmt(syn.travel_budget);
  throw std::invalid_argument("unknown setting '" + key + "'");
}

}  // namespace rhd
