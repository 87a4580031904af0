// rhd — command-line front end for the rhdispatch shared library.
//
// Subcommands:
//   run    one simulation (synthetic scenario or scenario file)
//   sweep  alpha x horizon grid averaged over seeds
//   taxi   one night of taxi dispatch from a trip-data CSV
//   gen    write a synthetic scenario file
//
// Everything here goes through the public C API in rhdispatch.h.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rhdispatch.h"

namespace {

using nlohmann::json;

struct ConfigDeleter {
  void operator()(rhd_config *c) const { rhd_config_free(c); }
};
struct ScenarioDeleter {
  void operator()(rhd_scenario *s) const { rhd_scenario_free(s); }
};
struct ResultDeleter {
  void operator()(rhd_result *r) const { rhd_result_free(r); }
};
using ConfigPtr = std::unique_ptr<rhd_config, ConfigDeleter>;
using ScenarioPtr = std::unique_ptr<rhd_scenario, ScenarioDeleter>;
using ResultPtr = std::unique_ptr<rhd_result, ResultDeleter>;

[[noreturn]] void die(const std::string &message) {
  std::fprintf(stderr, "rhd: %s\n", message.c_str());
  std::exit(1);
}

void check(int rc, const std::string &what) {
  if (rc != RHD_OK) die(what + ": " + rhd_last_error());
}

// Flag values staged before being pushed into the config, so that a config
// file can be applied first and flags override it.
struct Overrides {
  std::vector<std::pair<std::string, std::string>> kv;

  void set(const std::string &key, const std::string &value) {
    kv.emplace_back(key, value);
  }
};

struct CommonOpts {
  std::string config_file;
  std::optional<double> delta;
  std::optional<int> windows;
  std::optional<double> alpha;
  std::optional<std::string> horizon;  // integer k, or "v"/"variable"
  std::optional<int> max_k;
  std::optional<std::string> capacity;  // fraction, or "inf"/"unbounded"
  std::optional<std::uint64_t> seed;
  std::optional<int> pop;
  std::optional<double> p_muta;
  std::optional<double> p_swap;
  std::optional<double> epsilon;
  std::optional<std::string> budget;
  std::optional<int> generations;
  std::optional<int> agents;
  std::optional<int> tasks_per_window;
  std::optional<double> world_w;
  std::optional<double> world_h;
  std::optional<double> velocity;
  std::optional<std::string> travel_budget;
};

void add_common_flags(CLI::App *cmd, CommonOpts &o) {
  cmd->add_option("--config", o.config_file, "config file (key = value lines)");
  cmd->add_option("--delta", o.delta, "window duration, seconds");
  cmd->add_option("--windows", o.windows, "number of time windows");
  cmd->add_option("--alpha", o.alpha, "distance weight in [0,1]");
  cmd->add_option("--horizon", o.horizon, "receding horizon k, or 'v' for variable");
  cmd->add_option("--max-k", o.max_k, "largest k tried in variable mode");
  cmd->add_option("--capacity", o.capacity,
                  "per-window task fraction per agent, or 'unbounded'");
  cmd->add_option("--seed", o.seed, "master RNG seed");
  cmd->add_option("--pop", o.pop, "GA population size");
  cmd->add_option("--p-muta", o.p_muta, "mutation probability");
  cmd->add_option("--p-swap", o.p_swap, "swap-vs-inversion split");
  cmd->add_option("--epsilon", o.epsilon, "GA convergence threshold");
  cmd->add_option("--budget", o.budget, "GA stop budget: wallclock|generations");
  cmd->add_option("--generations", o.generations, "generation budget size");
  cmd->add_option("--agents", o.agents, "synthetic: fleet size");
  cmd->add_option("--tasks-per-window", o.tasks_per_window,
                  "synthetic: new tasks per window");
  cmd->add_option("--world-w", o.world_w, "synthetic: world width, meters");
  cmd->add_option("--world-h", o.world_h, "synthetic: world height, meters");
  cmd->add_option("--velocity", o.velocity, "agent velocity, m/s");
  cmd->add_option("--travel-budget", o.travel_budget,
                  "per-agent travel budget, meters or 'inf'");
}

void stage_overrides(const CommonOpts &o, Overrides &ov) {
  if (o.delta) ov.set("delta", std::to_string(*o.delta));
  if (o.windows) ov.set("total_windows", std::to_string(*o.windows));
  if (o.alpha) ov.set("alpha", std::to_string(*o.alpha));
  if (o.horizon) {
    if (*o.horizon == "v" || *o.horizon == "variable") {
      ov.set("horizon_mode", "variable");
    } else {
      ov.set("horizon_mode", "fixed");
      ov.set("horizon_k", *o.horizon);
    }
  }
  if (o.max_k) ov.set("max_k", std::to_string(*o.max_k));
  if (o.capacity) {
    if (*o.capacity == "inf" || *o.capacity == "unbounded") {
      ov.set("capacity_rule", "unbounded");
    } else {
      ov.set("capacity_rule", "fraction");
      ov.set("capacity_fraction", *o.capacity);
    }
  }
  if (o.seed) ov.set("rng_seed", std::to_string(*o.seed));
  if (o.pop) ov.set("population_size", std::to_string(*o.pop));
  if (o.p_muta) ov.set("p_muta", std::to_string(*o.p_muta));
  if (o.p_swap) ov.set("p_swap", std::to_string(*o.p_swap));
  if (o.epsilon) ov.set("epsilon", std::to_string(*o.epsilon));
  if (o.budget) ov.set("budget", *o.budget);
  if (o.generations) ov.set("generations", std::to_string(*o.generations));
  if (o.agents) ov.set("n_agents", std::to_string(*o.agents));
  if (o.tasks_per_window) {
    ov.set("tasks_per_window", std::to_string(*o.tasks_per_window));
  }
  if (o.world_w) ov.set("world_w", std::to_string(*o.world_w));
  if (o.world_h) ov.set("world_h", std::to_string(*o.world_h));
  if (o.velocity) ov.set("velocity", std::to_string(*o.velocity));
  if (o.travel_budget) ov.set("travel_budget", *o.travel_budget);
}

ConfigPtr make_config(const CommonOpts &o) {
  ConfigPtr config(rhd_config_new());
  if (!config) die("out of memory");
  if (!o.config_file.empty()) {
    check(rhd_config_load_file(config.get(), o.config_file.c_str()),
          "loading " + o.config_file);
  }
  Overrides ov;
  stage_overrides(o, ov);
  for (const auto &[key, value] : ov.kv) {
    check(rhd_config_set(config.get(), key.c_str(), value.c_str()),
          "setting " + key);
  }
  return config;
}

std::string results_path(const std::string &out_flag,
                         const std::string &default_name) {
  if (!out_flag.empty()) return out_flag;
  const char *dir = std::getenv("RHD_RESULTS_DIR");
  std::string base = dir && *dir ? dir : ".";
  return base + "/" + default_name;
}

struct RunMetrics {
  double distance{0}, idle{0}, tail_idle{0}, percent{0};
};

RunMetrics metrics_of(const rhd_result *r) {
  RunMetrics m;
  check(rhd_result_total_distance_m(r, &m.distance), "reading metrics");
  check(rhd_result_total_idle_s(r, &m.idle), "reading metrics");
  check(rhd_result_tail_idle_s(r, &m.tail_idle), "reading metrics");
  check(rhd_result_percent_assigned(r, &m.percent), "reading metrics");
  return m;
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> items;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) items.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) items.push_back(cur);
  return items;
}

// "1..10" or "1,2,5"
std::vector<std::uint64_t> parse_seeds(const std::string &s) {
  std::vector<std::uint64_t> seeds;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t lo = std::stoull(s.substr(0, dots));
    const std::uint64_t hi = std::stoull(s.substr(dots + 2));
    for (std::uint64_t v = lo; v <= hi; ++v) seeds.push_back(v);
  } else {
    for (const std::string &item : split_list(s)) seeds.push_back(std::stoull(item));
  }
  if (seeds.empty()) die("no seeds given");
  return seeds;
}

void apply_horizon(rhd_config *config, const std::string &h, int max_k) {
  if (h == "v" || h == "variable") {
    check(rhd_config_set(config, "horizon_mode", "variable"), "setting horizon");
    check(rhd_config_set(config, "max_k", std::to_string(max_k).c_str()),
          "setting horizon");
  } else {
    check(rhd_config_set(config, "horizon_mode", "fixed"), "setting horizon");
    check(rhd_config_set(config, "horizon_k", h.c_str()), "setting horizon");
  }
}

int cmd_run(const CommonOpts &common, const std::string &scenario_arg,
            const std::string &out_flag, const std::string &trace_csv,
            const std::string &save_scenario) {
  ConfigPtr config = make_config(common);

  rhd_scenario *raw = nullptr;
  if (scenario_arg == "synthetic") {
    check(rhd_scenario_synthetic(config.get(), &raw), "generating scenario");
  } else {
    check(rhd_scenario_load(config.get(), scenario_arg.c_str(), &raw),
          "loading scenario " + scenario_arg);
  }
  ScenarioPtr scenario(raw);

  if (!save_scenario.empty()) {
    check(rhd_scenario_save(scenario.get(), save_scenario.c_str()),
          "saving scenario");
  }

  rhd_result *res = nullptr;
  check(rhd_run(config.get(), scenario.get(), &res), "running simulation");
  ResultPtr result(res);

  const std::string out = results_path(out_flag, "results.json");
  check(rhd_result_write_json(result.get(), out.c_str()), "writing " + out);
  if (!trace_csv.empty()) {
    check(rhd_result_write_csv(result.get(), trace_csv.c_str()),
          "writing " + trace_csv);
  }

  const RunMetrics m = metrics_of(result.get());
  size_t assigned = 0, requests = 0;
  check(rhd_result_total_assigned(result.get(), &assigned), "reading metrics");
  check(rhd_scenario_request_count(scenario.get(), &requests), "reading metrics");
  std::printf("requests          %zu\n", requests);
  std::printf("assigned          %zu\n", assigned);
  std::printf("total distance    %.2f m\n", m.distance);
  std::printf("total idle        %.2f s\n", m.idle);
  std::printf("tail idle         %.2f s\n", m.tail_idle);
  std::printf("percent assigned  %.2f %%\n", m.percent);
  std::printf("results           %s\n", out.c_str());
  return 0;
}

int cmd_sweep(const CommonOpts &common, const std::string &alphas_arg,
              const std::string &horizons_arg, const std::string &seeds_arg,
              const std::string &out_flag) {
  const std::vector<std::string> alphas = split_list(alphas_arg);
  const std::vector<std::string> horizons = split_list(horizons_arg);
  const std::vector<std::uint64_t> seeds = parse_seeds(seeds_arg);
  if (alphas.empty() || horizons.empty()) die("empty sweep grid");

  json cells = json::array();
  std::map<std::string, std::map<std::string, RunMetrics>> table;

  for (const std::string &alpha : alphas) {
    for (const std::string &horizon : horizons) {
      RunMetrics mean;
      for (const std::uint64_t seed : seeds) {
        ConfigPtr config = make_config(common);
        // sweep default: deterministic generation budget
        if (!common.budget) {
          check(rhd_config_set(config.get(), "budget", "generations"),
                "setting budget");
        }
        check(rhd_config_set(config.get(), "alpha", alpha.c_str()),
              "setting alpha");
        apply_horizon(config.get(), horizon, common.max_k.value_or(5));
        check(rhd_config_set(config.get(), "rng_seed",
                             std::to_string(seed).c_str()),
              "setting seed");

        rhd_scenario *raw = nullptr;
        check(rhd_scenario_synthetic(config.get(), &raw), "generating scenario");
        ScenarioPtr scenario(raw);
        rhd_result *res = nullptr;
        check(rhd_run(config.get(), scenario.get(), &res), "running cell");
        ResultPtr result(res);
        const RunMetrics m = metrics_of(result.get());
        mean.distance += m.distance;
        mean.idle += m.idle;
        mean.tail_idle += m.tail_idle;
        mean.percent += m.percent;
      }
      const double n = static_cast<double>(seeds.size());
      mean.distance /= n;
      mean.idle /= n;
      mean.tail_idle /= n;
      mean.percent /= n;
      table[alpha][horizon] = mean;
      cells.push_back(json{{"alpha", alpha},
                           {"horizon", horizon},
                           {"seeds", seeds.size()},
                           {"mean_total_distance_m", mean.distance},
                           {"mean_total_idle_s", mean.idle},
                           {"mean_tail_idle_s", mean.tail_idle},
                           {"mean_percent_assigned", mean.percent}});
    }
  }

  const auto print_metric = [&](const char *title, auto get) {
    std::printf("\n%s\n", title);
    std::printf("%8s", "alpha");
    for (const std::string &h : horizons) std::printf(" %10s", ("H(" + h + ")").c_str());
    std::printf("\n");
    for (const std::string &a : alphas) {
      std::printf("%8s", a.c_str());
      for (const std::string &h : horizons) std::printf(" %10.2f", get(table[a][h]));
      std::printf("\n");
    }
  };
  print_metric("Total traveled distance (m)",
               [](const RunMetrics &m) { return m.distance; });
  print_metric("Idle time (s)", [](const RunMetrics &m) { return m.idle; });
  print_metric("Percentage of assigned tasks (%)",
               [](const RunMetrics &m) { return m.percent; });

  const std::string out = results_path(out_flag, "sweep.json");
  json doc{{"alphas", alphas},
           {"horizons", horizons},
           {"seeds", seeds},
           {"cells", std::move(cells)}};
  FILE *f = std::fopen(out.c_str(), "w");
  if (!f) die("cannot open " + out);
  const std::string text = doc.dump(2) + "\n";
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
  std::printf("\nresults           %s\n", out.c_str());
  return 0;
}

int cmd_taxi(const CommonOpts &common, const std::string &csv,
             const std::string &date, double hour_begin, double hour_end,
             int fleet, const std::string &horizons_arg,
             const std::string &out_flag) {
  const std::vector<std::string> horizons = split_list(horizons_arg);
  if (horizons.empty()) die("no horizons given");

  json runs = json::array();
  std::map<std::string, RunMetrics> by_horizon;

  rhd_taxi_stats stats{};
  for (const std::string &horizon : horizons) {
    ConfigPtr config = make_config(common);
    // taxi defaults: 5-minute windows over the night, geographic metric,
    // no per-agent cap
    if (!common.delta) check(rhd_config_set(config.get(), "delta", "300"), "delta");
    if (!common.windows) {
      const int windows =
          static_cast<int>((hour_end - hour_begin) * 3600.0 / 300.0 + 0.5);
      check(rhd_config_set(config.get(), "total_windows",
                           std::to_string(windows > 0 ? windows : 1).c_str()),
            "total_windows");
    }
    check(rhd_config_set(config.get(), "metric_space", "geographic"),
          "metric_space");
    if (!common.capacity) {
      check(rhd_config_set(config.get(), "capacity_rule", "unbounded"),
            "capacity_rule");
    }
    apply_horizon(config.get(), horizon, common.max_k.value_or(5));

    rhd_scenario *raw = nullptr;
    check(rhd_scenario_taxi_csv(config.get(), csv.c_str(),
                                date.empty() ? nullptr : date.c_str(),
                                hour_begin, hour_end, fleet, &raw, &stats),
          "ingesting " + csv);
    ScenarioPtr scenario(raw);

    rhd_result *res = nullptr;
    check(rhd_run(config.get(), scenario.get(), &res), "running night");
    ResultPtr result(res);
    const RunMetrics m = metrics_of(result.get());
    by_horizon[horizon] = m;
    runs.push_back(json{{"horizon", horizon},
                        {"total_distance_m", m.distance},
                        {"total_idle_s", m.idle},
                        {"tail_idle_s", m.tail_idle},
                        {"percent_assigned", m.percent}});
    std::printf("H(%s): distance %.1f m, idle %.1f s, assigned %.2f %%\n",
                horizon.c_str(), m.distance, m.idle, m.percent);
  }

  json doc{{"csv", csv},
           {"date", date},
           {"hours", json{{"begin", hour_begin}, {"end", hour_end}}},
           {"fleet", fleet},
           {"ingest",
            {{"rows_total", stats.rows_total},
             {"retained", stats.retained},
             {"dropped_malformed", stats.dropped_malformed},
             {"dropped_date", stats.dropped_date},
             {"dropped_hour", stats.dropped_hour},
             {"dropped_bbox", stats.dropped_bbox}}},
           {"runs", std::move(runs)}};

  // Anticipation is expected to cut idle time: flag whether the reactive run
  // has the highest idle of the settings tried.
  if (by_horizon.count("0") && by_horizon.size() > 1) {
    bool ok = true;
    for (const auto &[h, m] : by_horizon) {
      if (h != "0" && m.idle > by_horizon["0"].idle) ok = false;
    }
    doc["idle_trend_anticipation_helps"] = ok;
    std::printf("idle trend (reactive highest): %s\n", ok ? "yes" : "no");
  }

  const std::string out = results_path(out_flag, "taxi.json");
  FILE *f = std::fopen(out.c_str(), "w");
  if (!f) die("cannot open " + out);
  const std::string text = doc.dump(2) + "\n";
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
  std::printf("results           %s\n", out.c_str());
  return 0;
}

int cmd_gen(const CommonOpts &common, const std::string &out) {
  ConfigPtr config = make_config(common);
  rhd_scenario *raw = nullptr;
  check(rhd_scenario_synthetic(config.get(), &raw), "generating scenario");
  ScenarioPtr scenario(raw);
  check(rhd_scenario_save(scenario.get(), out.c_str()), "writing " + out);
  size_t agents = 0, requests = 0;
  rhd_scenario_agent_count(scenario.get(), &agents);
  rhd_scenario_request_count(scenario.get(), &requests);
  std::printf("wrote %s (%zu agents, %zu requests)\n", out.c_str(), agents,
              requests);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"online multi-task assignment with availability anticipation"};
  app.require_subcommand(1);

  CommonOpts run_opts;
  std::string run_scenario;
  std::string run_out, run_trace, run_save;
  CLI::App *run = app.add_subcommand("run", "run one simulation");
  add_common_flags(run, run_opts);
  run->add_option("--scenario", run_scenario,
                  "'synthetic' or a scenario file path")
      ->required();
  run->add_option("--out", run_out, "results JSON path");
  run->add_option("--trace-csv", run_trace, "per-window CSV trace path");
  run->add_option("--save-scenario", run_save, "also write the scenario file");

  CommonOpts sweep_opts;
  std::string sweep_alphas = "0,0.25,0.5,0.75,1";
  std::string sweep_horizons = "0,1,2,3,4,5,v";
  std::string sweep_seeds = "1..10";
  std::string sweep_out;
  CLI::App *sweep = app.add_subcommand("sweep", "alpha x horizon grid");
  add_common_flags(sweep, sweep_opts);
  sweep->add_option("--alphas", sweep_alphas, "comma list of alpha values");
  sweep->add_option("--horizons", sweep_horizons,
                    "comma list of horizons (k or 'v')");
  sweep->add_option("--seeds", sweep_seeds, "seed list: 'a..b' or comma list");
  sweep->add_option("--out", sweep_out, "sweep results JSON path");

  CommonOpts taxi_opts;
  std::string taxi_csv, taxi_date, taxi_out;
  std::string taxi_horizons = "0,5";
  double taxi_hb = 0, taxi_he = 7;
  int taxi_fleet = 1000;
  CLI::App *taxi = app.add_subcommand("taxi", "one night of taxi dispatch");
  add_common_flags(taxi, taxi_opts);
  taxi->add_option("--csv", taxi_csv, "trip-data CSV path")->required();
  taxi->add_option("--date", taxi_date, "night date YYYY-MM-DD");
  taxi->add_option("--hour-begin", taxi_hb, "night start hour");
  taxi->add_option("--hour-end", taxi_he, "night end hour (exclusive)");
  taxi->add_option("--fleet", taxi_fleet, "number of taxis");
  taxi->add_option("--horizons", taxi_horizons,
                   "comma list of horizons to run (k or 'v')");
  taxi->add_option("--out", taxi_out, "results JSON path");

  CommonOpts gen_opts;
  std::string gen_out;
  CLI::App *gen = app.add_subcommand("gen", "write a synthetic scenario file");
  add_common_flags(gen, gen_opts);
  gen->add_option("--out", gen_out, "scenario file path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(run_opts, run_scenario, run_out, run_trace, run_save);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_opts, sweep_alphas, sweep_horizons, sweep_seeds,
                       sweep_out);
    }
    if (taxi->parsed()) {
      return cmd_taxi(taxi_opts, taxi_csv, taxi_date, taxi_hb, taxi_he,
                      taxi_fleet, taxi_horizons, taxi_out);
    }
    if (gen->parsed()) return cmd_gen(gen_opts, gen_out);
  } catch (const std::exception &e) {
    die(e.what());
  }
  return 1;
}
