#include "rhdispatch.h"

#include <cstring>
#include <string>

#include "rhd/config.hpp"
#include "rhd/results.hpp"
#include "rhd/scenario.hpp"
#include "rhd/sim.hpp"
#include "rhd/taxi.hpp"

struct rhd_config {
  rhd::RunSpec spec;
};

struct rhd_scenario {
  rhd::Scenario scenario;
};

struct rhd_result {
  rhd::SimConfig config;
  rhd::Scenario scenario_meta;  // agents/requests copied for the report
  rhd::SimMetrics metrics;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    return fail(RHD_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(RHD_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(RHD_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char *rhd_version(void) { return "0.1.0"; }

const char *rhd_last_error(void) { return g_last_error.c_str(); }

rhd_config *rhd_config_new(void) { return new rhd_config{}; }

void rhd_config_free(rhd_config *config) { delete config; }

int rhd_config_load_file(rhd_config *config, const char *path) {
  if (!config || !path) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    try {
      rhd::apply_config_file(config->spec, path);
    } catch (const std::runtime_error& e) {
      // distinguish unreadable files from bad content
      if (std::string(e.what()).find(": ") != std::string::npos) {
        return fail(RHD_ERR_PARSE, e.what());
      }
      throw;
    }
    return RHD_OK;
  });
}

int rhd_config_set(rhd_config *config, const char *key, const char *value) {
  if (!config || !key || !value) {
    return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    rhd::apply_setting(config->spec, key, value);
    return RHD_OK;
  });
}

int rhd_config_get(const rhd_config *config, const char *key, char *buf,
                   size_t buflen) {
  if (!config || !key || !buf || buflen == 0) {
    return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const std::string v = rhd::setting_value(config->spec, key);
    if (v.size() + 1 > buflen) {
      return fail(RHD_ERR_INVALID_ARGUMENT, "buffer too small");
    }
    std::memcpy(buf, v.c_str(), v.size() + 1);
    return RHD_OK;
  });
}

int rhd_scenario_synthetic(const rhd_config *config, rhd_scenario **out) {
  if (!config || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto *sc = new rhd_scenario{
        rhd::generate_synthetic(config->spec.synthetic, config->spec.sim.delta)};
    *out = sc;
    return RHD_OK;
  });
}

int rhd_scenario_load(const rhd_config *config, const char *path,
                      rhd_scenario **out) {
  if (!config || !path || !out) {
    return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto *sc =
        new rhd_scenario{rhd::load_scenario(path, config->spec.sim.delta)};
    *out = sc;
    return RHD_OK;
  });
}

int rhd_scenario_save(const rhd_scenario *scenario, const char *path) {
  if (!scenario || !path) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    rhd::save_scenario(scenario->scenario, path);
    return RHD_OK;
  });
}

int rhd_scenario_taxi_csv(const rhd_config *config, const char *path,
                          const char *date, double hour_begin, double hour_end,
                          int fleet_size, rhd_scenario **out,
                          rhd_taxi_stats *stats) {
  if (!config || !path || !out) {
    return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    rhd::TaxiIngestOptions options;
    if (date) options.date = date;
    options.hour_begin = hour_begin;
    options.hour_end = hour_end;
    rhd::TaxiStats s;
    auto *sc = new rhd_scenario{rhd::make_taxi_scenario(
        path, options, fleet_size, config->spec.sim.delta,
        config->spec.sim.rng_seed, s)};
    if (stats) {
      stats->rows_total = s.rows_total;
      stats->retained = s.retained;
      stats->dropped_malformed = s.dropped_malformed;
      stats->dropped_date = s.dropped_date;
      stats->dropped_hour = s.dropped_hour;
      stats->dropped_bbox = s.dropped_bbox;
    }
    *out = sc;
    return RHD_OK;
  });
}

int rhd_scenario_agent_count(const rhd_scenario *scenario, size_t *out) {
  if (!scenario || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  *out = scenario->scenario.agents.size();
  return RHD_OK;
}

int rhd_scenario_request_count(const rhd_scenario *scenario, size_t *out) {
  if (!scenario || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  *out = scenario->scenario.requests.size();
  return RHD_OK;
}

void rhd_scenario_free(rhd_scenario *scenario) { delete scenario; }

int rhd_run(const rhd_config *config, const rhd_scenario *scenario,
            rhd_result **out) {
  if (!config || !scenario || !out) {
    return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto *r = new rhd_result{};
    try {
      r->config = config->spec.sim;
      r->scenario_meta.space = scenario->scenario.space;
      r->scenario_meta.variant = scenario->scenario.variant;
      r->scenario_meta.agents = scenario->scenario.agents;
      r->scenario_meta.requests = scenario->scenario.requests;
      r->metrics = rhd::run_simulation(config->spec.sim, scenario->scenario);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
    return RHD_OK;
  });
}

int rhd_result_total_distance_m(const rhd_result *result, double *out) {
  if (!result || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  *out = result->metrics.total_distance;
  return RHD_OK;
}

int rhd_result_total_idle_s(const rhd_result *result, double *out) {
  if (!result || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  *out = result->metrics.total_idle;
  return RHD_OK;
}

int rhd_result_tail_idle_s(const rhd_result *result, double *out) {
  if (!result || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  *out = result->metrics.tail_idle;
  return RHD_OK;
}

int rhd_result_percent_assigned(const rhd_result *result, double *out) {
  if (!result || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  *out = result->metrics.percent_assigned;
  return RHD_OK;
}

int rhd_result_total_assigned(const rhd_result *result, size_t *out) {
  if (!result || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  *out = static_cast<size_t>(result->metrics.total_assigned);
  return RHD_OK;
}

int rhd_result_window_count(const rhd_result *result, size_t *out) {
  if (!result || !out) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  *out = result->metrics.windows.size();
  return RHD_OK;
}

char *rhd_result_json(const rhd_result *result) {
  if (!result) {
    fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
    return nullptr;
  }
  try {
    const std::string doc = rhd::results_json(result->config,
                                              result->scenario_meta,
                                              result->metrics);
    char *s = new char[doc.size() + 1];
    std::memcpy(s, doc.c_str(), doc.size() + 1);
    return s;
  } catch (const std::exception& e) {
    fail(RHD_ERR_INTERNAL, e.what());
    return nullptr;
  }
}

int rhd_result_write_json(const rhd_result *result, const char *path) {
  if (!result || !path) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    rhd::write_results_json(result->config, result->scenario_meta,
                            result->metrics, path);
    return RHD_OK;
  });
}

int rhd_result_write_csv(const rhd_result *result, const char *path) {
  if (!result || !path) return fail(RHD_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    rhd::write_results_csv(result->metrics, path);
    return RHD_OK;
  });
}

void rhd_result_free(rhd_result *result) { delete result; }

void rhd_string_free(char *s) { delete[] s; }

}  // extern "C"
