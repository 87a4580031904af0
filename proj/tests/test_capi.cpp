#include "doctest.h"
#include "rhdispatch.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

const char* kFixture = RHD_SOURCE_DIR "/data/taxi_fixture_2013.csv";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rhd_config* small_synthetic_config() {
  rhd_config* c = rhd_config_new();
  REQUIRE(c != nullptr);
  CHECK(rhd_config_set(c, "n_agents", "4") == RHD_OK);
  CHECK(rhd_config_set(c, "tasks_per_window", "3") == RHD_OK);
  CHECK(rhd_config_set(c, "total_windows", "4") == RHD_OK);
  CHECK(rhd_config_set(c, "budget", "generations") == RHD_OK);
  CHECK(rhd_config_set(c, "generations", "80") == RHD_OK);
  CHECK(rhd_config_set(c, "rng_seed", "5") == RHD_OK);
  return c;
}

}  // namespace

TEST_CASE("version and error text are always available") {
  CHECK(rhd_version() != nullptr);
  CHECK(rhd_last_error() != nullptr);
}

TEST_CASE("config: set, get, and reject unknown keys") {
  rhd_config* c = rhd_config_new();
  REQUIRE(c != nullptr);

  CHECK(rhd_config_set(c, "alpha", "0.5") == RHD_OK);
  char buf[64];
  CHECK(rhd_config_get(c, "alpha", buf, sizeof buf) == RHD_OK);
  CHECK(std::stod(buf) == 0.5);

  CHECK(rhd_config_set(c, "bogus_key", "1") == RHD_ERR_INVALID_ARGUMENT);
  CHECK(std::string(rhd_last_error()).find("bogus_key") != std::string::npos);
  CHECK(rhd_config_set(c, "alpha", "2.5") == RHD_OK);  // range checked at run
  CHECK(rhd_config_set(nullptr, "alpha", "1") == RHD_ERR_INVALID_ARGUMENT);

  char tiny[2];
  CHECK(rhd_config_get(c, "population_size", tiny, sizeof tiny) ==
        RHD_ERR_INVALID_ARGUMENT);

  rhd_config_free(c);
}

TEST_CASE("config files load through the C surface") {
  const char* path = "/tmp/rhd_capi_config.cfg";
  FILE* f = std::fopen(path, "w");
  std::fputs("alpha = 0.75\nn_agents = 6\n", f);
  std::fclose(f);

  rhd_config* c = rhd_config_new();
  CHECK(rhd_config_load_file(c, path) == RHD_OK);
  char buf[64];
  CHECK(rhd_config_get(c, "n_agents", buf, sizeof buf) == RHD_OK);
  CHECK(std::string(buf) == "6");

  CHECK(rhd_config_load_file(c, "/nonexistent/x.cfg") != RHD_OK);

  f = std::fopen(path, "w");
  std::fputs("alpha = banana\n", f);
  std::fclose(f);
  CHECK(rhd_config_load_file(c, path) == RHD_ERR_PARSE);

  rhd_config_free(c);
  std::remove(path);
}

TEST_CASE("a full run through the shared library") {
  rhd_config* c = small_synthetic_config();

  rhd_scenario* sc = nullptr;
  REQUIRE(rhd_scenario_synthetic(c, &sc) == RHD_OK);
  size_t agents = 0, requests = 0;
  CHECK(rhd_scenario_agent_count(sc, &agents) == RHD_OK);
  CHECK(rhd_scenario_request_count(sc, &requests) == RHD_OK);
  CHECK(agents == 4);
  CHECK(requests == 12);

  rhd_result* r = nullptr;
  REQUIRE(rhd_run(c, sc, &r) == RHD_OK);

  double distance = -1, idle = -1, tail = -1, percent = -1;
  CHECK(rhd_result_total_distance_m(r, &distance) == RHD_OK);
  CHECK(rhd_result_total_idle_s(r, &idle) == RHD_OK);
  CHECK(rhd_result_tail_idle_s(r, &tail) == RHD_OK);
  CHECK(rhd_result_percent_assigned(r, &percent) == RHD_OK);
  CHECK(distance >= 0);
  CHECK(idle >= 0);
  CHECK(tail >= 0);
  CHECK(percent >= 0);
  CHECK(percent <= 100);

  size_t windows = 0;
  CHECK(rhd_result_window_count(r, &windows) == RHD_OK);
  CHECK(windows == 4);

  char* json_text = rhd_result_json(r);
  REQUIRE(json_text != nullptr);
  const auto doc = nlohmann::json::parse(json_text);
  CHECK(doc["total_distance_m"].get<double>() == distance);
  CHECK(doc["total_idle_s"].get<double>() == idle);
  CHECK(doc["tail_idle_s"].get<double>() == tail);
  CHECK(doc["percent_assigned"].get<double>() == percent);
  CHECK(doc["per_window"].size() == 4);
  CHECK(doc["config"]["rng_seed"].get<uint64_t>() == 5);
  rhd_string_free(json_text);

  rhd_result_free(r);
  rhd_scenario_free(sc);
  rhd_config_free(c);
}

TEST_CASE("scenario files round trip through the C surface") {
  rhd_config* c = small_synthetic_config();
  rhd_scenario* sc = nullptr;
  REQUIRE(rhd_scenario_synthetic(c, &sc) == RHD_OK);

  const char* path = "/tmp/rhd_capi_scenario.txt";
  CHECK(rhd_scenario_save(sc, path) == RHD_OK);

  rhd_scenario* back = nullptr;
  REQUIRE(rhd_scenario_load(c, path, &back) == RHD_OK);
  size_t a = 0, b = 0;
  rhd_scenario_request_count(sc, &a);
  rhd_scenario_request_count(back, &b);
  CHECK(a == b);

  rhd_scenario* missing = nullptr;
  CHECK(rhd_scenario_load(c, "/nonexistent/sc.txt", &missing) != RHD_OK);

  rhd_scenario_free(back);
  rhd_scenario_free(sc);
  rhd_config_free(c);
  std::remove(path);
}

TEST_CASE("identical runs write byte-identical results files") {
  const char* out1 = "/tmp/rhd_capi_r1.json";
  const char* out2 = "/tmp/rhd_capi_r2.json";
  for (const char* out : {out1, out2}) {
    rhd_config* c = small_synthetic_config();
    rhd_scenario* sc = nullptr;
    REQUIRE(rhd_scenario_synthetic(c, &sc) == RHD_OK);
    rhd_result* r = nullptr;
    REQUIRE(rhd_run(c, sc, &r) == RHD_OK);
    CHECK(rhd_result_write_json(r, out) == RHD_OK);
    rhd_result_free(r);
    rhd_scenario_free(sc);
    rhd_config_free(c);
  }
  const std::string a = slurp(out1), b = slurp(out2);
  REQUIRE_FALSE(a.empty());
  CHECK(a == b);
  std::remove(out1);
  std::remove(out2);
}

TEST_CASE("taxi ingestion via the C surface reports drop statistics") {
  rhd_config* c = rhd_config_new();
  CHECK(rhd_config_set(c, "delta", "300") == RHD_OK);
  CHECK(rhd_config_set(c, "metric_space", "geographic") == RHD_OK);

  rhd_scenario* sc = nullptr;
  rhd_taxi_stats stats{};
  REQUIRE(rhd_scenario_taxi_csv(c, kFixture, "2013-01-07", 0, 7, 20, &sc,
                                &stats) == RHD_OK);
  CHECK(stats.rows_total == 1000);
  CHECK(stats.retained > 0);
  CHECK(stats.retained + stats.dropped_malformed + stats.dropped_date +
            stats.dropped_hour + stats.dropped_bbox ==
        stats.rows_total);

  size_t requests = 0;
  rhd_scenario_request_count(sc, &requests);
  CHECK(requests == stats.retained);

  rhd_scenario* bad = nullptr;
  CHECK(rhd_scenario_taxi_csv(c, "/nonexistent.csv", nullptr, 0, 7, 5, &bad,
                              nullptr) != RHD_OK);

  rhd_scenario_free(sc);
  rhd_config_free(c);
}

TEST_CASE("csv trace goes through the C surface") {
  rhd_config* c = small_synthetic_config();
  rhd_scenario* sc = nullptr;
  REQUIRE(rhd_scenario_synthetic(c, &sc) == RHD_OK);
  rhd_result* r = nullptr;
  REQUIRE(rhd_run(c, sc, &r) == RHD_OK);

  const char* path = "/tmp/rhd_capi_trace.csv";
  CHECK(rhd_result_write_csv(r, path) == RHD_OK);
  const std::string text = slurp(path);
  CHECK(text.find("window,n_tasks,assigned") == 0);

  rhd_result_free(r);
  rhd_scenario_free(sc);
  rhd_config_free(c);
  std::remove(path);
}
