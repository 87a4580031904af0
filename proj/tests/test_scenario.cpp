#include "doctest.h"
#include "rhd/scenario.hpp"

#include <cstdio>
#include <string>

using namespace rhd;

namespace {

std::string temp_path(const char* name) {
  return std::string("/tmp/rhd_test_") + name;
}

}  // namespace

TEST_CASE("synthetic generation: counts, bounds, stamps") {
  SyntheticSpec spec;
  spec.n_agents = 20;
  spec.tasks_per_window = 10;
  spec.total_windows = 30;
  const Scenario sc = generate_synthetic(spec, 5.0);

  CHECK(sc.agents.size() == 20);
  REQUIRE(sc.requests.size() == 300);
  for (const Agent& a : sc.agents) {
    CHECK(a.position.x >= 0);
    CHECK(a.position.x <= 10);
    CHECK(a.position.y >= 0);
    CHECK(a.position.y <= 10);
    CHECK(a.velocity == 1.0);
    CHECK(a.travel_budget == 150.0);
  }
  for (std::size_t i = 0; i < sc.requests.size(); ++i) {
    const Request& r = sc.requests[i];
    CHECK(r.id == static_cast<RequestId>(i));
    CHECK(r.pickup.x >= 0);
    CHECK(r.pickup.x <= 10);
    CHECK(r.registered_at == (i / 10) * 5.0);
    CHECK(r.registered_window == static_cast<int>(i / 10));
    CHECK_FALSE(r.dropoff.has_value());
  }

  SyntheticSpec crowded = spec;
  crowded.n_agents = 10;
  crowded.tasks_per_window = 20;
  CHECK(generate_synthetic(crowded, 5.0).requests.size() == 600);
}

TEST_CASE("synthetic generation is deterministic per seed") {
  SyntheticSpec spec;
  spec.rng_seed = 77;
  const Scenario a = generate_synthetic(spec, 5.0);
  const Scenario b = generate_synthetic(spec, 5.0);
  REQUIRE(a.agents.size() == b.agents.size());
  for (std::size_t i = 0; i < a.agents.size(); ++i) {
    CHECK(a.agents[i].position.x == b.agents[i].position.x);
    CHECK(a.agents[i].position.y == b.agents[i].position.y);
  }
  REQUIRE(a.requests.size() == b.requests.size());
  for (std::size_t i = 0; i < a.requests.size(); ++i) {
    CHECK(a.requests[i].pickup.x == b.requests[i].pickup.x);
  }

  SyntheticSpec other = spec;
  other.rng_seed = 78;
  const Scenario c = generate_synthetic(other, 5.0);
  bool all_equal = true;
  for (std::size_t i = 0; i < a.requests.size(); ++i) {
    all_equal = all_equal && a.requests[i].pickup.x == c.requests[i].pickup.x;
  }
  CHECK_FALSE(all_equal);
}

TEST_CASE("scenario text round trip preserves every field") {
  SyntheticSpec spec;
  spec.n_agents = 3;
  spec.tasks_per_window = 4;
  spec.total_windows = 2;
  spec.travel_budget = 150;
  Scenario sc = generate_synthetic(spec, 5.0);
  sc.agents[1].travel_budget = kUnboundedBudget;

  const std::string path = temp_path("scenario.txt");
  save_scenario(sc, path);
  const Scenario back = load_scenario(path, 5.0);

  CHECK(back.space == sc.space);
  CHECK(back.variant == sc.variant);
  REQUIRE(back.agents.size() == sc.agents.size());
  for (std::size_t i = 0; i < sc.agents.size(); ++i) {
    CHECK(back.agents[i].id == sc.agents[i].id);
    CHECK(back.agents[i].position.x == sc.agents[i].position.x);
    CHECK(back.agents[i].position.y == sc.agents[i].position.y);
    CHECK(back.agents[i].velocity == sc.agents[i].velocity);
    CHECK(back.agents[i].travel_budget == sc.agents[i].travel_budget);
  }
  REQUIRE(back.requests.size() == sc.requests.size());
  for (std::size_t i = 0; i < sc.requests.size(); ++i) {
    CHECK(back.requests[i].id == sc.requests[i].id);
    CHECK(back.requests[i].registered_at == sc.requests[i].registered_at);
    CHECK(back.requests[i].registered_window == sc.requests[i].registered_window);
    CHECK(back.requests[i].pickup.x == sc.requests[i].pickup.x);
    CHECK(back.requests[i].pickup.y == sc.requests[i].pickup.y);
  }
  std::remove(path.c_str());
}

TEST_CASE("scenario load rejects malformed files") {
  const std::string path = temp_path("bad_scenario.txt");
  FILE* f = std::fopen(path.c_str(), "w");
  std::fputs("agent 0 1 2 1 inf\nrequest 0 oops 1 2\n", f);
  std::fclose(f);
  CHECK_THROWS(load_scenario(path, 5.0));

  f = std::fopen(path.c_str(), "w");
  std::fputs("unknown_record 1 2 3\n", f);
  std::fclose(f);
  CHECK_THROWS(load_scenario(path, 5.0));

  CHECK_THROWS(load_scenario("/nonexistent/rhd.txt", 5.0));
  std::remove(path.c_str());
}

TEST_CASE("mixed dropoff presence is rejected") {
  Scenario sc;
  sc.variant = CostVariant::ReachOnly;
  Request r;
  r.id = 0;
  r.pickup = {1, 1};
  r.dropoff = Location{2, 2};
  sc.requests.push_back(r);
  CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
}
