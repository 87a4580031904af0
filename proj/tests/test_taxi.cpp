#include "doctest.h"
#include "rhd/taxi.hpp"

#include <cmath>
#include <cstdio>
#include <set>

using namespace rhd;

namespace {

const char* kFixture = RHD_SOURCE_DIR "/data/taxi_fixture_2013.csv";

TaxiIngestOptions night_of(const char* date) {
  TaxiIngestOptions o;
  o.date = date;
  o.hour_begin = 0;
  o.hour_end = 7;
  return o;
}

}  // namespace

TEST_CASE("fixture ingestion: exact retained and dropped counts") {
  TaxiStats stats;
  const auto requests = ingest_taxi_csv(kFixture, night_of("2013-01-07"), 300, stats);

  CHECK(stats.rows_total == 1000);
  CHECK(stats.retained == 850);
  CHECK(stats.dropped_hour == 60);
  CHECK(stats.dropped_date == 50);
  CHECK(stats.dropped_bbox == 25);
  CHECK(stats.dropped_malformed == 15);
  CHECK(stats.retained + stats.dropped_hour + stats.dropped_date +
            stats.dropped_bbox + stats.dropped_malformed ==
        stats.rows_total);
  CHECK(requests.size() == stats.retained);
}

TEST_CASE("ingested requests are valid pickup/dropoff geographic requests") {
  TaxiStats stats;
  const auto requests = ingest_taxi_csv(kFixture, night_of("2013-01-07"), 300, stats);
  const GeoBBox bbox;
  std::set<RequestId> ids;
  double prev_t = -1;
  for (const Request& r : requests) {
    CHECK(ids.insert(r.id).second);
    REQUIRE(r.dropoff.has_value());
    CHECK(bbox.contains(r.pickup));
    CHECK(bbox.contains(*r.dropoff));
    CHECK(r.registered_at >= 0);
    CHECK(r.registered_at < 7 * 3600);
    CHECK(r.registered_at >= prev_t);  // sorted by pickup time
    prev_t = r.registered_at;
    CHECK(r.registered_window == static_cast<int>(r.registered_at / 300));
  }
}

TEST_CASE("the 01:30:00 pickup lands at 5400 seconds") {
  TaxiStats stats;
  const auto requests = ingest_taxi_csv(kFixture, night_of("2013-01-07"), 300, stats);
  int found = 0;
  for (const Request& r : requests) {
    if (r.registered_at == 5400.0) ++found;
  }
  CHECK(found == 1);
}

TEST_CASE("hour range is honored and shifts the time origin") {
  TaxiIngestOptions late = night_of("2013-01-07");
  late.hour_begin = 1;
  late.hour_end = 3;
  TaxiStats stats;
  const auto requests = ingest_taxi_csv(kFixture, late, 300, stats);
  CHECK(stats.retained > 0);
  CHECK(stats.retained < 850);
  for (const Request& r : requests) {
    CHECK(r.registered_at >= 0);
    CHECK(r.registered_at < 2 * 3600);  // relative to 01:00
  }
  // the 01:30 pickup is now 1800 s into the range
  int found = 0;
  for (const Request& r : requests) {
    if (r.registered_at == 1800.0) ++found;
  }
  CHECK(found >= 1);
}

TEST_CASE("no date filter accepts the other nights") {
  TaxiIngestOptions any = night_of("2013-01-07");
  any.date.clear();
  TaxiStats stats;
  ingest_taxi_csv(kFixture, any, 300, stats);
  CHECK(stats.retained == 900);  // the 50 other-night rows now pass
  CHECK(stats.dropped_date == 0);
}

TEST_CASE("missing file and bad header are hard errors") {
  TaxiStats stats;
  CHECK_THROWS(ingest_taxi_csv("/nonexistent.csv", night_of("2013-01-07"), 300,
                               stats));

  const char* path = "/tmp/rhd_bad_header.csv";
  FILE* f = std::fopen(path, "w");
  std::fputs("a,b,c\n1,2,3\n", f);
  std::fclose(f);
  CHECK_THROWS_AS(ingest_taxi_csv(path, night_of("2013-01-07"), 300, stats),
                  std::runtime_error);
  std::remove(path);
}

TEST_CASE("renamed headers work through the column mapping") {
  const char* path = "/tmp/rhd_renamed.csv";
  FILE* f = std::fopen(path, "w");
  std::fputs(
      "when,plon,plat,dlon,dlat\n"
      "2013-01-07 01:30:00,-73.98,40.75,-73.97,40.76\n",
      f);
  std::fclose(f);

  TaxiIngestOptions o = night_of("2013-01-07");
  o.columns.pickup_datetime = "when";
  o.columns.pickup_longitude = "plon";
  o.columns.pickup_latitude = "plat";
  o.columns.dropoff_longitude = "dlon";
  o.columns.dropoff_latitude = "dlat";
  TaxiStats stats;
  const auto requests = ingest_taxi_csv(path, o, 300, stats);
  REQUIRE(requests.size() == 1);
  CHECK(requests[0].registered_at == 5400.0);
  CHECK(requests[0].pickup.x == doctest::Approx(40.75));
  CHECK(requests[0].pickup.y == doctest::Approx(-73.98));
  std::remove(path);
}

TEST_CASE("taxi fleet: size, bounds, velocity, determinism") {
  const GeoBBox bbox;
  const auto fleet = make_taxi_fleet(1000, bbox, kTaxiVelocityMps, 3);
  REQUIRE(fleet.size() == 1000);
  std::set<AgentId> ids;
  for (const Agent& a : fleet) {
    CHECK(ids.insert(a.id).second);
    CHECK(bbox.contains(a.position));
    CHECK(a.velocity == kTaxiVelocityMps);
    CHECK(a.travel_budget == kUnboundedBudget);
  }
  // 30 mph exactly
  CHECK(kTaxiVelocityMps == 30.0 * 1609.344 / 3600.0);
  CHECK(kTaxiVelocityMps == doctest::Approx(13.4112));

  const auto again = make_taxi_fleet(1000, bbox, kTaxiVelocityMps, 3);
  for (std::size_t i = 0; i < fleet.size(); ++i) {
    CHECK(fleet[i].position.x == again[i].position.x);
    CHECK(fleet[i].position.y == again[i].position.y);
  }
  const auto different = make_taxi_fleet(1000, bbox, kTaxiVelocityMps, 4);
  CHECK(different[0].position.x != fleet[0].position.x);
}

TEST_CASE("a full taxi scenario validates") {
  TaxiStats stats;
  const Scenario sc = make_taxi_scenario(kFixture, night_of("2013-01-07"), 20,
                                         300, 1, stats);
  CHECK(sc.space == MetricSpace::Geographic);
  CHECK(sc.variant == CostVariant::PickupDropoff);
  CHECK(sc.agents.size() == 20);
  CHECK(sc.requests.size() == 850);
}
