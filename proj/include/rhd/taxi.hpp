#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhd/scenario.hpp"

namespace rhd {

// 30 mph, the speed the taxi fleet is modeled at (exact: 30 * 1609.344 / 3600)
constexpr double kTaxiVelocityMps = 13.4112;

// Records outside this box are rejected as bad GPS.
struct GeoBBox {
  double lat_min{40.4}, lat_max{41.1};
  double lon_min{-74.3}, lon_max{-73.6};

  bool contains(const Location& loc) const {
    return loc.x >= lat_min && loc.x <= lat_max && loc.y >= lon_min &&
           loc.y <= lon_max;
  }
};

struct TaxiStats {
  std::uint64_t rows_total{0};
  std::uint64_t retained{0};
  std::uint64_t dropped_malformed{0};
  std::uint64_t dropped_date{0};
  std::uint64_t dropped_hour{0};
  std::uint64_t dropped_bbox{0};
};

// Column names of the 2013 trip-data schema; override when a file uses
// renamed headers.
struct TaxiColumns {
  std::string pickup_datetime{"pickup_datetime"};
  std::string pickup_longitude{"pickup_longitude"};
  std::string pickup_latitude{"pickup_latitude"};
  std::string dropoff_longitude{"dropoff_longitude"};
  std::string dropoff_latitude{"dropoff_latitude"};
};

struct TaxiIngestOptions {
  std::string date;        // "YYYY-MM-DD"; empty = accept any date
  double hour_begin{0};    // night window, hours since midnight
  double hour_end{7};      // exclusive
  GeoBBox bbox;
  TaxiColumns columns;
};

// One request per retained row; registered_at counts seconds from the start
// of the night (hour_begin). Malformed rows are dropped and tallied, a bad
// header is a hard error.
std::vector<Request> ingest_taxi_csv(const std::string& path,
                                     const TaxiIngestOptions& options,
                                     double delta, TaxiStats& stats);

// n taxis placed uniformly in the box, unbounded travel budget.
std::vector<Agent> make_taxi_fleet(int n, const GeoBBox& bbox, double velocity,
                                   std::uint64_t seed);

// Full night scenario: ingested requests plus a random fleet.
Scenario make_taxi_scenario(const std::string& path,
                            const TaxiIngestOptions& options, int fleet_size,
                            double delta, std::uint64_t seed, TaxiStats& stats);

}  // namespace rhd
