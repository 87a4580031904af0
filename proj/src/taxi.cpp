#include "rhd/taxi.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rhd/rng.hpp"

namespace rhd {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// "YYYY-MM-DD hh:mm:ss" -> (date string, seconds since midnight)
bool parse_datetime(const std::string& s, std::string& date, double& secs) {
  int y, mo, d, h, mi, se;
  if (std::sscanf(s.c_str(), "%4d-%2d-%2d %2d:%2d:%2d", &y, &mo, &d, &h, &mi,
                  &se) != 6) {
    return false;
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h < 0 || h > 23 || mi < 0 ||
      mi > 59 || se < 0 || se > 59) {
    return false;
  }
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, mo, d);
  date = buf;
  secs = h * 3600.0 + mi * 60.0 + se;
  return true;
}

bool parse_coord(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(out);
}

}  // namespace

std::vector<Request> ingest_taxi_csv(const std::string& path,
                                     const TaxiIngestOptions& options,
                                     double delta, TaxiStats& stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open taxi csv " + path);
  if (delta <= 0) throw std::invalid_argument("delta must be > 0");

  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty taxi csv " + path);
  const std::vector<std::string> cols = split_csv_line(header);
  const auto col_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (trim(cols[i]) == name) return static_cast<int>(i);
    }
    throw std::runtime_error("taxi csv is missing column '" + name + "'");
  };
  const int c_time = col_index(options.columns.pickup_datetime);
  const int c_plon = col_index(options.columns.pickup_longitude);
  const int c_plat = col_index(options.columns.pickup_latitude);
  const int c_dlon = col_index(options.columns.dropoff_longitude);
  const int c_dlat = col_index(options.columns.dropoff_latitude);
  const int max_col = std::max({c_time, c_plon, c_plat, c_dlon, c_dlat});

  struct Row {
    double t;
    Location pickup, dropoff;
  };
  std::vector<Row> rows;

  stats = TaxiStats{};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    ++stats.rows_total;
    const std::vector<std::string> f = split_csv_line(line);
    std::string date;
    double secs = 0;
    Row row;
    if (static_cast<int>(f.size()) <= max_col ||
        !parse_datetime(trim(f[c_time]), date, secs) ||
        !parse_coord(f[c_plat], row.pickup.x) ||
        !parse_coord(f[c_plon], row.pickup.y) ||
        !parse_coord(f[c_dlat], row.dropoff.x) ||
        !parse_coord(f[c_dlon], row.dropoff.y)) {
      ++stats.dropped_malformed;
      continue;
    }
    if (!options.date.empty() && date != options.date) {
      ++stats.dropped_date;
      continue;
    }
    if (secs < options.hour_begin * 3600.0 || secs >= options.hour_end * 3600.0) {
      ++stats.dropped_hour;
      continue;
    }
    if (!options.bbox.contains(row.pickup) || !options.bbox.contains(row.dropoff)) {
      ++stats.dropped_bbox;
      continue;
    }
    row.t = secs - options.hour_begin * 3600.0;
    rows.push_back(row);
    ++stats.retained;
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.t < b.t; });

  RequestIdSource ids;
  std::vector<Request> requests;
  requests.reserve(rows.size());
  for (const Row& r : rows) {
    requests.push_back(new_request(r.pickup, r.dropoff, r.t, delta,
                                   MetricSpace::Geographic, ids));
  }
  return requests;
}

std::vector<Agent> make_taxi_fleet(int n, const GeoBBox& bbox, double velocity,
                                   std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("fleet size must be >= 1");
  if (velocity <= 0) throw std::invalid_argument("velocity must be > 0");
  Rng rng(seed);
  std::vector<Agent> fleet;
  fleet.reserve(n);
  for (int i = 0; i < n; ++i) {
    Agent a;
    a.id = i;
    a.position = {rng.uniform_real(bbox.lat_min, bbox.lat_max),
                  rng.uniform_real(bbox.lon_min, bbox.lon_max)};
    a.velocity = velocity;
    a.travel_budget = kUnboundedBudget;
    fleet.push_back(a);
  }
  return fleet;
}

Scenario make_taxi_scenario(const std::string& path,
                            const TaxiIngestOptions& options, int fleet_size,
                            double delta, std::uint64_t seed, TaxiStats& stats) {
  Scenario sc;
  sc.space = MetricSpace::Geographic;
  sc.variant = CostVariant::PickupDropoff;
  sc.requests = ingest_taxi_csv(path, options, delta, stats);
  sc.agents = make_taxi_fleet(fleet_size, options.bbox, kTaxiVelocityMps, seed);
  sc.validate();
  return sc;
}

}  // namespace rhd
