#include "rhd/geometry.hpp"

#include <cmath>

namespace rhd {

namespace {

double haversine_m(const Location& a, const Location& b) {
  constexpr double deg = M_PI / 180.0;
  const double lat1 = a.x * deg, lon1 = a.y * deg;
  const double lat2 = b.x * deg, lon2 = b.y * deg;
  const double sdlat = std::sin((lat2 - lat1) / 2);
  const double sdlon = std::sin((lon2 - lon1) / 2);
  const double h = sdlat * sdlat + std::cos(lat1) * std::cos(lat2) * sdlon * sdlon;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

const Location& dropoff_of(const Request& r) {
  if (!r.dropoff) {
    throw std::invalid_argument("request " + std::to_string(r.id) +
                                " has no dropoff in a pickup/dropoff path");
  }
  return *r.dropoff;
}

}  // namespace

double distance(const Location& a, const Location& b, MetricSpace space) {
  check_location(a, space);
  check_location(b, space);
  if (space == MetricSpace::Geographic) return haversine_m(a, b);
  return std::hypot(a.x - b.x, a.y - b.y);
}

double path_length(const Location& start, std::span<const Request> ordered,
                   CostVariant variant, MetricSpace space) {
  if (ordered.empty()) return 0.0;
  double total = distance(start, ordered.front().pickup, space);
  if (variant == CostVariant::ReachOnly) {
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
      total += distance(ordered[i].pickup, ordered[i + 1].pickup, space);
    }
    return total;
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    total += distance(ordered[i].pickup, dropoff_of(ordered[i]), space);
    if (i + 1 < ordered.size()) {
      total += distance(dropoff_of(ordered[i]), ordered[i + 1].pickup, space);
    }
  }
  return total;
}

Location path_end(const Location& start, std::span<const Request> ordered,
                  CostVariant variant) {
  if (ordered.empty()) return start;
  if (variant == CostVariant::ReachOnly) return ordered.back().pickup;
  return dropoff_of(ordered.back());
}

double route_length(const Location& from, const std::deque<Waypoint>& route,
                    MetricSpace space) {
  double total = 0;
  Location at = from;
  for (const Waypoint& wp : route) {
    total += distance(at, wp.loc, space);
    at = wp.loc;
  }
  return total;
}

}  // namespace rhd
