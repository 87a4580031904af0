#pragma once

#include <span>

#include "rhd/model.hpp"

namespace rhd {

enum class CostVariant { ReachOnly, PickupDropoff };

constexpr double kEarthRadiusM = 6371000.0;

// Planar: Euclidean. Geographic: great-circle (haversine), meters.
double distance(const Location& a, const Location& b, MetricSpace space);

// Open-path cost of serving the requests in the given order, starting from
// `start`. ReachOnly chains pickup locations; PickupDropoff also covers the
// pickup-to-dropoff leg of every request and resumes from the last dropoff.
double path_length(const Location& start, std::span<const Request> ordered,
                   CostVariant variant, MetricSpace space);

// Where an agent ends up after serving the requests in order: the last pickup
// (ReachOnly) or the last dropoff (PickupDropoff); `start` when empty.
Location path_end(const Location& start, std::span<const Request> ordered,
                  CostVariant variant);

// Remaining travel length of a waypoint route from `from`.
double route_length(const Location& from, const std::deque<Waypoint>& route,
                    MetricSpace space);

}  // namespace rhd
