#include "rhd/model.hpp"

namespace rhd {

bool location_valid(const Location& loc, MetricSpace space) {
  if (!std::isfinite(loc.x) || !std::isfinite(loc.y)) return false;
  if (space == MetricSpace::Geographic) {
    return loc.x >= -90.0 && loc.x <= 90.0 && loc.y >= -180.0 && loc.y <= 180.0;
  }
  return true;
}

void check_location(const Location& loc, MetricSpace space) {
  if (!location_valid(loc, space)) {
    throw std::invalid_argument("invalid coordinates (" + std::to_string(loc.x) +
                                ", " + std::to_string(loc.y) + ") for metric space");
  }
}

Request new_request(Location pickup, std::optional<Location> dropoff,
                    double registered_at, double delta, MetricSpace space,
                    RequestIdSource& ids) {
  if (registered_at < 0) {
    throw std::invalid_argument("registered_at must be >= 0");
  }
  if (delta <= 0) {
    throw std::invalid_argument("delta must be > 0");
  }
  check_location(pickup, space);
  if (dropoff) check_location(*dropoff, space);
  Request r;
  r.id = ids.next();
  r.pickup = pickup;
  r.dropoff = dropoff;
  r.registered_at = registered_at;
  r.registered_window = window_of(registered_at, delta);
  return r;
}

void GAParams::validate() const {
  if (population_size < 4) {
    throw std::invalid_argument("population_size must be >= 4");
  }
  if (p_muta < 0 || p_muta > 1) {
    throw std::invalid_argument("p_muta must be in [0,1]");
  }
  if (p_swap < 0 || p_swap > 1) {
    throw std::invalid_argument("p_swap must be in [0,1]");
  }
  if (epsilon < 0) {
    throw std::invalid_argument("epsilon must be >= 0");
  }
  if (budget.kind == GABudget::Kind::Generations && budget.generations < 1) {
    throw std::invalid_argument("generations budget must be >= 1");
  }
  if (budget.kind == GABudget::Kind::WallClock && budget.wall_seconds < 0) {
    throw std::invalid_argument("wall budget must be >= 0");
  }
}

void SimConfig::validate() const {
  if (delta <= 0) {
    throw std::invalid_argument("delta must be > 0");
  }
  if (total_windows < 1) {
    throw std::invalid_argument("total_windows must be >= 1");
  }
  if (alpha < 0 || alpha > 1) {
    throw std::invalid_argument("alpha must be in [0,1]");
  }
  if (horizon.k < 0) {
    throw std::invalid_argument("horizon k must be >= 0");
  }
  if (capacity.kind == CapacityRule::Kind::Fraction && capacity.fraction <= 0) {
    throw std::invalid_argument("capacity fraction must be > 0");
  }
  ga.validate();
}

}  // namespace rhd
