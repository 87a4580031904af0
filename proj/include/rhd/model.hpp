#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhd {

using RequestId = std::int32_t;
using AgentId = std::int32_t;

constexpr double kUnboundedBudget = std::numeric_limits<double>::infinity();

enum class MetricSpace { Planar, Geographic };

// Planar: x/y in meters. Geographic: x = latitude, y = longitude, degrees.
struct Location {
  double x{0};
  double y{0};
};

bool location_valid(const Location& loc, MetricSpace space);
void check_location(const Location& loc, MetricSpace space);

struct Request {
  RequestId id{0};
  Location pickup;
  std::optional<Location> dropoff;
  double registered_at{0};  // seconds since simulation start
  int registered_window{0};
};

// Hands out dense request ids starting at 0.
class RequestIdSource {
 public:
  RequestId next() { return next_++; }
  RequestId peek() const { return next_; }

 private:
  RequestId next_{0};
};

Request new_request(Location pickup, std::optional<Location> dropoff,
                    double registered_at, double delta, MetricSpace space,
                    RequestIdSource& ids);

// One travel target. Pickup/dropoff scenarios expand a request into two
// waypoints; reach-only scenarios into one. A request counts as completed
// when its waypoint with completes_request=true is reached.
struct Waypoint {
  Location loc;
  RequestId request{-1};
  bool completes_request{true};
};

struct Agent {
  AgentId id{0};
  Location position;  // current, updated as the simulation advances
  double velocity{1.0};
  double distance_traveled{0};
  double travel_budget{kUnboundedBudget};
  double plan_issued_at{0};
  double last_route_end_time{0};  // when the route last ran empty

  std::deque<Waypoint> route;       // waypoints not yet reached, travel order
  std::vector<RequestId> plan;      // request ids not yet completed

  bool idle() const { return route.empty(); }
  bool budget_exhausted() const { return distance_traveled >= travel_budget; }
};

struct HorizonMode {
  enum class Kind { Fixed, Variable };
  Kind kind{Kind::Fixed};
  int k{0};  // fixed horizon multiplier, or max_k when variable

  static HorizonMode fixed(int k) { return {Kind::Fixed, k}; }
  static HorizonMode variable(int max_k) { return {Kind::Variable, max_k}; }
};

struct CapacityRule {
  enum class Kind { Fraction, Unbounded };
  Kind kind{Kind::Fraction};
  double fraction{1.0 / 3.0};

  static CapacityRule fraction_of_tasks(double f) { return {Kind::Fraction, f}; }
  static CapacityRule unbounded() { return {Kind::Unbounded, 0.0}; }

  // per-agent slot count for a window with n_tasks requests
  int capacity_for(int n_tasks) const {
    if (n_tasks <= 0) return 0;
    if (kind == Kind::Unbounded) return n_tasks;
    return static_cast<int>(std::ceil(fraction * n_tasks));
  }
};

struct GABudget {
  enum class Kind { WallClock, Generations };
  Kind kind{Kind::WallClock};
  int generations{300};
  double wall_seconds{0};  // 0 means "use the window duration"

  static GABudget wall_clock(double seconds = 0) {
    return {Kind::WallClock, 0, seconds};
  }
  static GABudget fixed_generations(int n) {
    return {Kind::Generations, n, 0};
  }
};

struct GAParams {
  int population_size{100};
  double p_muta{0.3};
  double p_swap{0.5};
  double epsilon{1e-6};
  GABudget budget{GABudget::wall_clock()};

  static constexpr double kEliteFraction = 0.30;

  int elite_count() const {
    int n = static_cast<int>(kEliteFraction * population_size);
    return n < 2 ? 2 : n;
  }

  void validate() const;
};

struct SimConfig {
  double delta{5.0};
  int total_windows{30};
  double alpha{0.75};
  HorizonMode horizon;
  CapacityRule capacity;
  MetricSpace space{MetricSpace::Planar};
  std::uint64_t rng_seed{1};
  GAParams ga;

  void validate() const;
};

inline int window_of(double registered_at, double delta) {
  return static_cast<int>(std::floor(registered_at / delta));
}

}  // namespace rhd
