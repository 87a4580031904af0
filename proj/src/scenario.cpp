#include "rhd/scenario.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rhd/rng.hpp"

namespace rhd {

void Scenario::validate() const {
  for (const Agent& a : agents) {
    check_location(a.position, space);
    if (a.velocity <= 0) throw std::invalid_argument("agent velocity must be > 0");
  }
  for (const Request& r : requests) {
    check_location(r.pickup, space);
    const bool has_dropoff = r.dropoff.has_value();
    if (has_dropoff != (variant == CostVariant::PickupDropoff)) {
      throw std::invalid_argument(
          "request dropoff presence inconsistent with scenario variant");
    }
    if (has_dropoff) check_location(*r.dropoff, space);
  }
  if (!std::is_sorted(requests.begin(), requests.end(),
                      [](const Request& a, const Request& b) {
                        return a.registered_at < b.registered_at ||
                               (a.registered_at == b.registered_at && a.id < b.id);
                      })) {
    throw std::invalid_argument("scenario requests must be time-ordered");
  }
}

void SyntheticSpec::validate() const {
  if (world_w <= 0 || world_h <= 0) throw std::invalid_argument("world must be positive");
  if (n_agents < 1) throw std::invalid_argument("n_agents must be >= 1");
  if (tasks_per_window < 1) throw std::invalid_argument("tasks_per_window must be >= 1");
  if (total_windows < 1) throw std::invalid_argument("total_windows must be >= 1");
  if (velocity <= 0) throw std::invalid_argument("velocity must be > 0");
  if (travel_budget <= 0) throw std::invalid_argument("travel_budget must be > 0");
}

Scenario generate_synthetic(const SyntheticSpec& spec, double delta) {
  spec.validate();
  Rng rng(spec.rng_seed);
  Scenario sc;
  sc.space = MetricSpace::Planar;
  sc.variant = CostVariant::ReachOnly;

  sc.agents.reserve(spec.n_agents);
  for (int i = 0; i < spec.n_agents; ++i) {
    Agent a;
    a.id = i;
    a.position = {rng.uniform_real(0, spec.world_w), rng.uniform_real(0, spec.world_h)};
    a.velocity = spec.velocity;
    a.travel_budget = spec.travel_budget;
    sc.agents.push_back(a);
  }

  RequestIdSource ids;
  sc.requests.reserve(static_cast<std::size_t>(spec.tasks_per_window) *
                      spec.total_windows);
  for (int w = 0; w < spec.total_windows; ++w) {
    for (int i = 0; i < spec.tasks_per_window; ++i) {
      Location pickup{rng.uniform_real(0, spec.world_w),
                      rng.uniform_real(0, spec.world_h)};
      sc.requests.push_back(
          new_request(pickup, std::nullopt, w * delta, delta, sc.space, ids));
    }
  }
  return sc;
}

namespace {

std::string fmt_double(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& tok) {
  if (tok == "inf" || tok == "unbounded") return kUnboundedBudget;
  std::size_t pos = 0;
  const double v = std::stod(tok, &pos);
  if (pos != tok.size()) throw std::invalid_argument("bad number: " + tok);
  return v;
}

}  // namespace

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "# rhdispatch scenario v1\n";
  out << "space " << (scenario.space == MetricSpace::Planar ? "planar" : "geographic")
      << "\n";
  out << "variant "
      << (scenario.variant == CostVariant::ReachOnly ? "reach" : "pickup_dropoff")
      << "\n";
  for (const Agent& a : scenario.agents) {
    out << "agent " << a.id << ' ' << fmt_double(a.position.x) << ' '
        << fmt_double(a.position.y) << ' ' << fmt_double(a.velocity) << ' '
        << fmt_double(a.travel_budget) << "\n";
  }
  for (const Request& r : scenario.requests) {
    out << "request " << r.id << ' ' << fmt_double(r.registered_at) << ' '
        << fmt_double(r.pickup.x) << ' ' << fmt_double(r.pickup.y);
    if (r.dropoff) {
      out << ' ' << fmt_double(r.dropoff->x) << ' ' << fmt_double(r.dropoff->y);
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Scenario load_scenario(const std::string& path, double delta) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path);
  if (delta <= 0) throw std::invalid_argument("delta must be > 0");

  Scenario sc;
  std::string line;
  int lineno = 0;
  bool variant_set = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    const auto fail = [&](const std::string& why) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
    };
    if (kind == "space") {
      std::string v;
      ss >> v;
      if (v == "planar") sc.space = MetricSpace::Planar;
      else if (v == "geographic") sc.space = MetricSpace::Geographic;
      else fail("unknown space '" + v + "'");
    } else if (kind == "variant") {
      std::string v;
      ss >> v;
      if (v == "reach") sc.variant = CostVariant::ReachOnly;
      else if (v == "pickup_dropoff") sc.variant = CostVariant::PickupDropoff;
      else fail("unknown variant '" + v + "'");
      variant_set = true;
    } else if (kind == "agent") {
      Agent a;
      std::string x, y, vel, budget;
      long id = 0;
      if (!(ss >> id >> x >> y >> vel >> budget)) fail("malformed agent line");
      a.id = static_cast<AgentId>(id);
      a.position = {parse_double(x), parse_double(y)};
      a.velocity = parse_double(vel);
      a.travel_budget = parse_double(budget);
      sc.agents.push_back(a);
    } else if (kind == "request") {
      long id = 0;
      std::string t, x, y;
      if (!(ss >> id >> t >> x >> y)) fail("malformed request line");
      Request r;
      r.id = static_cast<RequestId>(id);
      r.registered_at = parse_double(t);
      r.pickup = {parse_double(x), parse_double(y)};
      std::string dx, dy;
      if (ss >> dx) {
        if (!(ss >> dy)) fail("request dropoff needs two coordinates");
        r.dropoff = Location{parse_double(dx), parse_double(dy)};
      }
      if (r.registered_at < 0) fail("registered_at must be >= 0");
      r.registered_window = window_of(r.registered_at, delta);
      sc.requests.push_back(std::move(r));
    } else {
      fail("unknown record '" + kind + "'");
    }
  }
  if (!variant_set && !sc.requests.empty()) {
    sc.variant = sc.requests.front().dropoff ? CostVariant::PickupDropoff
                                             : CostVariant::ReachOnly;
  }
  sc.validate();
  return sc;
}

}  // namespace rhd
