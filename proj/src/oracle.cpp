#include "rhd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace rhd {

namespace {

constexpr int kMaxTasks = 8;
constexpr int kMaxAgents = 3;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct PathTables {
  int nt;
  std::vector<double> d0;   // agent x task: start -> pickup
  std::vector<double> db;   // task x task: end of i -> pickup of j
  std::vector<double> svc;  // pickup -> dropoff, 0 for reach-only
};

PathTables build_tables(std::span<const Request> tasks,
                        std::span<const AvailableAgent> agents,
                        CostVariant variant, MetricSpace space) {
  PathTables t;
  t.nt = static_cast<int>(tasks.size());
  t.d0.resize(agents.size() * tasks.size());
  t.db.resize(tasks.size() * tasks.size());
  t.svc.assign(tasks.size(), 0.0);
  for (std::size_t a = 0; a < agents.size(); ++a) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      t.d0[a * tasks.size() + i] = distance(agents[a].start, tasks[i].pickup, space);
    }
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    Location end_i = tasks[i].pickup;
    if (variant == CostVariant::PickupDropoff) {
      if (!tasks[i].dropoff) {
        throw std::invalid_argument("pickup/dropoff oracle needs dropoffs");
      }
      end_i = *tasks[i].dropoff;
      t.svc[i] = distance(tasks[i].pickup, *tasks[i].dropoff, space);
    }
    for (std::size_t j = 0; j < tasks.size(); ++j) {
      t.db[i * tasks.size() + j] = distance(end_i, tasks[j].pickup, space);
    }
  }
  return t;
}

// Held-Karp over subsets: cheapest open path through `mask` from one agent's
// start, plus the order achieving it.
struct SubsetPaths {
  std::vector<double> best;                 // per mask
  std::vector<std::vector<double>> dp;      // mask x last
  std::vector<std::vector<int>> parent;     // mask x last

  void build(const PathTables& t, int agent) {
    const int nt = t.nt;
    const int n_masks = 1 << nt;
    best.assign(n_masks, 0.0);
    dp.assign(n_masks, std::vector<double>(nt, kInf));
    parent.assign(n_masks, std::vector<int>(nt, -1));
    for (int mask = 1; mask < n_masks; ++mask) {
      for (int last = 0; last < nt; ++last) {
        if (!(mask & (1 << last))) continue;
        const int rest = mask ^ (1 << last);
        if (rest == 0) {
          dp[mask][last] = t.d0[agent * nt + last] + t.svc[last];
          continue;
        }
        for (int prev = 0; prev < nt; ++prev) {
          if (!(rest & (1 << prev))) continue;
          const double cand = dp[rest][prev] + t.db[prev * nt + last] + t.svc[last];
          if (cand < dp[mask][last]) {
            dp[mask][last] = cand;
            parent[mask][last] = prev;
          }
        }
      }
      double b = kInf;
      for (int last = 0; last < nt; ++last) {
        if ((mask & (1 << last)) && dp[mask][last] < b) b = dp[mask][last];
      }
      best[mask] = b;
    }
  }
};

}  // namespace

OracleResult brute_force(std::span<const Request> tasks,
                         std::span<const AvailableAgent> agents, int capacity,
                         double alpha, CostVariant variant, MetricSpace space,
                         double l_max) {
  if (tasks.empty()) return {0.0, {}};
  if (static_cast<int>(tasks.size()) > kMaxTasks ||
      static_cast<int>(agents.size()) > kMaxAgents) {
    throw std::invalid_argument("oracle instance too large");
  }
  if (agents.empty()) {
    throw std::invalid_argument("oracle needs at least one agent");
  }
  if (l_max <= 0) {
    throw std::invalid_argument("l_max must be > 0");
  }

  const int nt = static_cast<int>(tasks.size());
  const int na = static_cast<int>(agents.size());
  const PathTables tables = build_tables(tasks, agents, variant, space);

  std::vector<SubsetPaths> paths(na);
  for (int a = 0; a < na; ++a) paths[a].build(tables, a);

  std::vector<int> masks(na, 0), best_masks(na, 0);
  double best_obj = kInf;

  // Assign each task to an agent or to nobody; prune with the capacity bound.
  auto recurse = [&](auto&& self, int task) -> void {
    if (task == nt) {
      double total = 0;
      for (int a = 0; a < na; ++a) total += paths[a].best[masks[a]];
      int assigned = 0;
      for (int a = 0; a < na; ++a) assigned += std::popcount(static_cast<unsigned>(masks[a]));
      const double obj = alpha * total / l_max + (1.0 - alpha) * (nt - assigned);
      if (obj < best_obj) {
        best_obj = obj;
        best_masks = masks;
      }
      return;
    }
    self(self, task + 1);  // leave unassigned
    for (int a = 0; a < na; ++a) {
      if (std::popcount(static_cast<unsigned>(masks[a])) >= capacity) continue;
      masks[a] |= 1 << task;
      self(self, task + 1);
      masks[a] &= ~(1 << task);
    }
  };
  recurse(recurse, 0);

  OracleResult result;
  result.objective = best_obj;
  for (int a = 0; a < na; ++a) {
    const int mask = best_masks[a];
    if (mask == 0) continue;
    // walk the dp parents back from the best last task
    int last = -1;
    double b = kInf;
    for (int i = 0; i < nt; ++i) {
      if ((mask & (1 << i)) && paths[a].dp[mask][i] < b) {
        b = paths[a].dp[mask][i];
        last = i;
      }
    }
    std::vector<RequestId> order;
    int m = mask;
    while (last >= 0) {
      order.push_back(tasks[last].id);
      const int prev = paths[a].parent[m][last];
      m ^= 1 << last;
      last = prev;
    }
    std::reverse(order.begin(), order.end());
    result.solution.assigned += static_cast<int>(order.size());
    result.solution.entries.push_back({agents[a].id, std::move(order)});
  }
  return result;
}

OracleResult brute_force(const GAProblem& problem, double l_max) {
  return brute_force(problem.tasks(), problem.agents(), problem.capacity(),
                     problem.alpha(), problem.variant(), problem.space(), l_max);
}

double oracle_objective(const WindowSolution& solution,
                        std::span<const Request> tasks,
                        std::span<const AvailableAgent> agents, double alpha,
                        CostVariant variant, MetricSpace space, double l_max) {
  std::vector<Request> ordered;
  double total = 0;
  int assigned = 0;
  for (const auto& entry : solution.entries) {
    const AvailableAgent* agent = nullptr;
    for (const AvailableAgent& a : agents) {
      if (a.id == entry.agent_id) {
        agent = &a;
        break;
      }
    }
    if (!agent) throw std::invalid_argument("solution references unknown agent");
    ordered.clear();
    for (RequestId id : entry.requests) {
      const Request* req = nullptr;
      for (const Request& r : tasks) {
        if (r.id == id) {
          req = &r;
          break;
        }
      }
      if (!req) throw std::invalid_argument("solution references unknown request");
      ordered.push_back(*req);
    }
    assigned += static_cast<int>(ordered.size());
    total += path_length(agent->start, ordered, variant, space);
  }
  return alpha * total / l_max +
         (1.0 - alpha) * (static_cast<double>(tasks.size()) - assigned);
}

}  // namespace rhd
