// Copyright 2026 The vfogmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vfm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "vfm/errors.hpp"
#include "vfm/power.hpp"

namespace vfm {

namespace {

constexpr double kPruneEpsilonW = 1e-9;

using Clock = std::chrono::steady_clock;

/// Per-group applicability, computed once per instance.
struct GroupUsage {
  std::vector<std::uint8_t> counts_fog;
  std::vector<std::uint8_t> counts_cloud;

  explicit GroupUsage(const Instance& instance) {
    const auto& groups = instance.paths.capacity_groups;
    counts_fog.reserve(groups.size());
    counts_cloud.reserve(groups.size());
    for (const CapacityGroup& group : groups) {
      counts_fog.push_back(group_applies(group, instance.paths, false) ? 1
                                                                       : 0);
      counts_cloud.push_back(group_applies(group, instance.paths, true) ? 1
                                                                        : 0);
    }
  }
};

/// Mutable residual capacities shared by greedy and the exact search.
struct ResidualLedger {
  std::vector<std::int64_t> vehicle_mhz;
  std::vector<std::int64_t> group_bps;
  std::int64_t cloud_mhz = 0;

  ResidualLedger(const Instance& instance) {
    vehicle_mhz.reserve(instance.vehicles.size());
    for (const Vehicle& vehicle : instance.vehicles) {
      vehicle_mhz.push_back(vehicle.capacity_mhz);
    }
    group_bps.reserve(instance.paths.capacity_groups.size());
    for (const CapacityGroup& group : instance.paths.capacity_groups) {
      group_bps.push_back(group.capacity_bps);
    }
    cloud_mhz = instance.cloud.total_capacity_mhz();
  }

  bool fits(const GroupUsage& usage, const Request& request,
            Target target) const {
    const bool cloud_bound = target.is_cloud();
    if (cloud_bound) {
      if (cloud_mhz < request.demand_mhz) {
        return false;
      }
    } else if (vehicle_mhz[static_cast<std::size_t>(target.vehicle_id())] <
               request.demand_mhz) {
      return false;
    }
    for (std::size_t g = 0; g < group_bps.size(); ++g) {
      const bool applies =
          cloud_bound ? usage.counts_cloud[g] != 0 : usage.counts_fog[g] != 0;
      if (applies && group_bps[g] < request.data_rate_bps) {
        return false;
      }
    }
    return true;
  }

  void apply(const GroupUsage& usage, const Request& request, Target target,
             int direction) {
    const bool cloud_bound = target.is_cloud();
    if (cloud_bound) {
      cloud_mhz -= direction * request.demand_mhz;
    } else {
      vehicle_mhz[static_cast<std::size_t>(target.vehicle_id())] -=
          direction * request.demand_mhz;
    }
    for (std::size_t g = 0; g < group_bps.size(); ++g) {
      const bool applies =
          cloud_bound ? usage.counts_cloud[g] != 0 : usage.counts_fog[g] != 0;
      if (applies) {
        group_bps[g] -= direction * request.data_rate_bps;
      }
    }
  }
};

struct Candidate {
  double cost_w;
  Target target;
};

std::vector<Candidate> sorted_candidates(const Request& request,
                                         const Instance& instance) {
  std::vector<Candidate> candidates;
  for (const Target& target : feasible_targets(request, instance)) {
    candidates.push_back(Candidate{request_power(request, target, instance),
                                   target});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.cost_w != b.cost_w) {
                return a.cost_w < b.cost_w;
              }
              return a.target.rank() < b.target.rank();
            });
  return candidates;
}

std::vector<std::int32_t> branching_order(const Instance& instance) {
  std::vector<std::int32_t> order(instance.requests.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    const auto& ra = instance.requests[static_cast<std::size_t>(a)];
    const auto& rb = instance.requests[static_cast<std::size_t>(b)];
    if (ra.demand_mhz != rb.demand_mhz) {
      return ra.demand_mhz > rb.demand_mhz;
    }
    return a < b;
  });
  return order;
}

Assignment assignment_from_targets(std::vector<Target> targets) {
  Assignment assignment;
  assignment.target = std::move(targets);
  return assignment;
}

/// Equivalence classes of interchangeable vehicles (same capacity, same
/// energy rate, same installed set). Two vehicles of one class with equal
/// residual capacity lead to isomorphic subtrees; the search only expands
/// the lowest-id representative.
std::vector<std::int32_t> vehicle_classes(const Instance& instance) {
  std::map<std::tuple<std::int64_t, double, std::vector<SoftwareId>>,
           std::int32_t>
      ids;
  std::vector<std::int32_t> classes;
  classes.reserve(instance.vehicles.size());
  for (const Vehicle& vehicle : instance.vehicles) {
    auto key = std::make_tuple(vehicle.capacity_mhz, vehicle.energy_per_mhz,
                               vehicle.installed);
    auto [it, inserted] =
        ids.emplace(std::move(key), static_cast<std::int32_t>(ids.size()));
    classes.push_back(it->second);
  }
  return classes;
}

struct ExactSearch {
  const Instance& instance;
  GroupUsage usage;
  std::vector<std::int32_t> order;
  std::vector<std::vector<Candidate>> candidates;  // by request id
  std::vector<double> cloud_cost;                  // by request id
  std::vector<double> suffix_min;                  // by position
  std::vector<double> suffix_cloud;                // by position
  std::vector<std::int32_t> vclass;

  // Fractional-knapsack bound data: requests with a cheaper vehicle than the
  // cloud, in decreasing savings-per-MHz order.
  std::vector<std::int32_t> ratio_order;
  std::vector<double> delta;  // by request id, cloud minus best vehicle cost
  std::vector<double> ratio;  // by request id, delta / demand

  ResidualLedger ledger;
  std::vector<Target> chosen;          // by request id
  std::vector<std::uint8_t> decided;   // by request id

  std::vector<Target> best;
  double best_objective = std::numeric_limits<double>::infinity();
  bool has_best = false;

  std::uint64_t nodes = 0;
  bool timed_out = false;
  Clock::time_point deadline;
  std::uint32_t time_check_countdown = 1024;

  explicit ExactSearch(const Instance& inst)
      : instance(inst),
        usage(inst),
        order(branching_order(inst)),
        vclass(vehicle_classes(inst)),
        ledger(inst) {
    const std::size_t n = inst.requests.size();
    candidates.reserve(n);
    cloud_cost.resize(n, 0.0);
    delta.resize(n, 0.0);
    ratio.resize(n, 0.0);
    std::vector<double> static_min(n, 0.0);
    for (std::size_t u = 0; u < n; ++u) {
      const Request& request = inst.requests[u];
      candidates.push_back(sorted_candidates(request, inst));
      double best_vehicle = std::numeric_limits<double>::infinity();
      for (const Candidate& candidate : candidates.back()) {
        if (candidate.target.is_cloud()) {
          cloud_cost[u] = candidate.cost_w;
        } else {
          best_vehicle = std::min(best_vehicle, candidate.cost_w);
        }
      }
      static_min[u] = candidates.back().front().cost_w;
      if (request.demand_mhz > 0 && best_vehicle < cloud_cost[u]) {
        delta[u] = cloud_cost[u] - best_vehicle;
        ratio[u] = delta[u] / static_cast<double>(request.demand_mhz);
        ratio_order.push_back(static_cast<std::int32_t>(u));
      }
    }
    std::sort(ratio_order.begin(), ratio_order.end(),
              [&](std::int32_t a, std::int32_t b) {
                const double ra = ratio[static_cast<std::size_t>(a)];
                const double rb = ratio[static_cast<std::size_t>(b)];
                if (ra != rb) {
                  return ra > rb;
                }
                return a < b;
              });
    suffix_min.assign(n + 1, 0.0);
    suffix_cloud.assign(n + 1, 0.0);
    for (std::size_t pos = n; pos-- > 0;) {
      const auto u = static_cast<std::size_t>(order[pos]);
      suffix_min[pos] = suffix_min[pos + 1] + static_min[u];
      suffix_cloud[pos] = suffix_cloud[pos + 1] + cloud_cost[u];
    }
    chosen.assign(n, Target::cloud());
    decided.assign(n, 0);
  }

  /// max(spec bound, capacity-aware fractional bound) for the subtree at
  /// `pos` with accumulated cost `acc`. Both parts are admissible; the
  /// fractional part relaxes per-vehicle granularity and software matching
  /// but respects total residual fog capacity.
  double bound(std::size_t pos, double acc) const {
    const double plain = acc + suffix_min[pos];

    std::int64_t min_eligible = std::numeric_limits<std::int64_t>::max();
    for (const std::int32_t id : ratio_order) {
      if (decided[static_cast<std::size_t>(id)] == 0) {
        min_eligible =
            std::min(min_eligible,
                     instance.requests[static_cast<std::size_t>(id)]
                         .demand_mhz);
      }
    }
    if (min_eligible == std::numeric_limits<std::int64_t>::max()) {
      return std::max(plain, acc + suffix_cloud[pos]);
    }
    std::int64_t capacity = 0;
    for (const std::int64_t residual : ledger.vehicle_mhz) {
      if (residual >= min_eligible) {
        capacity += residual;
      }
    }
    double savings = 0.0;
    std::int64_t remaining = capacity;
    for (const std::int32_t id : ratio_order) {
      if (remaining <= 0) {
        break;
      }
      const auto u = static_cast<std::size_t>(id);
      if (decided[u] != 0) {
        continue;
      }
      const std::int64_t take =
          std::min(remaining, instance.requests[u].demand_mhz);
      savings += ratio[u] * static_cast<double>(take);
      remaining -= take;
    }
    return std::max(plain, acc + suffix_cloud[pos] - savings);
  }

  bool out_of_time() {
    if (--time_check_countdown == 0) {
      time_check_countdown = 1024;
      if (Clock::now() >= deadline) {
        timed_out = true;
      }
    }
    return timed_out;
  }

  void dfs(std::size_t pos, double acc) {
    if (timed_out) {
      return;
    }
    if (pos == order.size()) {
      const double objective_w =
          objective(assignment_from_targets(chosen), instance);
      if (!has_best || objective_w < best_objective) {
        best = chosen;
        best_objective = objective_w;
        has_best = true;
      }
      return;
    }
    if (has_best && bound(pos, acc) >= best_objective - kPruneEpsilonW) {
      return;
    }
    if (out_of_time()) {
      return;
    }

    const auto u = static_cast<std::size_t>(order[pos]);
    const Request& request = instance.requests[u];

    // (class, residual) pairs already expanded at this node.
    std::vector<std::pair<std::int32_t, std::int64_t>> expanded;
    for (const Candidate& candidate : candidates[u]) {
      const Target target = candidate.target;
      if (!ledger.fits(usage, request, target)) {
        continue;
      }
      if (target.is_vehicle()) {
        const auto v = static_cast<std::size_t>(target.vehicle_id());
        const std::pair<std::int32_t, std::int64_t> state{
            vclass[v], ledger.vehicle_mhz[v]};
        if (std::find(expanded.begin(), expanded.end(), state) !=
            expanded.end()) {
          continue;
        }
        expanded.push_back(state);
      }
      ledger.apply(usage, request, target, 1);
      chosen[u] = target;
      decided[u] = 1;
      ++nodes;
      dfs(pos + 1, acc + candidate.cost_w);
      decided[u] = 0;
      ledger.apply(usage, request, target, -1);
      if (timed_out) {
        return;
      }
    }
  }
};

}  // namespace

const char* to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::exact:
      return "exact";
    case SolverKind::greedy:
      return "greedy";
    case SolverKind::brute:
      return "brute";
  }
  return "unknown";
}

SolverKind solver_from_string(const std::string& name) {
  if (name == "exact") {
    return SolverKind::exact;
  }
  if (name == "greedy") {
    return SolverKind::greedy;
  }
  if (name == "brute") {
    return SolverKind::brute;
  }
  throw ConfigError("unknown solver '" + name +
                    "' (valid: exact, greedy, brute)");
}

PartialAssignment PartialAssignment::root(const Instance& instance) {
  PartialAssignment partial;
  partial.decided.assign(instance.requests.size(), std::nullopt);
  for (const Vehicle& vehicle : instance.vehicles) {
    partial.vehicle_residual_mhz.push_back(vehicle.capacity_mhz);
  }
  for (const CapacityGroup& group : instance.paths.capacity_groups) {
    partial.group_residual_bps.push_back(group.capacity_bps);
  }
  partial.cloud_residual_mhz = instance.cloud.total_capacity_mhz();
  return partial;
}

bool PartialAssignment::fits(const Instance& instance, const Request& request,
                             Target target) const {
  if (target.is_cloud()) {
    if (cloud_residual_mhz < request.demand_mhz) {
      return false;
    }
  } else {
    const auto v = static_cast<std::size_t>(target.vehicle_id());
    if (vehicle_residual_mhz.at(v) < request.demand_mhz) {
      return false;
    }
  }
  for (std::size_t g = 0; g < instance.paths.capacity_groups.size(); ++g) {
    if (group_applies(instance.paths.capacity_groups[g], instance.paths,
                      target.is_cloud()) &&
        group_residual_bps[g] < request.data_rate_bps) {
      return false;
    }
  }
  return true;
}

void PartialAssignment::assign(const Instance& instance,
                               std::int32_t request_id, Target target) {
  const auto u = static_cast<std::size_t>(request_id);
  const Request& request = instance.requests.at(u);
  if (decided.at(u).has_value()) {
    throw ConfigError("request " + std::to_string(request_id) +
                      " is already decided");
  }
  decided[u] = target;
  if (target.is_cloud()) {
    cloud_residual_mhz -= request.demand_mhz;
  } else {
    vehicle_residual_mhz.at(static_cast<std::size_t>(target.vehicle_id())) -=
        request.demand_mhz;
  }
  for (std::size_t g = 0; g < instance.paths.capacity_groups.size(); ++g) {
    if (group_applies(instance.paths.capacity_groups[g], instance.paths,
                      target.is_cloud())) {
      group_residual_bps[g] -= request.data_rate_bps;
    }
  }
  accumulated_cost_w += request_power(request, target, instance);
}

double lower_bound(const PartialAssignment& partial,
                   const Instance& instance) {
  double bound = partial.accumulated_cost_w;
  for (const Request& request : instance.requests) {
    if (partial.decided.at(static_cast<std::size_t>(request.id))
            .has_value()) {
      continue;
    }
    double cheapest = std::numeric_limits<double>::infinity();
    for (const Target& target : feasible_targets(request, instance)) {
      cheapest = std::min(cheapest, request_power(request, target, instance));
    }
    bound += cheapest;
  }
  return bound;
}

Solution solve_brute(const Instance& instance, std::uint64_t node_budget) {
  const auto start = Clock::now();
  const std::size_t n = instance.requests.size();

  std::vector<std::vector<Target>> choices;
  choices.reserve(n);
  std::uint64_t combinations = 1;
  for (const Request& request : instance.requests) {
    choices.push_back(feasible_targets(request, instance));
    const std::uint64_t count = choices.back().size();
    if (combinations > node_budget / std::max<std::uint64_t>(count, 1)) {
      throw SizeError(
          "brute-force enumeration refused: candidate combinations exceed "
          "the node budget of " +
          std::to_string(node_budget));
    }
    combinations *= count;
  }

  Solution solution;
  bool found = false;
  std::vector<std::size_t> index(n, 0);
  std::vector<Target> current(n, Target::cloud());
  std::uint64_t evaluated = 0;
  while (true) {
    for (std::size_t u = 0; u < n; ++u) {
      current[u] = choices[u][index[u]];
    }
    ++evaluated;
    Assignment assignment = assignment_from_targets(current);
    if (check_feasible(assignment, instance).empty()) {
      const double objective_w = objective(assignment, instance);
      // Strict improvement keeps the lexicographically smallest tie.
      if (!found || objective_w < solution.objective_w) {
        solution.assignment = std::move(assignment);
        solution.objective_w = objective_w;
        found = true;
      }
    }
    std::size_t u = n;
    while (u-- > 0) {
      if (++index[u] < choices[u].size()) {
        break;
      }
      index[u] = 0;
      if (u == 0) {
        u = std::numeric_limits<std::size_t>::max();
        break;
      }
    }
    if (n == 0 || u == std::numeric_limits<std::size_t>::max()) {
      break;
    }
  }

  if (!found) {
    throw InfeasibleInstanceError(
        "no feasible assignment exists for this instance");
  }
  solution.optimal = true;
  solution.nodes_explored = evaluated;
  solution.runtime = Clock::now() - start;
  return solution;
}

Solution solve_greedy(const Instance& instance) {
  const auto start = Clock::now();
  const GroupUsage usage(instance);
  ResidualLedger ledger(instance);

  std::vector<Target> chosen(instance.requests.size(), Target::cloud());
  for (const std::int32_t id : branching_order(instance)) {
    const auto u = static_cast<std::size_t>(id);
    const Request& request = instance.requests[u];
    bool placed = false;
    for (const Candidate& candidate : sorted_candidates(request, instance)) {
      if (ledger.fits(usage, request, candidate.target)) {
        ledger.apply(usage, request, candidate.target, 1);
        chosen[u] = candidate.target;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw InfeasibleInstanceError(
          "greedy: no target can absorb request " + std::to_string(id) +
          " (instance infeasible)");
    }
  }

  Solution solution;
  solution.assignment = assignment_from_targets(std::move(chosen));
  solution.objective_w = objective(solution.assignment, instance);
  solution.optimal = false;
  solution.runtime = Clock::now() - start;
  return solution;
}

Solution solve_exact(const Instance& instance,
                     std::chrono::duration<double> time_budget) {
  const auto start = Clock::now();

  ExactSearch search(instance);
  search.deadline =
      start + std::chrono::duration_cast<Clock::duration>(time_budget);

  try {
    const Solution seed = solve_greedy(instance);
    search.best = seed.assignment.target;
    search.best_objective = seed.objective_w;
    search.has_best = true;
  } catch (const InfeasibleInstanceError&) {
    // Greedy's order may dead-end on feasible instances; search decides.
  }

  search.dfs(0, 0.0);

  if (!search.has_best) {
    if (search.timed_out) {
      throw InfeasibleInstanceError(
          "time budget exhausted before any feasible assignment was found "
          "(feasibility undetermined)");
    }
    throw InfeasibleInstanceError(
        "no feasible assignment exists for this instance");
  }

  Solution solution;
  solution.assignment = assignment_from_targets(std::move(search.best));
  solution.objective_w = search.best_objective;
  solution.optimal = !search.timed_out;
  solution.nodes_explored = search.nodes;
  solution.runtime = Clock::now() - start;
  return solution;
}

Solution solve(const Instance& instance, SolverKind kind,
               double time_budget_s, std::uint64_t node_budget) {
  switch (kind) {
    case SolverKind::exact:
      return solve_exact(instance,
                         std::chrono::duration<double>(time_budget_s));
    case SolverKind::greedy:
      return solve_greedy(instance);
    case SolverKind::brute:
      return solve_brute(instance, node_budget);
  }
  throw ConfigError("unknown solver kind");
}

}  // namespace vfm
