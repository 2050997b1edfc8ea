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

// Three interchangeable solvers over the assignment problem:
//
//   brute  — exhaustive enumeration, the verification oracle
//   exact  — deterministic depth-first branch-and-bound
//   greedy — descending-demand cheapest-fit heuristic, also the incumbent
//            seeder for exact
//
// All three are deterministic: the same instance always yields the same
// assignment. Objective ties in exact and brute resolve to the first
// candidate in the documented exploration order.

#ifndef VFM_SOLVER_HPP
#define VFM_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vfm/problem.hpp"
#include "vfm/types.hpp"

namespace vfm {

enum class SolverKind { exact, greedy, brute };

const char* to_string(SolverKind kind);
/// Throws ConfigError for anything but "exact", "greedy", "brute".
SolverKind solver_from_string(const std::string& name);

struct Solution {
  Assignment assignment;
  double objective_w = 0.0;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> runtime{0.0};
};

/// Search state: a partial decision vector plus the residual capacities and
/// accumulated cost implied by it.
struct PartialAssignment {
  std::vector<std::optional<Target>> decided;       // by request id
  std::vector<std::int64_t> vehicle_residual_mhz;   // by vehicle id
  std::vector<std::int64_t> group_residual_bps;     // by group index
  std::int64_t cloud_residual_mhz = 0;
  double accumulated_cost_w = 0.0;

  static PartialAssignment root(const Instance& instance);

  /// Residual-capacity check for adding this request to the target.
  bool fits(const Instance& instance, const Request& request,
            Target target) const;

  /// Decides one request; residuals and accumulated cost follow.
  void assign(const Instance& instance, std::int32_t request_id,
              Target target);
};

/// Admissible bound: accumulated cost plus each undecided request's cheapest
/// statically feasible per-request power, ignoring all capacity coupling.
/// Never exceeds the objective of any feasible completion.
double lower_bound(const PartialAssignment& partial, const Instance& instance);

/// Enumerates every total assignment in lexicographic target order, keeps
/// the cheapest feasible one. Refuses with SizeError when the product of
/// per-request candidate counts exceeds node_budget. Throws
/// InfeasibleInstanceError when nothing is feasible.
Solution solve_brute(const Instance& instance,
                     std::uint64_t node_budget = 10'000'000);

/// Requests in descending demand order each take the cheapest target that
/// still fits; cloud is the usual fallback. Throws InfeasibleInstanceError
/// when some request fits nowhere.
Solution solve_greedy(const Instance& instance);

/// Depth-first branch-and-bound seeded with the greedy incumbent. Matches
/// solve_brute's objective within 1e-9 relative on anything brute can
/// enumerate. Returns optimal=true iff the search completed within the time
/// budget; otherwise the best assignment found so far with optimal=false.
Solution solve_exact(const Instance& instance,
                     std::chrono::duration<double> time_budget =
                         std::chrono::duration<double>(60.0));

/// Dispatch by kind; node_budget applies to brute, time_budget to exact.
Solution solve(const Instance& instance, SolverKind kind,
               double time_budget_s, std::uint64_t node_budget);

}  // namespace vfm

#endif  // VFM_SOLVER_HPP
