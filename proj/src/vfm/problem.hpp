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

// The capacitated assignment problem over an Instance: decision space,
// feasibility checking, objective, and metrics. All capacity sums are exact
// integer arithmetic (MHz and bit/s); only power is floating point.

#ifndef VFM_PROBLEM_HPP
#define VFM_PROBLEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vfm/types.hpp"

namespace vfm {

/// Total map: target[i] is where request id i runs.
struct Assignment {
  std::vector<Target> target;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Builds the assignment sending every request to the cloud.
Assignment all_cloud_assignment(const Instance& instance);

enum class ViolationKind {
  software_mismatch,
  vehicle_capacity,
  link_capacity,
  cloud_capacity,
};

const char* to_string(ViolationKind kind);

/// One broken constraint: load exceeded limit on the named subject.
struct Violation {
  ViolationKind kind;
  std::string subject;
  double load;
  double limit;

  std::string to_string() const;
};

/// Aggregate power and workload figures for one assignment.
struct Metrics {
  double total_power_w = 0.0;
  double network_power_w = 0.0;
  double processing_power_w = 0.0;
  std::int64_t cloud_workload_mhz = 0;
  std::int64_t fog_workload_mhz = 0;
  std::int64_t cloud_request_count = 0;
  std::int64_t fog_request_count = 0;
};

/// Targets this request could use in isolation: every matching vehicle with
/// enough rated capacity (ascending id), then the cloud. Capacity coupling
/// with other requests is not considered here.
std::vector<Target> feasible_targets(const Request& request,
                                     const Instance& instance);

/// All violated constraints of a total assignment; empty means feasible.
/// Checked families: software matching, per-vehicle processing capacity,
/// per-group link capacity, aggregate cloud processing capacity.
std::vector<Violation> check_feasible(const Assignment& assignment,
                                      const Instance& instance);

/// Total power in watts, summed per request in id order. Feasibility is not
/// required; the objective is evaluated inside search too.
double objective(const Assignment& assignment, const Instance& instance);

/// Power split and workload partition; cloud + fog workload always equals
/// the instance's total demand.
Metrics metrics(const Assignment& assignment, const Instance& instance);

}  // namespace vfm

#endif  // VFM_PROBLEM_HPP
