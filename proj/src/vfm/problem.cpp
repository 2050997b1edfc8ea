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

#include "vfm/problem.hpp"

#include <cstdio>

#include "vfm/errors.hpp"
#include "vfm/power.hpp"

namespace vfm {

Assignment all_cloud_assignment(const Instance& instance) {
  Assignment assignment;
  assignment.target.assign(instance.requests.size(), Target::cloud());
  return assignment;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::software_mismatch:
      return "software_mismatch";
    case ViolationKind::vehicle_capacity:
      return "vehicle_capacity";
    case ViolationKind::link_capacity:
      return "link_capacity";
    case ViolationKind::cloud_capacity:
      return "cloud_capacity";
  }
  return "unknown";
}

std::string Violation::to_string() const {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%s on %s: load %g exceeds limit %g",
                vfm::to_string(kind), subject.c_str(), load, limit);
  return buffer;
}

std::vector<Target> feasible_targets(const Request& request,
                                     const Instance& instance) {
  std::vector<Target> targets;
  for (const Vehicle& vehicle : instance.vehicles) {
    if (vehicle.has_software(request.software) &&
        request.demand_mhz <= vehicle.capacity_mhz) {
      targets.push_back(Target::vehicle(vehicle.id));
    }
  }
  targets.push_back(Target::cloud());
  return targets;
}

std::vector<Violation> check_feasible(const Assignment& assignment,
                                      const Instance& instance) {
  if (assignment.target.size() != instance.requests.size()) {
    throw ConfigError("assignment does not cover every request");
  }
  std::vector<Violation> violations;

  std::vector<std::int64_t> vehicle_load(instance.vehicles.size(), 0);
  std::int64_t cloud_load = 0;
  for (const Request& request : instance.requests) {
    const Target target = assignment.target[static_cast<std::size_t>(
        request.id)];
    if (target.is_cloud()) {
      cloud_load += request.demand_mhz;
      continue;
    }
    const auto v = static_cast<std::size_t>(target.vehicle_id());
    if (v >= instance.vehicles.size()) {
      throw ConfigError("assignment references vehicle " +
                        std::to_string(target.vehicle_id()) +
                        " outside the fleet");
    }
    vehicle_load[v] += request.demand_mhz;
    if (!instance.vehicles[v].has_software(request.software)) {
      violations.push_back(Violation{
          ViolationKind::software_mismatch,
          "vehicle:" + std::to_string(target.vehicle_id()) +
              " request:" + std::to_string(request.id),
          1.0, 0.0});
    }
  }

  for (const Vehicle& vehicle : instance.vehicles) {
    const std::int64_t load = vehicle_load[static_cast<std::size_t>(
        vehicle.id)];
    if (load > vehicle.capacity_mhz) {
      violations.push_back(Violation{
          ViolationKind::vehicle_capacity,
          "vehicle:" + std::to_string(vehicle.id),
          static_cast<double>(load),
          static_cast<double>(vehicle.capacity_mhz)});
    }
  }

  for (const CapacityGroup& group : instance.paths.capacity_groups) {
    const bool counts_fog = group_applies(group, instance.paths, false);
    const bool counts_cloud = group_applies(group, instance.paths, true);
    std::int64_t load_bps = 0;
    for (const Request& request : instance.requests) {
      const bool cloud_bound =
          assignment.target[static_cast<std::size_t>(request.id)].is_cloud();
      if (cloud_bound ? counts_cloud : counts_fog) {
        load_bps += request.data_rate_bps;
      }
    }
    if (load_bps > group.capacity_bps) {
      violations.push_back(Violation{
          ViolationKind::link_capacity, group.name,
          static_cast<double>(load_bps) / kBitsPerMbps,
          static_cast<double>(group.capacity_bps) / kBitsPerMbps});
    }
  }

  if (cloud_load > instance.cloud.total_capacity_mhz()) {
    violations.push_back(Violation{
        ViolationKind::cloud_capacity, "cloud",
        static_cast<double>(cloud_load),
        static_cast<double>(instance.cloud.total_capacity_mhz())});
  }
  return violations;
}

double objective(const Assignment& assignment, const Instance& instance) {
  if (assignment.target.size() != instance.requests.size()) {
    throw ConfigError("assignment does not cover every request");
  }
  double total = 0.0;
  for (const Request& request : instance.requests) {
    total += request_power(
        request, assignment.target[static_cast<std::size_t>(request.id)],
        instance);
  }
  return total;
}

Metrics metrics(const Assignment& assignment, const Instance& instance) {
  if (assignment.target.size() != instance.requests.size()) {
    throw ConfigError("assignment does not cover every request");
  }
  Metrics m;
  for (const Request& request : instance.requests) {
    const Target target =
        assignment.target[static_cast<std::size_t>(request.id)];
    m.network_power_w += network_power(request, target, instance.paths);
    m.processing_power_w += processing_power(request, target, instance);
    if (target.is_cloud()) {
      m.cloud_workload_mhz += request.demand_mhz;
      m.cloud_request_count += 1;
    } else {
      m.fog_workload_mhz += request.demand_mhz;
      m.fog_request_count += 1;
    }
  }
  m.total_power_w = m.network_power_w + m.processing_power_w;
  return m;
}

}  // namespace vfm
