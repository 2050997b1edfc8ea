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

// Domain types for the software-matching offloading problem.
//
// Unit conventions (kept exact so feasibility never depends on floating
// point): processing quantities are integer MHz, traffic quantities are
// integer bit/s, power is double watts. The request/demand proportionality
// constant alpha is an integer number of bit/s per MHz, i.e. an exact
// decimal with Mbps resolution of 1e-6.

#ifndef VFM_TYPES_HPP
#define VFM_TYPES_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace vfm {

using SoftwareId = std::int32_t;

constexpr std::int64_t kBitsPerMbps = 1'000'000;

/// A user task: processing demand, derived traffic, and the software
/// package it requires.
struct Request {
  std::int32_t id = 0;
  std::int64_t demand_mhz = 0;
  std::int64_t data_rate_bps = 0;  // alpha_bps_per_mhz * demand_mhz, exact
  SoftwareId software = 0;

  double data_rate_mbps() const {
    return static_cast<double>(data_rate_bps) / kBitsPerMbps;
  }
  friend bool operator==(const Request&, const Request&) = default;
};

/// A fog node: one parked vehicle's on-board compute unit.
struct Vehicle {
  std::int32_t id = 0;
  std::int64_t capacity_mhz = 240;
  double energy_per_mhz = 3.6 / 240.0;  // W per MHz of load
  std::vector<SoftwareId> installed;    // sorted, unique

  bool has_software(SoftwareId s) const;
  friend bool operator==(const Vehicle&, const Vehicle&) = default;
};

/// A network device on one of the forwarding chains. Energy per bit is the
/// rated power spread over the rated throughput.
struct DeviceSpec {
  std::string name;
  std::int64_t capacity_bps = 0;
  double power_w = 0.0;

  double capacity_mbps() const {
    return static_cast<double>(capacity_bps) / kBitsPerMbps;
  }
  friend bool operator==(const DeviceSpec&, const DeviceSpec&) = default;
};

/// A shared throughput budget over a set of devices; the traffic of every
/// request whose chain touches any member counts against the capacity.
struct CapacityGroup {
  std::string name;
  std::int64_t capacity_bps = 0;
  std::vector<std::string> devices;

  friend bool operator==(const CapacityGroup&, const CapacityGroup&) = default;
};

/// Central cloud servers plus the aggregated optical transport reaching them.
struct CloudSpec {
  std::int64_t server_capacity_mhz = 4000;
  double server_power_w = 300.0;
  std::int32_t server_count = 4;
  double transport_delta_j_per_bit = 3.0e-7;
  std::int64_t transport_capacity_bps = 10'000 * kBitsPerMbps;

  double energy_per_mhz() const {
    return server_power_w / static_cast<double>(server_capacity_mhz);
  }
  std::int64_t total_capacity_mhz() const {
    return static_cast<std::int64_t>(server_count) * server_capacity_mhz;
  }
  friend bool operator==(const CloudSpec&, const CloudSpec&) = default;
};

/// Where a request runs: one vehicle or the central cloud.
class Target {
 public:
  Target() : id_(kCloudId) {}
  static Target cloud() { return Target(kCloudId); }
  static Target vehicle(std::int32_t id) { return Target(id); }

  bool is_cloud() const { return id_ == kCloudId; }
  bool is_vehicle() const { return id_ != kCloudId; }
  std::int32_t vehicle_id() const { return id_; }

  /// Canonical order: vehicles by ascending id, cloud last.
  std::int32_t rank() const {
    return is_cloud() ? std::numeric_limits<std::int32_t>::max() : id_;
  }

  std::string to_string() const;
  friend bool operator==(const Target&, const Target&) = default;

 private:
  explicit Target(std::int32_t id) : id_(id) {}
  static constexpr std::int32_t kCloudId = -1;
  std::int32_t id_;
};

/// Device chains and shared-capacity groups. Every request traverses the
/// shared chain; fog-bound requests add the fog chain, cloud-bound requests
/// the cloud chain.
struct PathModel {
  std::vector<DeviceSpec> shared_devices;
  std::vector<DeviceSpec> fog_devices;
  std::vector<DeviceSpec> cloud_devices;
  std::vector<CapacityGroup> capacity_groups;

  friend bool operator==(const PathModel&, const PathModel&) = default;
};

/// Unresolved path configuration: device definitions plus chains and groups
/// referencing them by name. The reserved device name "cloud_transport" is
/// materialized from the CloudSpec when an Instance is built.
struct PathConfig {
  std::vector<DeviceSpec> devices;
  std::vector<std::string> shared_chain;
  std::vector<std::string> fog_chain;
  std::vector<std::string> cloud_chain;
  std::vector<CapacityGroup> groups;  // empty = built-in defaults

  static PathConfig defaults();
  friend bool operator==(const PathConfig&, const PathConfig&) = default;
};

inline constexpr const char* kCloudTransportName = "cloud_transport";

/// Full scenario description: generator parameters plus the power/path model.
struct ScenarioConfig {
  std::int32_t request_count = 50;
  std::int64_t demand_min_mhz = 100;
  std::int64_t demand_max_mhz = 300;
  std::int64_t alpha_bps_per_mhz = 8000;  // 0.008 Mbps per MHz
  std::int32_t software_library_size = 10;
  std::int32_t vehicle_count = 20;
  std::int32_t packages_per_vehicle = 4;
  std::int64_t vehicle_capacity_mhz = 240;
  double obu_power_w = 3.6;
  std::uint64_t seed = 1;
  CloudSpec cloud;
  PathConfig paths = PathConfig::defaults();

  /// Throws ConfigError if any field is out of range.
  void validate() const;
  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) =
      default;
};

/// Complete immutable problem: treat as read-only after construction.
struct Instance {
  std::vector<Request> requests;
  std::vector<Vehicle> vehicles;
  PathModel paths;
  CloudSpec cloud;
  ScenarioConfig config;  // provenance echo

  std::int64_t total_demand_mhz() const;
  std::int64_t total_data_rate_bps() const;
  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace vfm

#endif  // VFM_TYPES_HPP
