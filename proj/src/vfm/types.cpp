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

#include "vfm/types.hpp"

#include <algorithm>

#include "vfm/errors.hpp"

namespace vfm {

bool Vehicle::has_software(SoftwareId s) const {
  return std::binary_search(installed.begin(), installed.end(), s);
}

std::string Target::to_string() const {
  return is_cloud() ? std::string("cloud")
                    : "vehicle:" + std::to_string(id_);
}

PathConfig PathConfig::defaults() {
  PathConfig config;
  config.devices = {
      DeviceSpec{"rsu", 100 * kBitsPerMbps, 15.5},
      DeviceSpec{"access_point", 800 * kBitsPerMbps, 21.5},
      DeviceSpec{"wireless", 450 * kBitsPerMbps, 0.0},
      DeviceSpec{"obu_nic", 450 * kBitsPerMbps, 0.0},
  };
  config.shared_chain = {"rsu"};
  config.fog_chain = {"access_point", "wireless", "obu_nic"};
  config.cloud_chain = {kCloudTransportName};
  return config;
}

void ScenarioConfig::validate() const {
  if (request_count < 0) {
    throw ConfigError("request_count must be >= 0");
  }
  if (vehicle_count < 0) {
    throw ConfigError("vehicle_count must be >= 0");
  }
  if (demand_min_mhz < 0 || demand_min_mhz > demand_max_mhz) {
    throw ConfigError("demand range invalid: min " +
                      std::to_string(demand_min_mhz) + " > max " +
                      std::to_string(demand_max_mhz));
  }
  if (alpha_bps_per_mhz <= 0) {
    throw ConfigError("alpha must be positive");
  }
  if (software_library_size < 1) {
    throw ConfigError("software_library_size must be >= 1");
  }
  if (packages_per_vehicle < 0 ||
      packages_per_vehicle > software_library_size) {
    throw ConfigError("packages_per_vehicle must lie in [0, " +
                      std::to_string(software_library_size) + "], got " +
                      std::to_string(packages_per_vehicle));
  }
  if (vehicle_capacity_mhz <= 0) {
    throw ConfigError("vehicle_capacity_mhz must be positive");
  }
  if (obu_power_w < 0) {
    throw ConfigError("obu_power_w must be non-negative");
  }
  if (cloud.server_capacity_mhz <= 0) {
    throw ConfigError("cloud server_capacity_mhz must be positive");
  }
  if (cloud.server_power_w < 0) {
    throw ConfigError("cloud server_power_w must be non-negative");
  }
  if (cloud.server_count < 0) {
    throw ConfigError("cloud server_count must be >= 0");
  }
  if (cloud.transport_capacity_bps <= 0) {
    throw ConfigError("cloud transport_capacity_mbps must be positive");
  }
  if (cloud.transport_delta_j_per_bit < 0) {
    throw ConfigError("cloud transport_delta_j_per_bit must be non-negative");
  }
}

std::int64_t Instance::total_demand_mhz() const {
  std::int64_t total = 0;
  for (const Request& request : requests) {
    total += request.demand_mhz;
  }
  return total;
}

std::int64_t Instance::total_data_rate_bps() const {
  std::int64_t total = 0;
  for (const Request& request : requests) {
    total += request.data_rate_bps;
  }
  return total;
}

}  // namespace vfm
