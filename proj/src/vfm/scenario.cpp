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

#include "vfm/scenario.hpp"

#include <algorithm>
#include <numeric>

#include "vfm/errors.hpp"
#include "vfm/power.hpp"
#include "vfm/random.hpp"

namespace vfm {

namespace {

// Independent stream tags so requests do not change when fleet parameters do.
constexpr std::uint64_t kRequestStream = 0x7265717374ULL;
constexpr std::uint64_t kFleetStream = 0x666c656574ULL;

}  // namespace

std::vector<Request> generate_requests(const ScenarioConfig& config) {
  config.validate();
  std::mt19937_64 rng(derive_seed(config.seed, kRequestStream));
  std::vector<Request> requests;
  requests.reserve(static_cast<std::size_t>(config.request_count));
  for (std::int32_t i = 0; i < config.request_count; ++i) {
    Request request;
    request.id = i;
    request.demand_mhz =
        uniform_int(rng, config.demand_min_mhz, config.demand_max_mhz);
    request.software = static_cast<SoftwareId>(uniform_below(
        rng, static_cast<std::uint64_t>(config.software_library_size)));
    request.data_rate_bps = config.alpha_bps_per_mhz * request.demand_mhz;
    requests.push_back(request);
  }
  return requests;
}

std::vector<Vehicle> generate_fleet(const ScenarioConfig& config) {
  config.validate();
  const std::int32_t library_size = config.software_library_size;

  std::vector<SoftwareId> permutation(static_cast<std::size_t>(library_size));
  std::iota(permutation.begin(), permutation.end(), 0);
  std::mt19937_64 rng(derive_seed(config.seed, kFleetStream));
  deterministic_shuffle(permutation, rng);

  std::vector<Vehicle> fleet;
  fleet.reserve(static_cast<std::size_t>(config.vehicle_count));
  for (std::int32_t v = 0; v < config.vehicle_count; ++v) {
    Vehicle vehicle;
    vehicle.id = v;
    vehicle.capacity_mhz = config.vehicle_capacity_mhz;
    vehicle.energy_per_mhz =
        config.obu_power_w / static_cast<double>(config.vehicle_capacity_mhz);
    vehicle.installed.reserve(
        static_cast<std::size_t>(config.packages_per_vehicle));
    for (std::int32_t j = 0; j < config.packages_per_vehicle; ++j) {
      vehicle.installed.push_back(
          permutation[static_cast<std::size_t>((v + j) % library_size)]);
    }
    std::sort(vehicle.installed.begin(), vehicle.installed.end());
    fleet.push_back(std::move(vehicle));
  }
  return fleet;
}

Instance build_instance(const ScenarioConfig& config) {
  config.validate();
  Instance instance;
  instance.requests = generate_requests(config);
  instance.vehicles = generate_fleet(config);
  instance.paths = resolve_paths(config.paths, config.cloud);
  instance.cloud = config.cloud;
  instance.config = config;
  return instance;
}

}  // namespace vfm
