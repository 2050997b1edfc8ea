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

// Seeded scenario generation. Everything is a pure function of
// (config, seed): identical inputs produce bit-identical instances, and the
// installed-package sets of a vehicle are nested as packages_per_vehicle
// grows under a fixed seed.

#ifndef VFM_SCENARIO_HPP
#define VFM_SCENARIO_HPP

#include <vector>

#include "vfm/types.hpp"

namespace vfm {

/// request_count requests with integer demands uniform on
/// [demand_min_mhz, demand_max_mhz], software types uniform over the
/// library, and data_rate = alpha * demand exactly.
std::vector<Request> generate_requests(const ScenarioConfig& config);

/// vehicle_count vehicles. Package layout: one seeded permutation P of the
/// library is drawn, and vehicle v installs the k entries
/// P[(v + j) mod S], j = 0..k-1. First-k prefixes make the sets nested in
/// k; the vehicle-indexed rotation spreads distinct packages across the
/// fleet, so even k = 1 covers the whole library whenever
/// vehicle_count >= S.
std::vector<Vehicle> generate_fleet(const ScenarioConfig& config);

/// Composes requests, fleet, and the resolved path model into an Instance.
Instance build_instance(const ScenarioConfig& config);

}  // namespace vfm

#endif  // VFM_SCENARIO_HPP
