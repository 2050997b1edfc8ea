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

// Per-request power formulas: network power is the request's bit rate times
// the summed energy-per-bit of every device on its chain; processing power
// is the demand times the serving unit's energy per MHz.

#ifndef VFM_POWER_HPP
#define VFM_POWER_HPP

#include "vfm/types.hpp"

namespace vfm {

/// Rated power spread over rated throughput, J/bit. Throws ConfigError when
/// capacity is not positive.
double energy_per_bit(const DeviceSpec& device);

/// Sum of energy_per_bit over a device chain.
double chain_delta(const std::vector<DeviceSpec>& chain);

/// Watts drawn from the network by routing this request to the target.
double network_power(const Request& request, Target target,
                     const PathModel& paths);

/// Watts drawn by processing this request at the target.
double processing_power(const Request& request, Target target,
                        const Instance& instance);

/// network_power + processing_power for one request.
double request_power(const Request& request, Target target,
                     const Instance& instance);

/// True when traffic bound for `target` traverses some device of `group`.
bool group_applies(const CapacityGroup& group, const PathModel& paths,
                   bool cloud_target);

/// Resolves a PathConfig against a CloudSpec into concrete device chains and
/// groups; materializes the reserved cloud_transport device. Throws
/// ConfigError on dangling names or invalid device parameters.
PathModel resolve_paths(const PathConfig& config, const CloudSpec& cloud);

}  // namespace vfm

#endif  // VFM_POWER_HPP
