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

#include "vfm/power.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "vfm/errors.hpp"

namespace vfm {

double energy_per_bit(const DeviceSpec& device) {
  if (device.capacity_bps <= 0) {
    throw ConfigError("device '" + device.name +
                      "': capacity must be positive");
  }
  return device.power_w / static_cast<double>(device.capacity_bps);
}

double chain_delta(const std::vector<DeviceSpec>& chain) {
  double delta = 0.0;
  for (const DeviceSpec& device : chain) {
    delta += energy_per_bit(device);
  }
  return delta;
}

double network_power(const Request& request, Target target,
                     const PathModel& paths) {
  const double delta =
      chain_delta(paths.shared_devices) +
      (target.is_cloud() ? chain_delta(paths.cloud_devices)
                         : chain_delta(paths.fog_devices));
  return static_cast<double>(request.data_rate_bps) * delta;
}

double processing_power(const Request& request, Target target,
                        const Instance& instance) {
  const double energy_per_mhz =
      target.is_cloud()
          ? instance.cloud.energy_per_mhz()
          : instance.vehicles.at(static_cast<std::size_t>(target.vehicle_id()))
                .energy_per_mhz;
  return static_cast<double>(request.demand_mhz) * energy_per_mhz;
}

double request_power(const Request& request, Target target,
                     const Instance& instance) {
  return network_power(request, target, instance.paths) +
         processing_power(request, target, instance);
}

namespace {

bool chain_has_device(const std::vector<DeviceSpec>& chain,
                      const std::string& name) {
  return std::any_of(chain.begin(), chain.end(),
                     [&](const DeviceSpec& d) { return d.name == name; });
}

}  // namespace

bool group_applies(const CapacityGroup& group, const PathModel& paths,
                   bool cloud_target) {
  for (const std::string& name : group.devices) {
    if (chain_has_device(paths.shared_devices, name)) {
      return true;
    }
    if (cloud_target ? chain_has_device(paths.cloud_devices, name)
                     : chain_has_device(paths.fog_devices, name)) {
      return true;
    }
  }
  return false;
}

PathModel resolve_paths(const PathConfig& config, const CloudSpec& cloud) {
  std::unordered_map<std::string, DeviceSpec> by_name;
  for (const DeviceSpec& device : config.devices) {
    if (device.name == kCloudTransportName) {
      throw ConfigError("device name 'cloud_transport' is reserved");
    }
    if (device.capacity_bps <= 0) {
      throw ConfigError("device '" + device.name +
                        "': capacity must be positive");
    }
    if (device.power_w < 0) {
      throw ConfigError("device '" + device.name +
                        "': power must be non-negative");
    }
    if (!by_name.emplace(device.name, device).second) {
      throw ConfigError("duplicate device '" + device.name + "'");
    }
  }
  DeviceSpec transport;
  transport.name = kCloudTransportName;
  transport.capacity_bps = cloud.transport_capacity_bps;
  transport.power_w = cloud.transport_delta_j_per_bit *
                      static_cast<double>(cloud.transport_capacity_bps);
  by_name.emplace(transport.name, transport);

  auto lookup = [&](const std::string& name) -> const DeviceSpec& {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      throw ConfigError("unknown device '" + name + "' referenced by a path");
    }
    return it->second;
  };

  PathModel model;
  for (const std::string& name : config.shared_chain) {
    model.shared_devices.push_back(lookup(name));
  }
  for (const std::string& name : config.fog_chain) {
    model.fog_devices.push_back(lookup(name));
  }
  for (const std::string& name : config.cloud_chain) {
    model.cloud_devices.push_back(lookup(name));
  }

  std::unordered_set<std::string> on_some_chain;
  for (const auto* chain :
       {&model.shared_devices, &model.fog_devices, &model.cloud_devices}) {
    for (const DeviceSpec& device : *chain) {
      on_some_chain.insert(device.name);
    }
  }

  if (config.groups.empty()) {
    // Built-in groups: one per standard device at its own capacity; the
    // transport group follows the cloud spec.
    for (const char* name : {"rsu", "access_point", "wireless"}) {
      auto it = by_name.find(name);
      if (it != by_name.end() && on_some_chain.count(name) != 0) {
        model.capacity_groups.push_back(
            CapacityGroup{name, it->second.capacity_bps, {name}});
      }
    }
    if (on_some_chain.count(kCloudTransportName) != 0) {
      model.capacity_groups.push_back(CapacityGroup{
          kCloudTransportName, cloud.transport_capacity_bps,
          {kCloudTransportName}});
    }
  } else {
    model.capacity_groups = config.groups;
  }

  for (const CapacityGroup& group : model.capacity_groups) {
    if (group.capacity_bps <= 0) {
      throw ConfigError("capacity group '" + group.name +
                        "': capacity must be positive");
    }
    if (group.devices.empty()) {
      throw ConfigError("capacity group '" + group.name + "' has no devices");
    }
    for (const std::string& name : group.devices) {
      lookup(name);  // must exist
      if (on_some_chain.count(name) == 0) {
        throw ConfigError("capacity group '" + group.name + "' references '" +
                          name + "' which is on no path");
      }
    }
  }
  return model;
}

}  // namespace vfm
