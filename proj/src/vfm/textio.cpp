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

#include "vfm/textio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "vfm/errors.hpp"
#include "vfm/power.hpp"

namespace vfm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split_tokens(std::string_view value) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < value.size()) {
    while (i < value.size() && (value[i] == ' ' || value[i] == '\t')) {
      ++i;
    }
    std::size_t start = i;
    while (i < value.size() && value[i] != ' ' && value[i] != '\t') {
      ++i;
    }
    if (i > start) {
      tokens.emplace_back(value.substr(start, i - start));
    }
  }
  return tokens;
}

struct DocEntry {
  std::string section;
  std::string key;
  std::string value;
  int line_number;
};

struct Document {
  std::vector<DocEntry> entries;
  std::set<std::string> sections;  // headers seen, even when empty
};

Document parse_document(std::string_view text) {
  Document doc;
  std::string section;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": malformed section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      doc.sections.insert(section);
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected 'key = value'");
    }
    if (section.empty()) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": entry before any [section] header");
    }
    doc.entries.push_back(
        DocEntry{section, std::string(trim(line.substr(0, eq))),
                 std::string(trim(line.substr(eq + 1))), line_number});
  }
  return doc;
}

std::int64_t parse_i64(const std::string& token) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid integer '" + token + "'");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid unsigned integer '" + token + "'");
  }
  return value;
}

std::int32_t parse_i32(const std::string& token) {
  const std::int64_t value = parse_i64(token);
  if (value < std::numeric_limits<std::int32_t>::min() ||
      value > std::numeric_limits<std::int32_t>::max()) {
    throw ParseError("integer out of range: '" + token + "'");
  }
  return static_cast<std::int32_t>(value);
}

double parse_f64(const std::string& token) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid number '" + token + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::int64_t parse_mbps_to_bps(const std::string& token) {
  if (token.empty()) {
    throw ParseError("empty rate value");
  }
  if (token.front() == '-') {
    throw ParseError("rate must be non-negative: '" + token + "'");
  }
  if (token.find_first_of("eE") != std::string::npos) {
    const double mbps = parse_f64(token);
    const double bps = mbps * static_cast<double>(kBitsPerMbps);
    if (!(bps >= 0.0) || bps > 9.0e18) {
      throw ParseError("rate out of range: '" + token + "'");
    }
    return std::llround(bps);
  }
  const std::size_t dot = token.find('.');
  const std::string whole = dot == std::string::npos ? token
                                                     : token.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : token.substr(dot + 1);
  if (frac.size() > 6) {
    throw ParseError("rate '" + token +
                     "' has sub-bps precision (at most 6 decimal places)");
  }
  frac.resize(6, '0');
  const std::int64_t whole_part = whole.empty() ? 0 : parse_i64(whole);
  if (whole_part > std::numeric_limits<std::int64_t>::max() / kBitsPerMbps -
                       1) {
    throw ParseError("rate out of range: '" + token + "'");
  }
  return whole_part * kBitsPerMbps + parse_i64(frac);
}

std::string format_bps_as_mbps(std::int64_t bps) {
  return format_double(static_cast<double>(bps) /
                       static_cast<double>(kBitsPerMbps));
}

namespace {

DeviceSpec parse_device_line(const std::string& value) {
  const std::vector<std::string> tokens = split_tokens(value);
  if (tokens.size() != 3) {
    throw ParseError("device line needs '<name> <capacity_mbps> <power_w>', "
                     "got '" +
                     value + "'");
  }
  DeviceSpec device;
  device.name = tokens[0];
  device.capacity_bps = parse_mbps_to_bps(tokens[1]);
  device.power_w = parse_f64(tokens[2]);
  return device;
}

CapacityGroup parse_group_line(const std::string& value) {
  const std::vector<std::string> tokens = split_tokens(value);
  if (tokens.size() < 3) {
    throw ParseError(
        "group line needs '<name> <capacity_mbps> <device> [device...]', "
        "got '" +
        value + "'");
  }
  CapacityGroup group;
  group.name = tokens[0];
  group.capacity_bps = parse_mbps_to_bps(tokens[1]);
  group.devices.assign(tokens.begin() + 2, tokens.end());
  return group;
}

void apply_scenario_key(ScenarioConfig& config, const std::string& key,
                        const std::string& value) {
  if (key == "request_count") {
    config.request_count = parse_i32(value);
  } else if (key == "demand_min_mhz") {
    config.demand_min_mhz = parse_i64(value);
  } else if (key == "demand_max_mhz") {
    config.demand_max_mhz = parse_i64(value);
  } else if (key == "alpha_mbps_per_mhz") {
    config.alpha_bps_per_mhz = parse_mbps_to_bps(value);
  } else if (key == "software_library_size") {
    config.software_library_size = parse_i32(value);
  } else if (key == "vehicle_count") {
    config.vehicle_count = parse_i32(value);
  } else if (key == "packages_per_vehicle") {
    config.packages_per_vehicle = parse_i32(value);
  } else if (key == "vehicle_capacity_mhz") {
    config.vehicle_capacity_mhz = parse_i64(value);
  } else if (key == "obu_power_w") {
    config.obu_power_w = parse_f64(value);
  } else if (key == "seed") {
    config.seed = parse_u64(value);
  } else {
    throw ParseError("unknown [scenario] key '" + key + "'");
  }
}

void apply_cloud_key(ScenarioConfig& config, const std::string& key,
                     const std::string& value) {
  if (key == "server_capacity_mhz") {
    config.cloud.server_capacity_mhz = parse_i64(value);
  } else if (key == "server_power_w") {
    config.cloud.server_power_w = parse_f64(value);
  } else if (key == "server_count") {
    config.cloud.server_count = parse_i32(value);
  } else if (key == "transport_delta_j_per_bit") {
    config.cloud.transport_delta_j_per_bit = parse_f64(value);
  } else if (key == "transport_capacity_mbps") {
    config.cloud.transport_capacity_bps = parse_mbps_to_bps(value);
  } else {
    throw ParseError("unknown [cloud] key '" + key + "'");
  }
}

void apply_paths_key(ScenarioConfig& config, const std::string& key,
                     const std::string& value) {
  if (key == "device") {
    const DeviceSpec device = parse_device_line(value);
    auto it = std::find_if(
        config.paths.devices.begin(), config.paths.devices.end(),
        [&](const DeviceSpec& d) { return d.name == device.name; });
    if (it != config.paths.devices.end()) {
      *it = device;
    } else {
      config.paths.devices.push_back(device);
    }
  } else if (key == "shared_chain") {
    config.paths.shared_chain = split_tokens(value);
  } else if (key == "fog_chain") {
    config.paths.fog_chain = split_tokens(value);
  } else if (key == "cloud_chain") {
    config.paths.cloud_chain = split_tokens(value);
  } else if (key == "group") {
    const CapacityGroup group = parse_group_line(value);
    auto it = std::find_if(
        config.paths.groups.begin(), config.paths.groups.end(),
        [&](const CapacityGroup& g) { return g.name == group.name; });
    if (it != config.paths.groups.end()) {
      *it = group;
    } else {
      config.paths.groups.push_back(group);
    }
  } else {
    throw ParseError("unknown [paths] key '" + key + "'");
  }
}

void apply_config_entry(ScenarioConfig& config, const std::string& section,
                        const std::string& key, const std::string& value) {
  if (section == "scenario") {
    apply_scenario_key(config, key, value);
  } else if (section == "cloud") {
    apply_cloud_key(config, key, value);
  } else if (section == "paths") {
    apply_paths_key(config, key, value);
  } else {
    throw ParseError("unknown section [" + section + "]");
  }
}

}  // namespace

void set_config_key(ScenarioConfig& config, const std::string& dotted_key,
                    const std::string& value) {
  const std::size_t dot = dotted_key.find('.');
  if (dot == std::string::npos) {
    throw ParseError("config key must be '<section>.<key>', got '" +
                     dotted_key + "'");
  }
  apply_config_entry(config, dotted_key.substr(0, dot),
                     dotted_key.substr(dot + 1), value);
}

void config_apply_text(ScenarioConfig& config, std::string_view text) {
  for (const DocEntry& entry : parse_document(text).entries) {
    if (entry.section == "requests" || entry.section == "vehicles") {
      throw ParseError("line " + std::to_string(entry.line_number) +
                       ": [" + entry.section +
                       "] belongs to instance documents, not configs");
    }
    try {
      apply_config_entry(config, entry.section, entry.key, entry.value);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(entry.line_number) + ": " +
                       e.what());
    }
  }
}

namespace {

void append_scenario_section(std::string& out, const ScenarioConfig& config) {
  out += "[scenario]\n";
  out += "request_count = " + std::to_string(config.request_count) + "\n";
  out += "demand_min_mhz = " + std::to_string(config.demand_min_mhz) + "\n";
  out += "demand_max_mhz = " + std::to_string(config.demand_max_mhz) + "\n";
  out += "alpha_mbps_per_mhz = " +
         format_bps_as_mbps(config.alpha_bps_per_mhz) + "\n";
  out += "software_library_size = " +
         std::to_string(config.software_library_size) + "\n";
  out += "vehicle_count = " + std::to_string(config.vehicle_count) + "\n";
  out += "packages_per_vehicle = " +
         std::to_string(config.packages_per_vehicle) + "\n";
  out += "vehicle_capacity_mhz = " +
         std::to_string(config.vehicle_capacity_mhz) + "\n";
  out += "obu_power_w = " + format_double(config.obu_power_w) + "\n";
  out += "seed = " + std::to_string(config.seed) + "\n";
}

void append_cloud_section(std::string& out, const CloudSpec& cloud) {
  out += "[cloud]\n";
  out += "server_capacity_mhz = " + std::to_string(cloud.server_capacity_mhz) +
         "\n";
  out += "server_power_w = " + format_double(cloud.server_power_w) + "\n";
  out += "server_count = " + std::to_string(cloud.server_count) + "\n";
  out += "transport_delta_j_per_bit = " +
         format_double(cloud.transport_delta_j_per_bit) + "\n";
  out += "transport_capacity_mbps = " +
         format_bps_as_mbps(cloud.transport_capacity_bps) + "\n";
}

std::string chain_to_value(const std::vector<std::string>& chain) {
  std::string value;
  for (const std::string& name : chain) {
    if (!value.empty()) {
      value += ' ';
    }
    value += name;
  }
  return value;
}

void append_paths_section(std::string& out,
                          const std::vector<DeviceSpec>& devices,
                          const std::vector<std::string>& shared_chain,
                          const std::vector<std::string>& fog_chain,
                          const std::vector<std::string>& cloud_chain,
                          const std::vector<CapacityGroup>& groups) {
  out += "[paths]\n";
  for (const DeviceSpec& device : devices) {
    if (device.name == kCloudTransportName) {
      continue;  // derived from [cloud]
    }
    out += "device = " + device.name + " " +
           format_bps_as_mbps(device.capacity_bps) + " " +
           format_double(device.power_w) + "\n";
  }
  out += "shared_chain = " + chain_to_value(shared_chain) + "\n";
  out += "fog_chain = " + chain_to_value(fog_chain) + "\n";
  out += "cloud_chain = " + chain_to_value(cloud_chain) + "\n";
  for (const CapacityGroup& group : groups) {
    out += "group = " + group.name + " " +
           format_bps_as_mbps(group.capacity_bps);
    for (const std::string& name : group.devices) {
      out += " " + name;
    }
    out += "\n";
  }
}

}  // namespace

std::string config_to_text(const ScenarioConfig& config) {
  config.validate();
  // Resolving materializes the built-in groups so the printed document is
  // self-contained.
  const PathModel resolved = resolve_paths(config.paths, config.cloud);
  std::string out;
  append_scenario_section(out, config);
  out += "\n";
  append_cloud_section(out, config.cloud);
  out += "\n";
  append_paths_section(out, config.paths.devices, config.paths.shared_chain,
                       config.paths.fog_chain, config.paths.cloud_chain,
                       resolved.capacity_groups);
  return out;
}

std::string instance_to_text(const Instance& instance) {
  std::string out = "# vfogmatch instance v1\n";
  append_scenario_section(out, instance.config);
  out += "\n[requests]\n";
  for (const Request& request : instance.requests) {
    out += std::to_string(request.id) + " = " +
           std::to_string(request.demand_mhz) + " " +
           std::to_string(request.software) + "\n";
  }
  out += "\n[vehicles]\n";
  for (const Vehicle& vehicle : instance.vehicles) {
    out += std::to_string(vehicle.id) + " = " +
           std::to_string(vehicle.capacity_mhz) + " " +
           format_double(vehicle.energy_per_mhz);
    for (const SoftwareId software : vehicle.installed) {
      out += " " + std::to_string(software);
    }
    out += "\n";
  }
  out += "\n";
  append_cloud_section(out, instance.cloud);
  out += "\n";

  // Devices in chain order, names deduplicated.
  std::vector<DeviceSpec> devices;
  std::unordered_set<std::string> seen;
  for (const auto* chain : {&instance.paths.shared_devices,
                            &instance.paths.fog_devices,
                            &instance.paths.cloud_devices}) {
    for (const DeviceSpec& device : *chain) {
      if (seen.insert(device.name).second) {
        devices.push_back(device);
      }
    }
  }
  auto names = [](const std::vector<DeviceSpec>& chain) {
    std::vector<std::string> out;
    for (const DeviceSpec& device : chain) {
      out.push_back(device.name);
    }
    return out;
  };
  append_paths_section(out, devices, names(instance.paths.shared_devices),
                       names(instance.paths.fog_devices),
                       names(instance.paths.cloud_devices),
                       instance.paths.capacity_groups);
  return out;
}

Instance instance_from_text(std::string_view text) {
  const Document doc = parse_document(text);
  const std::vector<DocEntry>& entries = doc.entries;

  if (doc.sections.count("scenario") == 0) {
    throw ParseError("instance document lacks a [scenario] section");
  }
  if (doc.sections.count("requests") == 0 ||
      doc.sections.count("vehicles") == 0) {
    throw ParseError(
        "instance document needs [requests] and [vehicles] sections");
  }
  ScenarioConfig config;
  for (const DocEntry& entry : entries) {
    if (entry.section == "requests" || entry.section == "vehicles") {
      continue;
    }
    try {
      apply_config_entry(config, entry.section, entry.key, entry.value);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(entry.line_number) + ": " +
                       e.what());
    }
  }
  config.validate();

  Instance instance;
  instance.config = config;
  instance.cloud = config.cloud;
  instance.paths = resolve_paths(config.paths, config.cloud);

  std::set<std::int32_t> request_ids;
  std::set<std::int32_t> vehicle_ids;
  for (const DocEntry& entry : entries) {
    if (entry.section == "requests") {
      const std::int32_t id = parse_i32(entry.key);
      if (!request_ids.insert(id).second) {
        throw ParseError("duplicate request id " + std::to_string(id));
      }
      const std::vector<std::string> tokens = split_tokens(entry.value);
      if (tokens.size() != 2) {
        throw ParseError("request " + std::to_string(id) +
                         ": expected '<demand_mhz> <software>'");
      }
      Request request;
      request.id = id;
      request.demand_mhz = parse_i64(tokens[0]);
      request.software = parse_i32(tokens[1]);
      request.data_rate_bps = config.alpha_bps_per_mhz * request.demand_mhz;
      if (request.demand_mhz < config.demand_min_mhz ||
          request.demand_mhz > config.demand_max_mhz) {
        throw ParseError("request " + std::to_string(id) + ": demand " +
                         std::to_string(request.demand_mhz) +
                         " outside the configured range");
      }
      if (request.software < 0 ||
          request.software >= config.software_library_size) {
        throw ParseError("request " + std::to_string(id) +
                         ": software id outside the library");
      }
      instance.requests.push_back(request);
    } else if (entry.section == "vehicles") {
      const std::int32_t id = parse_i32(entry.key);
      if (!vehicle_ids.insert(id).second) {
        throw ParseError("duplicate vehicle id " + std::to_string(id));
      }
      const std::vector<std::string> tokens = split_tokens(entry.value);
      if (tokens.size() < 2) {
        throw ParseError(
            "vehicle " + std::to_string(id) +
            ": expected '<capacity_mhz> <energy_per_mhz> [package...]'");
      }
      Vehicle vehicle;
      vehicle.id = id;
      vehicle.capacity_mhz = parse_i64(tokens[0]);
      vehicle.energy_per_mhz = parse_f64(tokens[1]);
      if (vehicle.capacity_mhz <= 0) {
        throw ParseError("vehicle " + std::to_string(id) +
                         ": capacity must be positive");
      }
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const std::int32_t software = parse_i32(tokens[i]);
        if (software < 0 || software >= config.software_library_size) {
          throw ParseError("vehicle " + std::to_string(id) +
                           ": software id outside the library");
        }
        vehicle.installed.push_back(software);
      }
      std::sort(vehicle.installed.begin(), vehicle.installed.end());
      if (std::adjacent_find(vehicle.installed.begin(),
                             vehicle.installed.end()) !=
          vehicle.installed.end()) {
        throw ParseError("vehicle " + std::to_string(id) +
                         ": duplicate installed package");
      }
      if (static_cast<std::int32_t>(vehicle.installed.size()) !=
          config.packages_per_vehicle) {
        throw ParseError("vehicle " + std::to_string(id) + ": holds " +
                         std::to_string(vehicle.installed.size()) +
                         " packages, config says " +
                         std::to_string(config.packages_per_vehicle));
      }
      instance.vehicles.push_back(vehicle);
    }
  }

  auto contiguous = [](const std::set<std::int32_t>& ids) {
    std::int32_t expected = 0;
    for (const std::int32_t id : ids) {
      if (id != expected++) {
        return false;
      }
    }
    return true;
  };
  if (static_cast<std::int32_t>(instance.requests.size()) !=
          config.request_count ||
      !contiguous(request_ids)) {
    throw ParseError("[requests] must list ids 0.." +
                     std::to_string(config.request_count - 1) +
                     " exactly once each");
  }
  if (static_cast<std::int32_t>(instance.vehicles.size()) !=
          config.vehicle_count ||
      !contiguous(vehicle_ids)) {
    throw ParseError("[vehicles] must list ids 0.." +
                     std::to_string(config.vehicle_count - 1) +
                     " exactly once each");
  }
  std::sort(instance.requests.begin(), instance.requests.end(),
            [](const Request& a, const Request& b) { return a.id < b.id; });
  std::sort(instance.vehicles.begin(), instance.vehicles.end(),
            [](const Vehicle& a, const Vehicle& b) { return a.id < b.id; });
  return instance;
}

std::string assignment_to_text(const Assignment& assignment) {
  std::string out;
  for (std::size_t u = 0; u < assignment.target.size(); ++u) {
    out += std::to_string(u) + "," + assignment.target[u].to_string() + "\n";
  }
  return out;
}

Assignment assignment_from_text(std::string_view text,
                                const Instance& instance) {
  Assignment assignment;
  assignment.target.assign(instance.requests.size(), Target::cloud());
  std::vector<std::uint8_t> seen(instance.requests.size(), 0);

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": expected '<request_id>,<target>'");
    }
    const std::int32_t id = parse_i32(std::string(trim(line.substr(0, comma))));
    if (id < 0 || static_cast<std::size_t>(id) >= instance.requests.size()) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": request id " + std::to_string(id) +
                       " outside the instance");
    }
    if (seen[static_cast<std::size_t>(id)] != 0) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": request " + std::to_string(id) + " listed twice");
    }
    seen[static_cast<std::size_t>(id)] = 1;

    const std::string target_token(trim(line.substr(comma + 1)));
    if (target_token == "cloud") {
      assignment.target[static_cast<std::size_t>(id)] = Target::cloud();
    } else if (target_token.rfind("vehicle:", 0) == 0) {
      const std::int32_t vehicle = parse_i32(target_token.substr(8));
      if (vehicle < 0 ||
          static_cast<std::size_t>(vehicle) >= instance.vehicles.size()) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": vehicle id " + std::to_string(vehicle) +
                         " outside the fleet");
      }
      assignment.target[static_cast<std::size_t>(id)] =
          Target::vehicle(vehicle);
    } else {
      throw ParseError("line " + std::to_string(line_number) +
                       ": target must be 'cloud' or 'vehicle:<id>'");
    }
  }
  for (std::size_t u = 0; u < seen.size(); ++u) {
    if (seen[u] == 0) {
      throw ParseError("assignment misses request " + std::to_string(u));
    }
  }
  return assignment;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw IoError("failed reading '" + path + "'");
  }
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out.good()) {
    throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace vfm
