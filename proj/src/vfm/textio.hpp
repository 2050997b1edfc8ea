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

// Text formats. Three documents share one section/key grammar
// (see docs/formats.md):
//
//   config document    — [scenario], [cloud], [paths]
//   instance document  — config sections plus [requests] and [vehicles]
//   assignment listing — one `request_id,target` line per request
//
// Serialization uses shortest round-trip float formatting, so
// parse(serialize(x)) reproduces x exactly.

#ifndef VFM_TEXTIO_HPP
#define VFM_TEXTIO_HPP

#include <string>
#include <string_view>

#include "vfm/problem.hpp"
#include "vfm/types.hpp"

namespace vfm {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Exact decimal Mbps -> integer bit/s; accepts up to six fractional digits
/// (1 bps resolution). Throws ParseError on malformed or negative input.
std::int64_t parse_mbps_to_bps(const std::string& token);

/// Integer bit/s -> Mbps string.
std::string format_bps_as_mbps(std::int64_t bps);

/// Applies `section.key` (e.g. "scenario.seed", "cloud.server_count") to the
/// config. Throws ParseError for unknown keys, ConfigError for bad values.
void set_config_key(ScenarioConfig& config, const std::string& dotted_key,
                    const std::string& value);

/// Overlays a config document onto `config`: scalars overwrite, devices and
/// groups upsert by name, chains replace when present.
void config_apply_text(ScenarioConfig& config, std::string_view text);

/// Full resolved config document; feeding it back through
/// config_apply_text reproduces the same resolved model.
std::string config_to_text(const ScenarioConfig& config);

std::string instance_to_text(const Instance& instance);
Instance instance_from_text(std::string_view text);

std::string assignment_to_text(const Assignment& assignment);
Assignment assignment_from_text(std::string_view text,
                                const Instance& instance);

/// Whole-file helpers; IoError on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace vfm

#endif  // VFM_TEXTIO_HPP
