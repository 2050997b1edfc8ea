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

#ifndef VFM_ERRORS_HPP
#define VFM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vfm {

/// Invalid configuration value (bad ranges, k > S, non-positive capacity, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text document (config, instance, or assignment file).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// No feasible assignment exists for the instance.
class InfeasibleInstanceError : public std::runtime_error {
 public:
  explicit InfeasibleInstanceError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Enumeration refused: the search space exceeds the node budget.
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vfm

#endif  // VFM_ERRORS_HPP
