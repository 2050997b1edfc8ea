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

// Deterministic random primitives. std::mt19937_64 output is fully specified
// by the standard; the draw and shuffle helpers below avoid the
// implementation-defined std::uniform_int_distribution / std::shuffle so that
// identical (config, seed) produces identical scenarios on every platform.

#ifndef VFM_RANDOM_HPP
#define VFM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace vfm {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for an independent named stream derived from the scenario seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream));
}

/// Unbiased draw in [0, bound) via rejection; bound must be > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) {
    draw = rng();
  }
  return draw % bound;
}

/// Uniform integer in [lo, hi] inclusive.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo,
                                std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// In-place Fisher-Yates shuffle with the deterministic draw above.
template <typename T>
void deterministic_shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace vfm

#endif  // VFM_RANDOM_HPP
