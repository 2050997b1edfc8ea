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

// The package-count sweep: solve one instance per (packages-per-vehicle,
// seed) cell, compare against the same seed's cloud-only baseline, and emit
// plot-ready CSV tables.

#ifndef VFM_EXPERIMENT_HPP
#define VFM_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vfm/problem.hpp"
#include "vfm/solver.hpp"
#include "vfm/types.hpp"

namespace vfm {

struct SweepRow {
  std::int32_t k = 0;
  std::uint64_t seed = 0;
  double total_power_w = 0.0;
  double network_power_w = 0.0;
  double processing_power_w = 0.0;
  std::int64_t cloud_workload_mhz = 0;
  std::int64_t fog_workload_mhz = 0;
  double saving_vs_cloud_only_pct = 0.0;
  double cloud_workload_reduction_pct = 0.0;
  SolverKind solver = SolverKind::exact;
  bool optimal = false;
  double runtime_ms = 0.0;
};

struct SweepFailure {
  std::int32_t k = 0;
  std::uint64_t seed = 0;
  std::string message;
  bool infeasible = false;  // true when the cell's instance was infeasible
};

struct SweepConfig {
  ScenarioConfig base;
  std::vector<std::int32_t> k_values;  // default 0..software_library_size
  std::vector<std::uint64_t> seeds;    // default base.seed .. base.seed+9
  SolverKind solver = SolverKind::exact;
  double time_budget_s = 60.0;
  std::uint64_t node_budget = 10'000'000;
  std::int32_t jobs = 1;

  static SweepConfig defaults(const ScenarioConfig& base);
};

struct SweepResult {
  std::vector<SweepRow> rows;          // ordered by (k, seed)
  std::vector<SweepFailure> failures;  // cells that raised an error
};

/// Metrics of the forced all-cloud assignment; the per-seed comparison
/// reference. Throws InfeasibleInstanceError when even all-cloud violates a
/// constraint.
Metrics baseline_cloud_only(const Instance& instance);

/// One row per (k, seed), ordered by (k, seed) regardless of --jobs. Cells
/// that fail are recorded in `failures` instead of aborting the sweep.
SweepResult run_sweep(const SweepConfig& config);

struct SummaryRow {
  std::int32_t k = 0;
  std::string stat;  // mean | min | max
  double total_power_w = 0.0;
  double network_power_w = 0.0;
  double processing_power_w = 0.0;
  double cloud_workload_mhz = 0.0;
  double fog_workload_mhz = 0.0;
  double saving_vs_cloud_only_pct = 0.0;
  double cloud_workload_reduction_pct = 0.0;
  double runtime_ms = 0.0;
};

/// mean/min/max across seeds, grouped by ascending k. Throws ConfigError on
/// empty input.
std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows);

/// CSV with the fixed sweep header; floats use 6 significant digits.
std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

}  // namespace vfm

#endif  // VFM_EXPERIMENT_HPP
