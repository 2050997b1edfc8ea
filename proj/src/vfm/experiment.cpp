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

#include "vfm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <mutex>
#include <thread>

#include "vfm/errors.hpp"
#include "vfm/scenario.hpp"

namespace vfm {

SweepConfig SweepConfig::defaults(const ScenarioConfig& base) {
  SweepConfig config;
  config.base = base;
  for (std::int32_t k = 0; k <= base.software_library_size; ++k) {
    config.k_values.push_back(k);
  }
  for (std::uint64_t i = 0; i < 10; ++i) {
    config.seeds.push_back(base.seed + i);
  }
  return config;
}

Metrics baseline_cloud_only(const Instance& instance) {
  const Assignment assignment = all_cloud_assignment(instance);
  const std::vector<Violation> violations =
      check_feasible(assignment, instance);
  if (!violations.empty()) {
    throw InfeasibleInstanceError(
        "all-cloud baseline is infeasible: " + violations.front().to_string());
  }
  return metrics(assignment, instance);
}

namespace {

SweepRow solve_cell(const SweepConfig& config, std::int32_t k,
                    std::uint64_t seed) {
  ScenarioConfig scenario = config.base;
  scenario.packages_per_vehicle = k;
  scenario.seed = seed;
  const Instance instance = build_instance(scenario);

  const Metrics baseline = baseline_cloud_only(instance);
  const Solution solution =
      solve(instance, config.solver, config.time_budget_s,
            config.node_budget);
  const Metrics m = metrics(solution.assignment, instance);

  SweepRow row;
  row.k = k;
  row.seed = seed;
  row.total_power_w = m.total_power_w;
  row.network_power_w = m.network_power_w;
  row.processing_power_w = m.processing_power_w;
  row.cloud_workload_mhz = m.cloud_workload_mhz;
  row.fog_workload_mhz = m.fog_workload_mhz;
  row.saving_vs_cloud_only_pct =
      baseline.total_power_w > 0.0
          ? 100.0 * (1.0 - m.total_power_w / baseline.total_power_w)
          : 0.0;
  row.cloud_workload_reduction_pct =
      baseline.cloud_workload_mhz > 0
          ? 100.0 * (1.0 - static_cast<double>(m.cloud_workload_mhz) /
                               static_cast<double>(
                                   baseline.cloud_workload_mhz))
          : 0.0;
  row.solver = config.solver;
  row.optimal = solution.optimal;
  row.runtime_ms =
      std::chrono::duration<double, std::milli>(solution.runtime).count();
  return row;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  if (config.k_values.empty() || config.seeds.empty()) {
    throw ConfigError("sweep needs at least one k value and one seed");
  }

  struct Cell {
    std::int32_t k;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (const std::int32_t k : config.k_values) {
    for (const std::uint64_t seed : config.seeds) {
      cells.push_back(Cell{k, seed});
    }
  }

  std::vector<SweepRow> rows(cells.size());
  std::vector<std::uint8_t> ok(cells.size(), 0);
  std::vector<SweepFailure> failures(cells.size());

  const std::int32_t jobs =
      std::max<std::int32_t>(1, std::min<std::int32_t>(
                                    config.jobs,
                                    static_cast<std::int32_t>(cells.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) {
        return;
      }
      try {
        rows[i] = solve_cell(config, cells[i].k, cells[i].seed);
        ok[i] = 1;
      } catch (const InfeasibleInstanceError& e) {
        failures[i] =
            SweepFailure{cells[i].k, cells[i].seed, e.what(), true};
      } catch (const std::exception& e) {
        failures[i] =
            SweepFailure{cells[i].k, cells[i].seed, e.what(), false};
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (std::int32_t j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
    for (std::thread& thread : pool) {
      thread.join();
    }
  }

  SweepResult result;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (ok[i] != 0) {
      result.rows.push_back(rows[i]);
    } else {
      result.failures.push_back(failures[i]);
    }
  }
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows) {
  if (rows.empty()) {
    throw ConfigError("summarize: no sweep rows");
  }
  std::vector<std::int32_t> ks;
  for (const SweepRow& row : rows) {
    if (std::find(ks.begin(), ks.end(), row.k) == ks.end()) {
      ks.push_back(row.k);
    }
  }
  std::sort(ks.begin(), ks.end());

  std::vector<SummaryRow> summary;
  for (const std::int32_t k : ks) {
    std::vector<const SweepRow*> group;
    for (const SweepRow& row : rows) {
      if (row.k == k) {
        group.push_back(&row);
      }
    }
    const auto count = static_cast<double>(group.size());
    auto make = [&](const std::string& stat, auto pick) {
      SummaryRow out;
      out.k = k;
      out.stat = stat;
      out.total_power_w = pick([](const SweepRow& r) { return r.total_power_w; });
      out.network_power_w =
          pick([](const SweepRow& r) { return r.network_power_w; });
      out.processing_power_w =
          pick([](const SweepRow& r) { return r.processing_power_w; });
      out.cloud_workload_mhz = pick([](const SweepRow& r) {
        return static_cast<double>(r.cloud_workload_mhz);
      });
      out.fog_workload_mhz = pick([](const SweepRow& r) {
        return static_cast<double>(r.fog_workload_mhz);
      });
      out.saving_vs_cloud_only_pct =
          pick([](const SweepRow& r) { return r.saving_vs_cloud_only_pct; });
      out.cloud_workload_reduction_pct = pick(
          [](const SweepRow& r) { return r.cloud_workload_reduction_pct; });
      out.runtime_ms = pick([](const SweepRow& r) { return r.runtime_ms; });
      return out;
    };
    summary.push_back(make("mean", [&](auto field) {
      double sum = 0.0;
      for (const SweepRow* row : group) {
        sum += field(*row);
      }
      return sum / count;
    }));
    summary.push_back(make("min", [&](auto field) {
      double value = std::numeric_limits<double>::infinity();
      for (const SweepRow* row : group) {
        value = std::min(value, field(*row));
      }
      return value;
    }));
    summary.push_back(make("max", [&](auto field) {
      double value = -std::numeric_limits<double>::infinity();
      for (const SweepRow* row : group) {
        value = std::max(value, field(*row));
      }
      return value;
    }));
  }
  return summary;
}

namespace {

std::string csv_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

}  // namespace

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::string csv =
      "k,seed,total_power_w,network_power_w,processing_power_w,"
      "cloud_workload_mhz,fog_workload_mhz,saving_vs_cloud_only_pct,"
      "cloud_workload_reduction_pct,solver,optimal,runtime_ms\n";
  for (const SweepRow& row : rows) {
    csv += std::to_string(row.k);
    csv += ',';
    csv += std::to_string(row.seed);
    csv += ',';
    csv += csv_double(row.total_power_w);
    csv += ',';
    csv += csv_double(row.network_power_w);
    csv += ',';
    csv += csv_double(row.processing_power_w);
    csv += ',';
    csv += std::to_string(row.cloud_workload_mhz);
    csv += ',';
    csv += std::to_string(row.fog_workload_mhz);
    csv += ',';
    csv += csv_double(row.saving_vs_cloud_only_pct);
    csv += ',';
    csv += csv_double(row.cloud_workload_reduction_pct);
    csv += ',';
    csv += to_string(row.solver);
    csv += ',';
    csv += row.optimal ? "true" : "false";
    csv += ',';
    csv += csv_double(row.runtime_ms);
    csv += '\n';
  }
  return csv;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
  std::string csv =
      "k,stat,total_power_w,network_power_w,processing_power_w,"
      "cloud_workload_mhz,fog_workload_mhz,saving_vs_cloud_only_pct,"
      "cloud_workload_reduction_pct,runtime_ms\n";
  for (const SummaryRow& row : rows) {
    csv += std::to_string(row.k);
    csv += ',';
    csv += row.stat;
    csv += ',';
    csv += csv_double(row.total_power_w);
    csv += ',';
    csv += csv_double(row.network_power_w);
    csv += ',';
    csv += csv_double(row.processing_power_w);
    csv += ',';
    csv += csv_double(row.cloud_workload_mhz);
    csv += ',';
    csv += csv_double(row.fog_workload_mhz);
    csv += ',';
    csv += csv_double(row.saving_vs_cloud_only_pct);
    csv += ',';
    csv += csv_double(row.cloud_workload_reduction_pct);
    csv += ',';
    csv += csv_double(row.runtime_ms);
    csv += '\n';
  }
  return csv;
}

}  // namespace vfm
