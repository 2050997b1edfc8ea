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

// C API layer: opaque handles over the vfm core, exceptions mapped to
// status codes, returned strings malloc-owned by the caller.

#include "vfogmatch.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "vfm/errors.hpp"
#include "vfm/experiment.hpp"
#include "vfm/problem.hpp"
#include "vfm/scenario.hpp"
#include "vfm/solver.hpp"
#include "vfm/textio.hpp"
#include "vfm/types.hpp"

struct vfm_config_s {
  vfm::ScenarioConfig config;
};

struct vfm_instance_s {
  vfm::Instance instance;
};

struct vfm_solution_s {
  vfm::Solution solution;
  vfm::Metrics metrics;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& message) { t_last_error = message; }

template <typename Fn>
vfm_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return VFM_OK;
  } catch (const vfm::ParseError& e) {
    set_error(e.what());
    return VFM_ERROR_PARSE;
  } catch (const vfm::ConfigError& e) {
    set_error(e.what());
    return VFM_ERROR_INVALID_ARGUMENT;
  } catch (const vfm::IoError& e) {
    set_error(e.what());
    return VFM_ERROR_IO;
  } catch (const vfm::InfeasibleInstanceError& e) {
    set_error(e.what());
    return VFM_ERROR_INFEASIBLE;
  } catch (const vfm::SizeError& e) {
    set_error(e.what());
    return VFM_ERROR_SIZE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return VFM_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return VFM_ERROR_INTERNAL;
  }
}

vfm_status require(bool ok, const char* message) {
  if (!ok) {
    set_error(message);
    return VFM_ERROR_INVALID_ARGUMENT;
  }
  return VFM_OK;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) {
    return nullptr;
  }
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

vfm_metrics to_c(const vfm::Metrics& m) {
  vfm_metrics out;
  out.total_power_w = m.total_power_w;
  out.network_power_w = m.network_power_w;
  out.processing_power_w = m.processing_power_w;
  out.cloud_workload_mhz = m.cloud_workload_mhz;
  out.fog_workload_mhz = m.fog_workload_mhz;
  out.cloud_request_count = m.cloud_request_count;
  out.fog_request_count = m.fog_request_count;
  return out;
}

constexpr double kDefaultTimeBudgetS = 60.0;
constexpr uint64_t kDefaultNodeBudget = 10'000'000;

}  // namespace

extern "C" {

const char* vfm_version(void) { return "1.0.0"; }

const char* vfm_status_name(vfm_status status) {
  switch (status) {
    case VFM_OK:
      return "ok";
    case VFM_ERROR_INVALID_ARGUMENT:
      return "invalid_argument";
    case VFM_ERROR_PARSE:
      return "parse_error";
    case VFM_ERROR_IO:
      return "io_error";
    case VFM_ERROR_INFEASIBLE:
      return "infeasible";
    case VFM_ERROR_SIZE:
      return "size_limit";
    case VFM_ERROR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

const char* vfm_last_error(void) { return t_last_error.c_str(); }

void vfm_string_free(char* text) { std::free(text); }

vfm_config* vfm_config_create(void) {
  return new (std::nothrow) vfm_config_s();
}

void vfm_config_free(vfm_config* config) { delete config; }

vfm_config* vfm_config_clone(const vfm_config* config) {
  if (config == nullptr) {
    return nullptr;
  }
  return new (std::nothrow) vfm_config_s(*config);
}

vfm_status vfm_config_load_file(vfm_config* config, const char* path) {
  if (vfm_status s = require(config != nullptr && path != nullptr,
                             "config and path must be non-NULL")) {
    return s;
  }
  return guarded([&] {
    vfm::config_apply_text(config->config, vfm::read_file(path));
  });
}

vfm_status vfm_config_apply_text(vfm_config* config, const char* text) {
  if (vfm_status s = require(config != nullptr && text != nullptr,
                             "config and text must be non-NULL")) {
    return s;
  }
  return guarded([&] { vfm::config_apply_text(config->config, text); });
}

vfm_status vfm_config_set(vfm_config* config, const char* dotted_key,
                          const char* value) {
  if (vfm_status s = require(
          config != nullptr && dotted_key != nullptr && value != nullptr,
          "config, key and value must be non-NULL")) {
    return s;
  }
  return guarded(
      [&] { vfm::set_config_key(config->config, dotted_key, value); });
}

char* vfm_config_to_text(const vfm_config* config) {
  if (config == nullptr) {
    set_error("config must be non-NULL");
    return nullptr;
  }
  std::string text;
  if (guarded([&] { text = vfm::config_to_text(config->config); }) !=
      VFM_OK) {
    return nullptr;
  }
  return copy_string(text);
}

vfm_status vfm_instance_build(const vfm_config* config, vfm_instance** out) {
  if (vfm_status s = require(config != nullptr && out != nullptr,
                             "config and out must be non-NULL")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = new vfm_instance_s();
    try {
      handle->instance = vfm::build_instance(config->config);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

vfm_status vfm_instance_parse(const char* text, vfm_instance** out) {
  if (vfm_status s = require(text != nullptr && out != nullptr,
                             "text and out must be non-NULL")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = new vfm_instance_s();
    try {
      handle->instance = vfm::instance_from_text(text);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

vfm_status vfm_instance_load_file(const char* path, vfm_instance** out) {
  if (vfm_status s = require(path != nullptr && out != nullptr,
                             "path and out must be non-NULL")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    const std::string text = vfm::read_file(path);
    auto handle = new vfm_instance_s();
    try {
      handle->instance = vfm::instance_from_text(text);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
  });
}

char* vfm_instance_to_text(const vfm_instance* instance) {
  if (instance == nullptr) {
    set_error("instance must be non-NULL");
    return nullptr;
  }
  std::string text;
  if (guarded([&] { text = vfm::instance_to_text(instance->instance); }) !=
      VFM_OK) {
    return nullptr;
  }
  return copy_string(text);
}

vfm_status vfm_instance_save_file(const vfm_instance* instance,
                                  const char* path) {
  if (vfm_status s = require(instance != nullptr && path != nullptr,
                             "instance and path must be non-NULL")) {
    return s;
  }
  return guarded([&] {
    vfm::write_file(path, vfm::instance_to_text(instance->instance));
  });
}

void vfm_instance_free(vfm_instance* instance) { delete instance; }

int32_t vfm_instance_request_count(const vfm_instance* instance) {
  return instance == nullptr
             ? -1
             : static_cast<int32_t>(instance->instance.requests.size());
}

int32_t vfm_instance_vehicle_count(const vfm_instance* instance) {
  return instance == nullptr
             ? -1
             : static_cast<int32_t>(instance->instance.vehicles.size());
}

int64_t vfm_instance_total_demand_mhz(const vfm_instance* instance) {
  return instance == nullptr ? -1 : instance->instance.total_demand_mhz();
}

vfm_status vfm_solve(const vfm_instance* instance, const char* solver,
                     double time_budget_s, uint64_t node_budget,
                     vfm_solution** out) {
  if (vfm_status s =
          require(instance != nullptr && solver != nullptr && out != nullptr,
                  "instance, solver and out must be non-NULL")) {
    return s;
  }
  *out = nullptr;
  return guarded([&] {
    const vfm::SolverKind kind = vfm::solver_from_string(solver);
    const double budget_s =
        time_budget_s > 0.0 ? time_budget_s : kDefaultTimeBudgetS;
    const uint64_t budget_nodes =
        node_budget > 0 ? node_budget : kDefaultNodeBudget;
    vfm::Solution solution =
        vfm::solve(instance->instance, kind, budget_s, budget_nodes);
    auto handle = new vfm_solution_s();
    handle->metrics = vfm::metrics(solution.assignment, instance->instance);
    handle->solution = std::move(solution);
    *out = handle;
  });
}

void vfm_solution_free(vfm_solution* solution) { delete solution; }

double vfm_solution_objective_w(const vfm_solution* solution) {
  return solution == nullptr ? -1.0 : solution->solution.objective_w;
}

int vfm_solution_optimal(const vfm_solution* solution) {
  return solution != nullptr && solution->solution.optimal ? 1 : 0;
}

uint64_t vfm_solution_nodes_explored(const vfm_solution* solution) {
  return solution == nullptr ? 0 : solution->solution.nodes_explored;
}

double vfm_solution_runtime_ms(const vfm_solution* solution) {
  return solution == nullptr
             ? -1.0
             : std::chrono::duration<double, std::milli>(
                   solution->solution.runtime)
                   .count();
}

vfm_status vfm_solution_metrics(const vfm_solution* solution,
                                vfm_metrics* out) {
  if (vfm_status s = require(solution != nullptr && out != nullptr,
                             "solution and out must be non-NULL")) {
    return s;
  }
  *out = to_c(solution->metrics);
  return VFM_OK;
}

int32_t vfm_solution_target(const vfm_solution* solution,
                            int32_t request_id) {
  if (solution == nullptr || request_id < 0 ||
      static_cast<std::size_t>(request_id) >=
          solution->solution.assignment.target.size()) {
    return -2;
  }
  const vfm::Target target =
      solution->solution.assignment.target[static_cast<std::size_t>(
          request_id)];
  return target.is_cloud() ? -1 : target.vehicle_id();
}

char* vfm_solution_assignment_text(const vfm_solution* solution) {
  if (solution == nullptr) {
    set_error("solution must be non-NULL");
    return nullptr;
  }
  return copy_string(vfm::assignment_to_text(solution->solution.assignment));
}

vfm_status vfm_solution_save_assignment(const vfm_solution* solution,
                                        const char* path) {
  if (vfm_status s = require(solution != nullptr && path != nullptr,
                             "solution and path must be non-NULL")) {
    return s;
  }
  return guarded([&] {
    vfm::write_file(path,
                    vfm::assignment_to_text(solution->solution.assignment));
  });
}

vfm_status vfm_baseline_cloud_only(const vfm_instance* instance,
                                   vfm_metrics* out) {
  if (vfm_status s = require(instance != nullptr && out != nullptr,
                             "instance and out must be non-NULL")) {
    return s;
  }
  return guarded([&] {
    *out = to_c(vfm::baseline_cloud_only(instance->instance));
  });
}

static vfm_status evaluate_impl(const vfm_instance* instance,
                                const std::string& text, vfm_metrics* out,
                                char** violations_out) {
  if (violations_out != nullptr) {
    *violations_out = nullptr;
  }
  std::size_t violation_count = 0;
  const vfm_status status = guarded([&] {
    const vfm::Assignment assignment =
        vfm::assignment_from_text(text, instance->instance);
    *out = to_c(vfm::metrics(assignment, instance->instance));
    const std::vector<vfm::Violation> violations =
        vfm::check_feasible(assignment, instance->instance);
    violation_count = violations.size();
    if (!violations.empty() && violations_out != nullptr) {
      std::string report;
      for (const vfm::Violation& violation : violations) {
        report += violation.to_string();
        report += '\n';
      }
      *violations_out = copy_string(report);
    }
  });
  if (status != VFM_OK) {
    return status;
  }
  if (violation_count > 0) {
    set_error("assignment violates " + std::to_string(violation_count) +
              " constraint(s)");
    return VFM_ERROR_INFEASIBLE;
  }
  return VFM_OK;
}

vfm_status vfm_evaluate_text(const vfm_instance* instance,
                             const char* assignment_text, vfm_metrics* out,
                             char** violations_out) {
  if (vfm_status s = require(
          instance != nullptr && assignment_text != nullptr && out != nullptr,
          "instance, assignment text and out must be non-NULL")) {
    return s;
  }
  return evaluate_impl(instance, assignment_text, out, violations_out);
}

vfm_status vfm_evaluate_file(const vfm_instance* instance,
                             const char* assignment_path, vfm_metrics* out,
                             char** violations_out) {
  if (vfm_status s = require(
          instance != nullptr && assignment_path != nullptr && out != nullptr,
          "instance, assignment path and out must be non-NULL")) {
    return s;
  }
  std::string text;
  const vfm_status status =
      guarded([&] { text = vfm::read_file(assignment_path); });
  if (status != VFM_OK) {
    return status;
  }
  return evaluate_impl(instance, text, out, violations_out);
}

vfm_status vfm_sweep_run(const vfm_config* config, int32_t k_min,
                         int32_t k_max, int32_t seed_count,
                         const char* solver, double time_budget_s,
                         uint64_t node_budget, int32_t jobs,
                         const char* rows_csv_path,
                         const char* summary_csv_path,
                         int32_t* cells_failed_out,
                         int32_t* not_proven_out) {
  if (vfm_status s = require(
          config != nullptr && solver != nullptr && rows_csv_path != nullptr,
          "config, solver and rows_csv_path must be non-NULL")) {
    return s;
  }
  if (cells_failed_out != nullptr) {
    *cells_failed_out = 0;
  }
  if (not_proven_out != nullptr) {
    *not_proven_out = 0;
  }
  bool any_infeasible = false;
  std::string first_failure;
  const vfm_status status = guarded([&] {
    if (k_min < 0 || k_max < k_min ||
        k_max > config->config.software_library_size) {
      throw vfm::ConfigError(
          "sweep k range must satisfy 0 <= k_min <= k_max <= "
          "software_library_size");
    }
    if (seed_count < 1) {
      throw vfm::ConfigError("sweep needs at least one seed");
    }
    vfm::SweepConfig sweep;
    sweep.base = config->config;
    for (int32_t k = k_min; k <= k_max; ++k) {
      sweep.k_values.push_back(k);
    }
    for (int32_t i = 0; i < seed_count; ++i) {
      sweep.seeds.push_back(config->config.seed +
                            static_cast<uint64_t>(i));
    }
    sweep.solver = vfm::solver_from_string(solver);
    sweep.time_budget_s =
        time_budget_s > 0.0 ? time_budget_s : kDefaultTimeBudgetS;
    sweep.node_budget = node_budget > 0 ? node_budget : kDefaultNodeBudget;
    sweep.jobs = jobs > 0 ? jobs : 1;

    const vfm::SweepResult result = vfm::run_sweep(sweep);
    vfm::write_file(rows_csv_path, vfm::rows_to_csv(result.rows));
    if (summary_csv_path != nullptr && !result.rows.empty()) {
      vfm::write_file(summary_csv_path,
                      vfm::summary_to_csv(vfm::summarize(result.rows)));
    }
    if (cells_failed_out != nullptr) {
      *cells_failed_out = static_cast<int32_t>(result.failures.size());
    }
    if (not_proven_out != nullptr) {
      int32_t count = 0;
      for (const vfm::SweepRow& row : result.rows) {
        if (!row.optimal) {
          ++count;
        }
      }
      *not_proven_out = count;
    }
    if (!result.failures.empty()) {
      const vfm::SweepFailure& failure = result.failures.front();
      any_infeasible = failure.infeasible;
      first_failure = "sweep cell (k=" + std::to_string(failure.k) +
                      ", seed=" + std::to_string(failure.seed) +
                      ") failed: " + failure.message;
    }
  });
  if (status != VFM_OK) {
    return status;
  }
  if (!first_failure.empty()) {
    set_error(first_failure);
    return any_infeasible ? VFM_ERROR_INFEASIBLE : VFM_ERROR_INTERNAL;
  }
  return VFM_OK;
}

}  // extern "C"
