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

// vfogmatch command-line front end. Everything domain-related goes through
// the C API in vfogmatch.h; this file only parses flags and formats output.
//
// Exit codes: 0 success, 1 usage or input error, 2 infeasible instance,
// 3 budget exhausted without an optimality proof.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "vfogmatch.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNoProof = 3;

int exit_code_for(vfm_status status) {
  switch (status) {
    case VFM_OK:
      return kExitOk;
    case VFM_ERROR_INFEASIBLE:
      return kExitInfeasible;
    default:
      return kExitUsage;
  }
}

int report_error(vfm_status status) {
  std::fprintf(stderr, "error (%s): %s\n", vfm_status_name(status),
               vfm_last_error());
  return exit_code_for(status);
}

struct ConfigHandle {
  std::unique_ptr<vfm_config, decltype(&vfm_config_free)> ptr{
      vfm_config_create(), &vfm_config_free};
  vfm_config* get() const { return ptr.get(); }
};

struct CommonFlags {
  std::string config_path;
  std::string seed;
  std::string requests;
  std::string vehicles;
  std::string packages;
  std::string alpha;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path,
                  "Configuration document to load first");
  cmd->add_option("--seed", flags.seed, "Scenario seed (64-bit)");
  cmd->add_option("--requests", flags.requests, "Number of user requests");
  cmd->add_option("--vehicles", flags.vehicles, "Fleet size");
  cmd->add_option("--packages-per-vehicle", flags.packages,
                  "Software packages installed per vehicle");
  cmd->add_option("--alpha", flags.alpha,
                  "Traffic per processing demand, Mbps per MHz");
}

/// Precedence: built-in defaults, then --config, then explicit flags.
vfm_status resolve_config(const CommonFlags& flags, vfm_config* config) {
  if (!flags.config_path.empty()) {
    if (vfm_status s = vfm_config_load_file(config,
                                            flags.config_path.c_str())) {
      return s;
    }
  }
  const std::pair<const char*, const std::string*> overrides[] = {
      {"scenario.seed", &flags.seed},
      {"scenario.request_count", &flags.requests},
      {"scenario.vehicle_count", &flags.vehicles},
      {"scenario.packages_per_vehicle", &flags.packages},
      {"scenario.alpha_mbps_per_mhz", &flags.alpha},
  };
  for (const auto& [key, value] : overrides) {
    if (!value->empty()) {
      if (vfm_status s = vfm_config_set(config, key, value->c_str())) {
        return s;
      }
    }
  }
  return VFM_OK;
}

void print_metrics(const vfm_metrics& m) {
  std::printf("total_power_w = %.9g\n", m.total_power_w);
  std::printf("network_power_w = %.9g\n", m.network_power_w);
  std::printf("processing_power_w = %.9g\n", m.processing_power_w);
  std::printf("cloud_workload_mhz = %" PRId64 "\n", m.cloud_workload_mhz);
  std::printf("fog_workload_mhz = %" PRId64 "\n", m.fog_workload_mhz);
  std::printf("cloud_request_count = %" PRId64 "\n", m.cloud_request_count);
  std::printf("fog_request_count = %" PRId64 "\n", m.fog_request_count);
}

int run_generate(const CommonFlags& flags, const std::string& out_path) {
  ConfigHandle config;
  if (vfm_status s = resolve_config(flags, config.get())) {
    return report_error(s);
  }
  vfm_instance* instance = nullptr;
  if (vfm_status s = vfm_instance_build(config.get(), &instance)) {
    return report_error(s);
  }
  std::unique_ptr<vfm_instance, decltype(&vfm_instance_free)> guard(
      instance, &vfm_instance_free);
  if (out_path.empty()) {
    char* text = vfm_instance_to_text(instance);
    if (text == nullptr) {
      return report_error(VFM_ERROR_INTERNAL);
    }
    std::fputs(text, stdout);
    vfm_string_free(text);
  } else {
    if (vfm_status s = vfm_instance_save_file(instance, out_path.c_str())) {
      return report_error(s);
    }
    std::fprintf(stderr, "wrote instance (%d requests, %d vehicles) to %s\n",
                 vfm_instance_request_count(instance),
                 vfm_instance_vehicle_count(instance), out_path.c_str());
  }
  return kExitOk;
}

int run_show_config(const CommonFlags& flags) {
  ConfigHandle config;
  if (vfm_status s = resolve_config(flags, config.get())) {
    return report_error(s);
  }
  char* text = vfm_config_to_text(config.get());
  if (text == nullptr) {
    return report_error(VFM_ERROR_INVALID_ARGUMENT);
  }
  std::fputs(text, stdout);
  vfm_string_free(text);
  return kExitOk;
}

int run_solve(const std::string& instance_path, const std::string& solver,
              double time_budget_s, std::uint64_t node_budget,
              const std::string& out_path) {
  vfm_instance* instance = nullptr;
  if (vfm_status s = vfm_instance_load_file(instance_path.c_str(),
                                            &instance)) {
    return report_error(s);
  }
  std::unique_ptr<vfm_instance, decltype(&vfm_instance_free)> instance_guard(
      instance, &vfm_instance_free);

  vfm_solution* solution = nullptr;
  if (vfm_status s = vfm_solve(instance, solver.c_str(), time_budget_s,
                               node_budget, &solution)) {
    return report_error(s);
  }
  std::unique_ptr<vfm_solution, decltype(&vfm_solution_free)> solution_guard(
      solution, &vfm_solution_free);

  vfm_metrics m;
  if (vfm_status s = vfm_solution_metrics(solution, &m)) {
    return report_error(s);
  }
  std::printf("solver = %s\n", solver.c_str());
  std::printf("objective_w = %.9g\n", vfm_solution_objective_w(solution));
  print_metrics(m);
  std::printf("optimal = %s\n",
              vfm_solution_optimal(solution) != 0 ? "true" : "false");
  std::printf("nodes_explored = %" PRIu64 "\n",
              vfm_solution_nodes_explored(solution));
  std::printf("runtime_ms = %.6g\n", vfm_solution_runtime_ms(solution));

  if (!out_path.empty()) {
    if (vfm_status s = vfm_solution_save_assignment(solution,
                                                    out_path.c_str())) {
      return report_error(s);
    }
    std::fprintf(stderr, "wrote assignment to %s\n", out_path.c_str());
  }
  if (solver == "exact" && vfm_solution_optimal(solution) == 0) {
    std::fprintf(stderr,
                 "time budget exhausted before proving optimality; "
                 "best-effort assignment reported\n");
    return kExitNoProof;
  }
  return kExitOk;
}

int run_evaluate(const std::string& instance_path,
                 const std::string& assignment_path) {
  vfm_instance* instance = nullptr;
  if (vfm_status s = vfm_instance_load_file(instance_path.c_str(),
                                            &instance)) {
    return report_error(s);
  }
  std::unique_ptr<vfm_instance, decltype(&vfm_instance_free)> guard(
      instance, &vfm_instance_free);

  vfm_metrics m;
  char* violations = nullptr;
  const vfm_status status = vfm_evaluate_file(
      instance, assignment_path.c_str(), &m, &violations);
  if (status != VFM_OK && status != VFM_ERROR_INFEASIBLE) {
    return report_error(status);
  }
  print_metrics(m);
  std::printf("feasible = %s\n", status == VFM_OK ? "true" : "false");
  if (violations != nullptr) {
    std::fputs(violations, stdout);
    vfm_string_free(violations);
  }
  return status == VFM_OK ? kExitOk : kExitInfeasible;
}

bool parse_k_range(const std::string& text, std::int32_t& k_min,
                   std::int32_t& k_max) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      k_min = k_max = std::stoi(text);
    } else {
      k_min = std::stoi(text.substr(0, dots));
      k_max = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

int run_sweep(const CommonFlags& flags, const std::string& k_range,
              std::int32_t seed_count, const std::string& solver,
              double time_budget_s, std::uint64_t node_budget,
              std::int32_t jobs, const std::string& out_path,
              const std::string& summary_path) {
  ConfigHandle config;
  if (vfm_status s = resolve_config(flags, config.get())) {
    return report_error(s);
  }
  std::int32_t k_min = -1;
  std::int32_t k_max = -1;
  if (!k_range.empty() && !parse_k_range(k_range, k_min, k_max)) {
    std::fprintf(stderr, "error: --k expects '<a>..<b>' or '<k>', got '%s'\n",
                 k_range.c_str());
    return kExitUsage;
  }
  std::int32_t cells_failed = 0;
  std::int32_t not_proven = 0;
  const vfm_status status = vfm_sweep_run(
      config.get(), k_min, k_max, seed_count, solver.c_str(), time_budget_s,
      node_budget, jobs, out_path.c_str(),
      summary_path.empty() ? nullptr : summary_path.c_str(), &cells_failed,
      &not_proven);
  if (status != VFM_OK) {
    return report_error(status);
  }
  std::fprintf(stderr, "wrote sweep rows to %s\n", out_path.c_str());
  if (!summary_path.empty()) {
    std::fprintf(stderr, "wrote summary to %s\n", summary_path.c_str());
  }
  if (not_proven > 0) {
    std::fprintf(stderr,
                 "%d cell(s) hit the time budget without an optimality "
                 "proof\n",
                 not_proven);
    return kExitNoProof;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "vfogmatch: power-minimizing assignment of user requests to a "
      "vehicular fog or the central cloud"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vfm_version()));

  CommonFlags generate_flags;
  std::string generate_out;
  CLI::App* generate = app.add_subcommand(
      "generate", "Generate a seeded instance document");
  add_common_flags(generate, generate_flags);
  generate->add_option("--out", generate_out,
                       "Instance file to write (default: stdout)");

  std::string solve_instance;
  std::string solve_solver = "exact";
  double solve_time_budget = 60.0;
  std::uint64_t solve_node_budget = 10'000'000;
  std::string solve_out;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--instance", solve_instance, "Instance document")
      ->required();
  solve->add_option("--solver", solve_solver, "exact | greedy | brute");
  solve->add_option("--time-budget-s", solve_time_budget,
                    "Time budget for the exact solver, seconds");
  solve->add_option("--node-budget", solve_node_budget,
                    "Enumeration budget for the brute solver");
  solve->add_option("--out", solve_out, "Assignment file to write");

  std::string evaluate_instance;
  std::string evaluate_assignment;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Check an assignment file against an instance");
  evaluate->add_option("--instance", evaluate_instance, "Instance document")
      ->required();
  evaluate->add_option("--assignment", evaluate_assignment,
                       "Assignment listing")
      ->required();

  CommonFlags sweep_flags;
  std::string sweep_k;
  std::int32_t sweep_seeds = 10;
  std::string sweep_solver = "exact";
  double sweep_time_budget = 60.0;
  std::uint64_t sweep_node_budget = 10'000'000;
  std::int32_t sweep_jobs = 1;
  std::string sweep_out;
  std::string sweep_summary_out;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep packages-per-vehicle against seeds, emit CSV");
  add_common_flags(sweep, sweep_flags);
  sweep->add_option("--k", sweep_k,
                    "Package range '<a>..<b>' (default 0..library size)");
  sweep->add_option("--seeds", sweep_seeds,
                    "Number of seeds, starting at --seed");
  sweep->add_option("--solver", sweep_solver, "exact | greedy | brute");
  sweep->add_option("--time-budget-s", sweep_time_budget,
                    "Per-cell time budget, seconds");
  sweep->add_option("--node-budget", sweep_node_budget,
                    "Per-cell enumeration budget for brute");
  sweep->add_option("--jobs", sweep_jobs, "Worker threads");
  sweep->add_option("--out", sweep_out, "Rows CSV path")->required();
  sweep->add_option("--summary-out", sweep_summary_out,
                    "Per-k mean/min/max CSV path");

  CommonFlags show_flags;
  CLI::App* show = app.add_subcommand(
      "show-config", "Print the fully resolved configuration");
  add_common_flags(show, show_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\nRun with --help for usage.\n", e.what());
    return kExitUsage;
  }

  if (generate->parsed()) {
    return run_generate(generate_flags, generate_out);
  }
  if (solve->parsed()) {
    return run_solve(solve_instance, solve_solver, solve_time_budget,
                     solve_node_budget, solve_out);
  }
  if (evaluate->parsed()) {
    return run_evaluate(evaluate_instance, evaluate_assignment);
  }
  if (sweep->parsed()) {
    return run_sweep(sweep_flags, sweep_k, sweep_seeds, sweep_solver,
                     sweep_time_budget, sweep_node_budget, sweep_jobs,
                     sweep_out, sweep_summary_out);
  }
  if (show->parsed()) {
    return run_show_config(show_flags);
  }
  return kExitUsage;
}
