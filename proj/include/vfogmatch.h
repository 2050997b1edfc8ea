/* Copyright 2026 The vfogmatch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* vfogmatch C API.
 *
 * The library solves a capacitated request-to-vehicle assignment problem
 * with software matching: user requests are served either by parked
 * vehicles acting as a fog node or by the central cloud, minimizing total
 * network plus processing power.
 *
 * All objects are opaque handles created and destroyed by this API. Calls
 * return VFM_OK or an error code; vfm_last_error() holds a human-readable
 * message for the calling thread until its next API call. Strings returned
 * as char* are owned by the caller and must be released with
 * vfm_string_free().
 */

#ifndef VFOGMATCH_H
#define VFOGMATCH_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(VFM_BUILDING)
#define VFM_API __declspec(dllexport)
#else
#define VFM_API __declspec(dllimport)
#endif
#else
#if defined(VFM_BUILDING)
#define VFM_API __attribute__((visibility("default")))
#else
#define VFM_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vfm_config_s vfm_config;
typedef struct vfm_instance_s vfm_instance;
typedef struct vfm_solution_s vfm_solution;

typedef enum vfm_status {
  VFM_OK = 0,
  VFM_ERROR_INVALID_ARGUMENT = 1, /* null handle or bad configuration value */
  VFM_ERROR_PARSE = 2,            /* malformed document */
  VFM_ERROR_IO = 3,               /* file read/write failure */
  VFM_ERROR_INFEASIBLE = 4,       /* no feasible assignment exists */
  VFM_ERROR_SIZE = 5,             /* enumeration exceeds the node budget */
  VFM_ERROR_INTERNAL = 6
} vfm_status;

typedef struct vfm_metrics {
  double total_power_w;
  double network_power_w;
  double processing_power_w;
  int64_t cloud_workload_mhz;
  int64_t fog_workload_mhz;
  int64_t cloud_request_count;
  int64_t fog_request_count;
} vfm_metrics;

VFM_API const char* vfm_version(void);
VFM_API const char* vfm_status_name(vfm_status status);

/* Message for the most recent failing call on this thread; never NULL. */
VFM_API const char* vfm_last_error(void);

VFM_API void vfm_string_free(char* text);

/* --- configuration ------------------------------------------------- */

/* Fresh config holding the built-in defaults. NULL on allocation failure. */
VFM_API vfm_config* vfm_config_create(void);
VFM_API void vfm_config_free(vfm_config* config);
VFM_API vfm_config* vfm_config_clone(const vfm_config* config);

/* Overlay a config document (file or text) onto the handle. */
VFM_API vfm_status vfm_config_load_file(vfm_config* config, const char* path);
VFM_API vfm_status vfm_config_apply_text(vfm_config* config,
                                         const char* text);

/* Set one "<section>.<key>" entry, e.g. ("scenario.seed", "42"). */
VFM_API vfm_status vfm_config_set(vfm_config* config, const char* dotted_key,
                                  const char* value);

/* Fully resolved config document; caller frees. NULL on error. */
VFM_API char* vfm_config_to_text(const vfm_config* config);

/* --- instances ------------------------------------------------------ */

VFM_API vfm_status vfm_instance_build(const vfm_config* config,
                                      vfm_instance** out);
VFM_API vfm_status vfm_instance_parse(const char* text, vfm_instance** out);
VFM_API vfm_status vfm_instance_load_file(const char* path,
                                          vfm_instance** out);
VFM_API char* vfm_instance_to_text(const vfm_instance* instance);
VFM_API vfm_status vfm_instance_save_file(const vfm_instance* instance,
                                          const char* path);
VFM_API void vfm_instance_free(vfm_instance* instance);

VFM_API int32_t vfm_instance_request_count(const vfm_instance* instance);
VFM_API int32_t vfm_instance_vehicle_count(const vfm_instance* instance);
VFM_API int64_t vfm_instance_total_demand_mhz(const vfm_instance* instance);

/* --- solving --------------------------------------------------------- */

/* solver is "exact", "greedy", or "brute". time_budget_s bounds the exact
 * search; node_budget bounds brute enumeration (0 means the defaults of
 * 60 s and 1e7). Returns VFM_ERROR_INFEASIBLE when no assignment satisfies
 * the constraints. */
VFM_API vfm_status vfm_solve(const vfm_instance* instance, const char* solver,
                             double time_budget_s, uint64_t node_budget,
                             vfm_solution** out);
VFM_API void vfm_solution_free(vfm_solution* solution);

VFM_API double vfm_solution_objective_w(const vfm_solution* solution);
/* 1 when optimality was proven within budget, else 0. */
VFM_API int vfm_solution_optimal(const vfm_solution* solution);
VFM_API uint64_t vfm_solution_nodes_explored(const vfm_solution* solution);
VFM_API double vfm_solution_runtime_ms(const vfm_solution* solution);
VFM_API vfm_status vfm_solution_metrics(const vfm_solution* solution,
                                        vfm_metrics* out);
/* Target of one request: the vehicle id, or -1 for the cloud
 * (-2 on bad arguments). */
VFM_API int32_t vfm_solution_target(const vfm_solution* solution,
                                    int32_t request_id);
/* Assignment listing, one `request_id,target` line per request. */
VFM_API char* vfm_solution_assignment_text(const vfm_solution* solution);
VFM_API vfm_status vfm_solution_save_assignment(const vfm_solution* solution,
                                                const char* path);

/* --- evaluation and experiments -------------------------------------- */

/* Metrics of the forced all-cloud assignment (the comparison baseline). */
VFM_API vfm_status vfm_baseline_cloud_only(const vfm_instance* instance,
                                           vfm_metrics* out);

/* Evaluate an assignment listing against an instance. Fills metrics either
 * way. Feasible: VFM_OK and *violations_out = NULL. Infeasible:
 * VFM_ERROR_INFEASIBLE and, when violations_out is non-NULL, a newline-
 * separated report the caller frees. */
VFM_API vfm_status vfm_evaluate_text(const vfm_instance* instance,
                                     const char* assignment_text,
                                     vfm_metrics* out, char** violations_out);
VFM_API vfm_status vfm_evaluate_file(const vfm_instance* instance,
                                     const char* assignment_path,
                                     vfm_metrics* out, char** violations_out);

/* Package-count sweep over k = k_min..k_max and seed_count seeds starting
 * at the config's scenario seed. Writes the per-cell CSV to rows_csv_path
 * and, when summary_csv_path is non-NULL, the per-k mean/min/max table.
 * cells_failed_out (optional) receives the number of cells that raised an
 * error; their rows are omitted and the first failure decides the return
 * status. not_proven_out (optional) receives the number of rows solved
 * without an optimality proof. */
VFM_API vfm_status vfm_sweep_run(const vfm_config* config, int32_t k_min,
                                 int32_t k_max, int32_t seed_count,
                                 const char* solver, double time_budget_s,
                                 uint64_t node_budget, int32_t jobs,
                                 const char* rows_csv_path,
                                 const char* summary_csv_path,
                                 int32_t* cells_failed_out,
                                 int32_t* not_proven_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VFOGMATCH_H */
