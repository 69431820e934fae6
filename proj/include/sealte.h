/*
 * Copyright 2026 sealte developers
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

/* sealte — LTE-over-sea downlink resource block allocation simulator.
 *
 * C interface to the simulator core. All objects are opaque handles created
 * and destroyed through this API; every fallible call returns a
 * sealte_status, with a human-readable message available from
 * sealte_last_error() (thread-local, valid until the next failing call on
 * the same thread). Strings returned through char** out-parameters are
 * heap-allocated and must be released with sealte_string_free().
 */

#ifndef SEALTE_H
#define SEALTE_H

#include <stdint.h>

#if defined(_WIN32)
#define SEALTE_API __declspec(dllexport)
#else
#define SEALTE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. The first four values double as CLI exit codes. */
typedef enum sealte_status {
    SEALTE_OK = 0,
    SEALTE_ERR_INFEASIBLE = 1,      /* a user cannot be served / demand unreachable */
    SEALTE_ERR_CONFIG = 2,          /* bad config file, field value, or argument range */
    SEALTE_ERR_ORACLE_MISMATCH = 3, /* exact solver disagrees with the brute-force oracle */
    SEALTE_ERR_INVALID = 4,         /* null handle, bad index, or oracle size contract violated */
    SEALTE_ERR_INTERNAL = 5
} sealte_status;

/* Path loss model used for the link budget. */
typedef enum sealte_model {
    SEALTE_MODEL_2RAY = 0,
    SEALTE_MODEL_2RAY_MOD = 1,
    SEALTE_MODEL_3RAY = 2
} sealte_model;

/* Resource block allocation method. */
typedef enum sealte_method {
    SEALTE_METHOD_MAXMIN = 0,
    SEALTE_METHOD_ROUND_ROBIN = 1,
    SEALTE_METHOD_OPPORTUNISTIC = 2
} sealte_method;

typedef struct sealte_scenario sealte_scenario;
typedef struct sealte_result sealte_result;
typedef struct sealte_report sealte_report;

SEALTE_API const char *sealte_version(void);
SEALTE_API const char *sealte_status_name(sealte_status status);
SEALTE_API const char *sealte_last_error(void);
SEALTE_API void sealte_string_free(char *s);

/* ---- scenario ----------------------------------------------------------
 * A scenario is the two-port strait geometry plus all RF/system parameters.
 * sealte_scenario_create builds the default geometry for a given ship
 * count; _load/_parse read a JSON config (see README for the schema);
 * _override_json merges a JSON fragment of config keys into an existing
 * scenario and rebuilds it. Unknown config keys are collected as warnings,
 * retrievable with sealte_scenario_warnings (empty string when none).
 */
SEALTE_API sealte_status sealte_scenario_create(int num_ships, sealte_scenario **out);
SEALTE_API sealte_status sealte_scenario_load(const char *path, sealte_scenario **out);
SEALTE_API sealte_status sealte_scenario_parse(const char *config_json, sealte_scenario **out);
SEALTE_API sealte_status sealte_scenario_override_json(sealte_scenario *scenario,
                                                       const char *config_json);
SEALTE_API void sealte_scenario_free(sealte_scenario *scenario);

SEALTE_API int sealte_scenario_num_enodebs(const sealte_scenario *scenario);
SEALTE_API int sealte_scenario_num_ships(const sealte_scenario *scenario);
SEALTE_API int sealte_scenario_num_rbs(const sealte_scenario *scenario);
SEALTE_API const char *sealte_scenario_warnings(const sealte_scenario *scenario);

/* ---- single allocation -------------------------------------------------
 * Runs the full pipeline (path loss -> SINR -> MCS -> throughput matrix ->
 * allocator) for one method. User indices are 0-based; eNodeB ids in
 * results are 1-based. Throughputs are integer bits per second.
 */
SEALTE_API sealte_status sealte_solve(const sealte_scenario *scenario, sealte_model model,
                                      sealte_method method, sealte_result **out);
SEALTE_API void sealte_result_free(sealte_result *result);

SEALTE_API int sealte_result_num_users(const sealte_result *result);
SEALTE_API int64_t sealte_result_phi_bps(const sealte_result *result);
SEALTE_API double sealte_result_jain(const sealte_result *result);
SEALTE_API int64_t sealte_result_user_throughput_bps(const sealte_result *result, int user);
SEALTE_API int sealte_result_serving_enodeb(const sealte_result *result, int user);
SEALTE_API int sealte_result_user_rbs(const sealte_result *result, int user);
SEALTE_API sealte_status sealte_result_to_json(const sealte_result *result, char **out_json);

/* Re-solves with the exhaustive brute-force oracle and compares the exact
 * max-min solver's phi against it. Returns SEALTE_OK on agreement,
 * SEALTE_ERR_ORACLE_MISMATCH on disagreement, and SEALTE_ERR_INVALID when
 * the instance exceeds the oracle size contract (I<=3, J<=6, N<=10). */
SEALTE_API sealte_status sealte_oracle_check(const sealte_scenario *scenario, sealte_model model);

/* ---- path loss curve ----------------------------------------------------
 * CSV with header d_m,L_2ray_db,L_2raymod_db,L_3ray_db over [d_min, d_max]
 * with the given number of points, linearly or log spaced. Heights, duct
 * height and wavelength come from the scenario.
 */
SEALTE_API sealte_status sealte_pathloss_curve_csv(const sealte_scenario *scenario,
                                                   double d_min_m, double d_max_m, int points,
                                                   int log_spaced, char **out_csv);

/* ---- density sweep ------------------------------------------------------
 * Rebuilds the scenario at each ship count, runs every requested method,
 * and assembles a comparison report. Rows are ordered by (num_ships,
 * method) with methods in canonical order (maxmin, roundrobin,
 * opportunistic) regardless of the order passed. Results borrowed through
 * sealte_report_result stay valid until the report is freed.
 */
SEALTE_API sealte_status sealte_sweep(const sealte_scenario *base, const int *ship_counts,
                                      int num_counts, sealte_model model,
                                      const sealte_method *methods, int num_methods,
                                      sealte_report **out);
SEALTE_API void sealte_report_free(sealte_report *report);

SEALTE_API int sealte_report_num_densities(const sealte_report *report);
SEALTE_API int sealte_report_num_methods(const sealte_report *report);
SEALTE_API int sealte_report_density_at(const sealte_report *report, int density_index);
SEALTE_API sealte_method sealte_report_method_at(const sealte_report *report, int method_index);
SEALTE_API sealte_status sealte_report_result(const sealte_report *report, int density_index,
                                              int method_index, const sealte_result **out_result);
SEALTE_API sealte_status sealte_report_fairness_csv(const sealte_report *report, char **out_csv);
SEALTE_API sealte_status sealte_report_per_user_csv(const sealte_report *report, char **out_csv);

/* MCS table (15 rows) as CSV, for golden-file checks and external tooling. */
SEALTE_API sealte_status sealte_mcs_table_csv(char **out_csv);

#ifdef __cplusplus
}
#endif

#endif /* SEALTE_H */
