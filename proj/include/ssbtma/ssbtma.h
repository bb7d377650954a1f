/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The ssbtma Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libssbtma.
 *
 * Every fallible call returns an ssbtma_status. On failure the message is kept per thread and can
 * be read with ssbtma_last_error() until the next failing call on that thread. Objects are opaque
 * handles released with the matching *_free function; passing NULL to a *_free function is allowed.
 * Array outputs take a caller buffer and its capacity; SSBTMA_ERR_BUFFER is returned when the
 * capacity is too small, with *written (if given) set to the required length.
 */

#ifndef SSBTMA_H
#define SSBTMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(SSBTMA_BUILDING_LIBRARY)
#define SSBTMA_API __attribute__((visibility("default")))
#else
#define SSBTMA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssbtma_status
{
    SSBTMA_OK = 0,
    SSBTMA_ERR_VALIDATION = 1, /* bad argument or configuration */
    SSBTMA_ERR_DOMAIN = 2,     /* request outside the model's domain */
    SSBTMA_ERR_IO = 3,
    SSBTMA_ERR_NULL = 4, /* required pointer was NULL */
    SSBTMA_ERR_BUFFER = 5,
    SSBTMA_ERR_NOT_FOUND = 6,
    SSBTMA_ERR_INTERNAL = 7
} ssbtma_status;

SSBTMA_API const char *ssbtma_version(void);
SSBTMA_API const char *ssbtma_status_name(ssbtma_status status);
SSBTMA_API const char *ssbtma_last_error(void);

/* Strings returned through char ** are heap copies owned by the caller. */
SSBTMA_API void ssbtma_string_free(char *text);

/* ---- switching pulses ---------------------------------------------------------------------- */

typedef enum ssbtma_pulse_kind
{
    SSBTMA_PULSE_TWO_STATE = 0,
    SSBTMA_PULSE_TRI_STATE = 1,
    SSBTMA_PULSE_STAIR_STEP = 2,
    SSBTMA_PULSE_RECT = 3,
    SSBTMA_PULSE_TRAPEZOID = 4
} ssbtma_pulse_kind;

typedef enum ssbtma_ramp_alignment
{
    SSBTMA_RAMP_CENTERED = 0,
    SSBTMA_RAMP_LEADING = 1,
    SSBTMA_RAMP_TRAILING = 2
} ssbtma_ramp_alignment;

typedef struct ssbtma_pulse_spec
{
    int kind; /* ssbtma_pulse_kind */
    double period;
    double delay;
    double duty;
    double rise_fall;
    int alignment; /* ssbtma_ramp_alignment */
} ssbtma_pulse_spec;

SSBTMA_API void ssbtma_pulse_spec_default(ssbtma_pulse_spec *spec);
SSBTMA_API ssbtma_status ssbtma_pulse_sample(const ssbtma_pulse_spec *spec, double t, double *level);
SSBTMA_API ssbtma_status ssbtma_pulse_coefficient(const ssbtma_pulse_spec *spec, int order, double *re, double *im);
SSBTMA_API ssbtma_status ssbtma_pulse_quadrature(const ssbtma_pulse_spec *spec, int order, size_t samples,
                                                 double *re, double *im);
SSBTMA_API int ssbtma_in_upsilon(int q);
SSBTMA_API int ssbtma_in_upsilon1(int q);
SSBTMA_API int ssbtma_in_upsilon2(int q);

/* ---- efficiency ---------------------------------------------------------------------------- */

typedef enum ssbtma_a0_method
{
    SSBTMA_A0_POLYGAMMA = 0,
    SSBTMA_A0_DIRECT_SUM = 1
} ssbtma_a0_method;

typedef struct ssbtma_efficiency
{
    double p_useful;
    double p_radiated;
    double p_static;
    double eta_tma;
    double eta_bfn;
    double eta;
} ssbtma_efficiency;

SSBTMA_API ssbtma_status ssbtma_polygamma1(double z, double *value);
SSBTMA_API ssbtma_status ssbtma_a0_constant(int method, long long q_max, double *value);
SSBTMA_API ssbtma_status ssbtma_efficiency_closed(const double *xi, size_t n, ssbtma_efficiency *out);

/* Explicit line sums; k_max/q_max <= 0 select the default truncation. */
SSBTMA_API ssbtma_status ssbtma_efficiency_numeric(const double *xi, size_t n, double rise_fall, int alignment,
                                                   double tau, long long k_max, long long q_max,
                                                   ssbtma_efficiency *out);

/* ---- array geometry ------------------------------------------------------------------------ */

typedef struct ssbtma_array ssbtma_array;

SSBTMA_API ssbtma_status ssbtma_array_uniform(size_t n, double spacing, ssbtma_array **out);
SSBTMA_API ssbtma_status ssbtma_array_from_positions(const double *z, size_t n, ssbtma_array **out);
SSBTMA_API ssbtma_status ssbtma_array_set_tau(ssbtma_array *array, double tau);
SSBTMA_API size_t ssbtma_array_size(const ssbtma_array *array);
SSBTMA_API void ssbtma_array_free(ssbtma_array *array);

SSBTMA_API ssbtma_status ssbtma_steering_delays(const ssbtma_array *array, double theta_scan_deg, double *delays,
                                                size_t capacity, size_t *written);

/* ---- radiation patterns -------------------------------------------------------------------- */

typedef struct ssbtma_pattern_options
{
    double grid_step_deg;
    int k_max;
    int q_max;
    double rise_fall;
    int alignment;
} ssbtma_pattern_options;

typedef struct ssbtma_pattern_metrics
{
    double theta_scan_deg;
    double sll_db;
    double hpbw_deg;
    double peak_angle_deg;
    double max_unwanted_db;
    double max_am_harmonic_db;
} ssbtma_pattern_metrics;

typedef struct ssbtma_pattern ssbtma_pattern;

SSBTMA_API void ssbtma_pattern_options_default(ssbtma_pattern_options *options);

/* options may be NULL for defaults. */
SSBTMA_API ssbtma_status ssbtma_pattern_build(const ssbtma_array *array, double theta_scan_deg, const double *xi,
                                              size_t n, const ssbtma_pattern_options *options, ssbtma_pattern **out);
SSBTMA_API size_t ssbtma_pattern_theta_count(const ssbtma_pattern *pattern);
SSBTMA_API size_t ssbtma_pattern_offset_count(const ssbtma_pattern *pattern);
SSBTMA_API ssbtma_status ssbtma_pattern_theta(const ssbtma_pattern *pattern, double *out, size_t capacity,
                                              size_t *written);
SSBTMA_API ssbtma_status ssbtma_pattern_offsets(const ssbtma_pattern *pattern, int *out, size_t capacity,
                                                size_t *written);
SSBTMA_API ssbtma_status ssbtma_pattern_row(const ssbtma_pattern *pattern, int offset, double *out, size_t capacity,
                                            size_t *written);
SSBTMA_API ssbtma_status ssbtma_pattern_harmonic_peak(const ssbtma_pattern *pattern, int offset, double *level_db);
SSBTMA_API ssbtma_status ssbtma_pattern_side_lobe_level(const ssbtma_pattern *pattern, int offset, double *sll_db);
SSBTMA_API ssbtma_status ssbtma_pattern_get_metrics(const ssbtma_pattern *pattern, double theta_scan_deg,
                                                    ssbtma_pattern_metrics *out);
SSBTMA_API void ssbtma_pattern_free(ssbtma_pattern *pattern);

/* ---- duty-cycle optimizer ------------------------------------------------------------------ */

typedef struct ssbtma_optimizer_config
{
    double sll_target;
    double harmonic_threshold;
    int symmetric;
    uint64_t seed;
    double initial_temp;
    double cooling_rate;
    int iters_per_temp;
    double min_temp;
    double step_size;
    double weight_sll;
    double weight_harmonic;
    double weight_efficiency;
    double search_grid_step;
    int search_k_max;
    const double *initial_xi; /* NULL: all ones */
    size_t initial_xi_len;
} ssbtma_optimizer_config;

typedef struct ssbtma_optimizer_result ssbtma_optimizer_result;

SSBTMA_API void ssbtma_optimizer_config_default(ssbtma_optimizer_config *config);
SSBTMA_API ssbtma_status ssbtma_cost(const ssbtma_array *array, const ssbtma_optimizer_config *config,
                                     const double *xi, size_t n, double *cost);
SSBTMA_API ssbtma_status ssbtma_optimize(const ssbtma_array *array, const ssbtma_optimizer_config *config,
                                         ssbtma_optimizer_result **out);
SSBTMA_API ssbtma_status ssbtma_optimizer_result_xi(const ssbtma_optimizer_result *result, double *out,
                                                    size_t capacity, size_t *written);
SSBTMA_API ssbtma_status ssbtma_optimizer_result_trace(const ssbtma_optimizer_result *result, double *out,
                                                       size_t capacity, size_t *written);
SSBTMA_API double ssbtma_optimizer_result_sll(const ssbtma_optimizer_result *result);
SSBTMA_API double ssbtma_optimizer_result_harmonic_max(const ssbtma_optimizer_result *result);
SSBTMA_API double ssbtma_optimizer_result_best_cost(const ssbtma_optimizer_result *result);
SSBTMA_API size_t ssbtma_optimizer_result_iterations(const ssbtma_optimizer_result *result);
SSBTMA_API int ssbtma_optimizer_result_converged(const ssbtma_optimizer_result *result);
SSBTMA_API void ssbtma_optimizer_result_free(ssbtma_optimizer_result *result);

/* ---- scenarios and runs -------------------------------------------------------------------- */

typedef struct ssbtma_scenario ssbtma_scenario;
typedef struct ssbtma_report ssbtma_report;

SSBTMA_API ssbtma_status ssbtma_scenario_load_file(const char *path, ssbtma_scenario **out);
SSBTMA_API ssbtma_status ssbtma_scenario_load_string(const char *yaml, const char *origin, ssbtma_scenario **out);
SSBTMA_API ssbtma_status ssbtma_scenario_preset(const char *figure, ssbtma_scenario **out);
SSBTMA_API size_t ssbtma_preset_count(void);
SSBTMA_API const char *ssbtma_preset_name(size_t index);

/* Dotted key such as "array.elements"; value is parsed as YAML ("30", "[0.5, 1]", "table2"). */
SSBTMA_API ssbtma_status ssbtma_scenario_set(ssbtma_scenario *scenario, const char *key, const char *value);

/* Apply n overrides together; only the final state is validated. The scenario is unchanged on error. */
SSBTMA_API ssbtma_status ssbtma_scenario_set_many(ssbtma_scenario *scenario, const char *const *keys,
                                                  const char *const *values, size_t n);
SSBTMA_API ssbtma_status ssbtma_scenario_serialize(const ssbtma_scenario *scenario, char **yaml);
SSBTMA_API const char *ssbtma_scenario_name(const ssbtma_scenario *scenario);
SSBTMA_API const char *ssbtma_scenario_mode(const ssbtma_scenario *scenario);
SSBTMA_API void ssbtma_scenario_free(ssbtma_scenario *scenario);

typedef struct ssbtma_run_options
{
    int efficiency_only;
    int write_files;
    const char *output_dir; /* NULL: the scenario's output.dir */
} ssbtma_run_options;

typedef struct ssbtma_check_result
{
    const char *metric; /* valid while the report lives */
    int has_value;
    double value;
    int passed;
} ssbtma_check_result;

SSBTMA_API void ssbtma_run_options_default(ssbtma_run_options *options);
SSBTMA_API ssbtma_status ssbtma_run(const ssbtma_scenario *scenario, const ssbtma_run_options *options,
                                    ssbtma_report **out);
SSBTMA_API ssbtma_status ssbtma_report_json(const ssbtma_report *report, char **json);
SSBTMA_API ssbtma_status ssbtma_report_value(const ssbtma_report *report, const char *metric, double *value);
SSBTMA_API size_t ssbtma_report_check_count(const ssbtma_report *report);
SSBTMA_API ssbtma_status ssbtma_report_check(const ssbtma_report *report, size_t index, ssbtma_check_result *out);
SSBTMA_API int ssbtma_report_checks_passed(const ssbtma_report *report);
SSBTMA_API size_t ssbtma_report_artifact_count(const ssbtma_report *report);
SSBTMA_API const char *ssbtma_report_artifact(const ssbtma_report *report, size_t index);
SSBTMA_API void ssbtma_report_free(ssbtma_report *report);

#ifdef __cplusplus
}
#endif

#endif
