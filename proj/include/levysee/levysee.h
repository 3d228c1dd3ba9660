/*
 * Copyright 2026 The levysee Authors
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

/* C interface to levysee. All functions are thread-safe for distinct handles;
 * on failure they return a nonzero lsee_status and lsee_last_error() describes
 * the failure on the calling thread. */
#ifndef LEVYSEE_LEVYSEE_H
#define LEVYSEE_LEVYSEE_H

#include <stddef.h>
#include <stdint.h>

#if defined(LEVYSEE_BUILDING_LIBRARY)
#define LSEE_API __attribute__((visibility("default")))
#else
#define LSEE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lsee_status {
    LSEE_OK = 0,
    LSEE_ERR_INVALID_ARGUMENT = 1,
    LSEE_ERR_CONFIG = 2,
    LSEE_ERR_NOT_CONVERGED = 3,
    LSEE_ERR_DIVERGED = 4,
    LSEE_ERR_IO = 5,
    LSEE_ERR_INTERNAL = 6
} lsee_status;

typedef struct lsee_config lsee_config_t;
typedef struct lsee_result lsee_result_t;

LSEE_API const char* lsee_version(void);
/* Message of the last failed call on this thread ("" if none). */
LSEE_API const char* lsee_last_error(void);

/* Configuration: INI text with [experiment], [system], [monte_carlo],
 * [solver], [stability] and [validate] sections. */
LSEE_API lsee_status lsee_config_load(const char* path, lsee_config_t** out);
LSEE_API lsee_status lsee_config_parse(const char* text, lsee_config_t** out);
LSEE_API lsee_status lsee_config_new(lsee_config_t** out);
/* key is "section.key", e.g. "experiment.seed". */
LSEE_API lsee_status lsee_config_set(lsee_config_t* cfg, const char* key, const char* value);
/* Validates without running; on failure the message names the field. */
LSEE_API lsee_status lsee_config_validate(const lsee_config_t* cfg);
LSEE_API void lsee_config_free(lsee_config_t* cfg);

LSEE_API lsee_status lsee_experiment_run(const lsee_config_t* cfg, lsee_result_t** out);
/* 0 when every asserted inequality held, 2 otherwise. */
LSEE_API int lsee_result_exit_code(const lsee_result_t* result);
LSEE_API const char* lsee_result_summary_json(const lsee_result_t* result);
LSEE_API size_t lsee_result_file_count(const lsee_result_t* result);
LSEE_API const char* lsee_result_file_name(const lsee_result_t* result, size_t index);
LSEE_API const char* lsee_result_file_contents(const lsee_result_t* result, size_t index);
/* dir NULL: the configured experiment.out directory. */
LSEE_API lsee_status lsee_result_write(const lsee_result_t* result, const char* dir);
LSEE_API const char* lsee_result_output_dir(const lsee_result_t* result);
LSEE_API void lsee_result_free(lsee_result_t* result);

/* Stability exponent for p >= 2 and C, F >= 0. */
LSEE_API lsee_status lsee_gamma_constant(double p, double alpha, double M, double C, double F, double* gamma);
/* lhs/rhs of the p-th power gap inequality for x, y in R^dim, p >= 2. */
LSEE_API lsee_status lsee_pth_power_gap_bound(const double* x, const double* y, size_t dim, double p,
                                              double* lhs, double* rhs);
/* out = e^{t diag(eigenvalues)} x; out may alias x. */
LSEE_API lsee_status lsee_semigroup_apply(const double* eigenvalues, size_t dim, double t, const double* x,
                                          double* out);

#ifdef __cplusplus
}
#endif

#endif
