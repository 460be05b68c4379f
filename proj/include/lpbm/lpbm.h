/* Copyright (C) 2026 The lpbm Authors
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef LPBM_LPBM_H
#define LPBM_LPBM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LPBM_API __declspec(dllexport)
#else
#define LPBM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpbm_status {
    LPBM_OK = 0,
    LPBM_ERR_INVALID_ARGUMENT = 1, /* null handle or pointer, bad size */
    LPBM_ERR_DOMAIN = 2,           /* arguments outside a precondition */
    LPBM_ERR_UNSUPPORTED = 3,      /* operation not available for this input */
    LPBM_ERR_NUMERICAL = 4,
    LPBM_ERR_CONFIG = 5, /* scenario file problem; message carries the JSON pointer */
    LPBM_ERR_IO = 6,
    LPBM_ERR_RUNTIME = 7
} lpbm_status;

typedef struct lpbm_body lpbm_body;
typedef struct lpbm_density lpbm_density;
typedef struct lpbm_scenario lpbm_scenario;
typedef struct lpbm_run lpbm_run;

/* Receives output text; may be called several times per request. */
typedef void (*lpbm_write_fn)(const char* data, size_t size, void* user);

LPBM_API const char* lpbm_version(void);
LPBM_API const char* lpbm_status_string(lpbm_status status);
/* Message of the last failed call on this thread; "" after success. */
LPBM_API const char* lpbm_last_error(void);

/* Extended reals are passed as doubles; +-INFINITY are the infinite points. */

/* Weighted power mean M_p^lambda(a, b) of non-negative a, b. */
LPBM_API lpbm_status lpbm_p_mean(double p, double lambda, double a, double b, double* out);
/* (sum_i 1/p_i + 1/alpha)^-1 with the extended-real conventions. */
LPBM_API lpbm_status lpbm_gamma_compose(const double* p, size_t n, double alpha, double* out);

/* ---- bodies ---- */

LPBM_API lpbm_status lpbm_body_lq_ball(double q, const double* radii, int dim, lpbm_body** out);
LPBM_API lpbm_status lpbm_body_box(const double* radii, int dim, lpbm_body** out);
/* `normals` holds count * dim values, row-major. */
LPBM_API lpbm_status lpbm_body_h_polytope(const double* normals, const double* offsets, int count, int dim,
                                          lpbm_body** out);
/* Grid image of (1-lambda) a +_p lambda b; p holds dim exponents. */
LPBM_API lpbm_status lpbm_body_coord_combine(const lpbm_body* a, const lpbm_body* b, double lambda, const double* p,
                                             int resolution, lpbm_body** out);
LPBM_API lpbm_status lpbm_body_firey_combine(const lpbm_body* a, const lpbm_body* b, double lambda, double p,
                                             int directions, lpbm_body** out);
LPBM_API lpbm_status lpbm_body_minkowski_combine(const lpbm_body* a, const lpbm_body* b, double lambda,
                                                 lpbm_body** out);
LPBM_API void lpbm_body_free(lpbm_body* body);

LPBM_API int lpbm_body_dim(const lpbm_body* body);
LPBM_API lpbm_status lpbm_body_contains(const lpbm_body* body, const double* x, int* out);
LPBM_API lpbm_status lpbm_body_support(const lpbm_body* body, const double* u, double* out);
/* JSON description. */
LPBM_API lpbm_status lpbm_body_describe(const lpbm_body* body, lpbm_write_fn write, void* user);

/* ---- densities and measures ---- */

LPBM_API lpbm_status lpbm_density_lebesgue(int dim, lpbm_density** out);
LPBM_API lpbm_status lpbm_density_gaussian(int dim, lpbm_density** out);
LPBM_API lpbm_status lpbm_density_power_convex(int dim, double alpha, double beta, lpbm_density** out);
LPBM_API void lpbm_density_free(lpbm_density* density);

/* resolution 0 picks the dimension default. */
LPBM_API lpbm_status lpbm_measure(const lpbm_body* body, const lpbm_density* density, int resolution, double* value,
                                  double* abs_error);

/* ---- scenarios ---- */

/* `seed` may be NULL; otherwise it replaces the scenario's top-level seed. */
LPBM_API lpbm_status lpbm_scenario_load(const char* path, const uint64_t* seed, lpbm_scenario** out);
LPBM_API lpbm_status lpbm_scenario_parse(const char* text, const uint64_t* seed, lpbm_scenario** out);
LPBM_API void lpbm_scenario_free(lpbm_scenario* scenario);
/* Scenario with all defaults written out. */
LPBM_API lpbm_status lpbm_scenario_dump(const lpbm_scenario* scenario, lpbm_write_fn write, void* user);
LPBM_API lpbm_status lpbm_scenario_output_dir(const lpbm_scenario* scenario, lpbm_write_fn write, void* user);
LPBM_API size_t lpbm_scenario_check_count(const lpbm_scenario* scenario);
/* CSV with columns t,value,abs_error. */
LPBM_API lpbm_status lpbm_scenario_emit_curve(const lpbm_scenario* scenario, const char* curve, lpbm_write_fn write,
                                              void* user);

/* Runs every check; up to `jobs` run concurrently. */
LPBM_API lpbm_status lpbm_scenario_run(const lpbm_scenario* scenario, int jobs, lpbm_run** out);
LPBM_API void lpbm_run_free(lpbm_run* run);
/* 0 when no gating check failed (boundary fails only when strict), else 1. */
LPBM_API int lpbm_run_exit_status(const lpbm_run* run, int strict);
LPBM_API size_t lpbm_run_report_count(const lpbm_run* run);
LPBM_API lpbm_status lpbm_run_report_json(const lpbm_run* run, lpbm_write_fn write, void* user);
LPBM_API lpbm_status lpbm_run_detail_csv(const lpbm_run* run, lpbm_write_fn write, void* user);
LPBM_API lpbm_status lpbm_run_summary(const lpbm_run* run, int strict, lpbm_write_fn write, void* user);

/* Check names with their anchors, then the exploratory entries. */
LPBM_API lpbm_status lpbm_list_checks(lpbm_write_fn write, void* user);

#ifdef __cplusplus
}
#endif

#endif /* LPBM_LPBM_H */
