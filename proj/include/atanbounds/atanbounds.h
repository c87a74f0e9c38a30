// Copyright 2026 The atanbounds Authors
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

/*
 * C interface to the atanbounds library.
 *
 * Plain functions return their result directly. Anything that can fail
 * returns an atb_status and writes results through out-pointers; the
 * message of the most recent failure on the calling thread is available
 * from atb_last_error(). Certification reports and series checks are
 * opaque handles released with their matching *_free function.
 */

#ifndef ATANBOUNDS_ATANBOUNDS_H
#define ATANBOUNDS_ATANBOUNDS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(ATANBOUNDS_BUILDING)
#    define ATB_API __declspec(dllexport)
#  else
#    define ATB_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && __GNUC__ >= 4
#  define ATB_API __attribute__((visibility("default")))
#else
#  define ATB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum atb_status {
  ATB_OK = 0,
  ATB_ERR_DOMAIN = 1,           /* invalid coefficients, atan2(0, 0) */
  ATB_ERR_INVALID_ARGUMENT = 2, /* bad range, count, index or enum */
  ATB_ERR_UNSUPPORTED = 3,      /* e.g. series of a custom triple */
  ATB_ERR_IO = 4,
  ATB_ERR_NULL_POINTER = 5,
  ATB_ERR_INTERNAL = 6
} atb_status;

typedef enum atb_bound_kind {
  ATB_SHARP_LOWER = 0,
  ATB_SHARP_UPPER = 1,
  ATB_CLASSIC_SHAFER = 2,
  ATB_CUSTOM = 3,
  ATB_REFERENCE = 4 /* arctan itself; only meaningful for series queries */
} atb_bound_kind;

typedef enum atb_side { ATB_LOWER = 0, ATB_UPPER = 1 } atb_side;

typedef enum atb_grid {
  ATB_GRID_AUTO = -1, /* log when lo > 0, mixed otherwise */
  ATB_GRID_LOG = 0,
  ATB_GRID_UNIFORM = 1,
  ATB_GRID_MIXED = 2
} atb_grid;

typedef struct atb_coefficients {
  double c1;
  double c2;
  double c3;
} atb_coefficients;

typedef struct atb_series {
  double taylor[3];        /* coefficients of x, x^3, x^5 */
  double asymptotic[3];    /* coefficients of x^-k ... */
  int asymptotic_orders[3]; /* ... for these k */
} atb_series;

typedef struct atb_sample {
  double x;
  double f;
  double g;
  double h;
  double delta_f;
  double delta_h;
  double r_f;
  double r_h;
  double env_max;
  double env_min;
} atb_sample;

typedef struct atb_certified {
  double value;
  double error;
  int absolute; /* nonzero: error is absolute rather than relative */
} atb_certified;

ATB_API const char* atb_version(void);
ATB_API const char* atb_status_string(atb_status status);
/* Message of the last failed call on this thread; "" if none. */
ATB_API const char* atb_last_error(void);

/* ---- bounds ------------------------------------------------------------ */

ATB_API atb_status atb_resolve_coefficients(atb_bound_kind kind, atb_coefficients* out);
ATB_API atb_status atb_eval_shafer(const atb_coefficients* c, double x, double* out);
ATB_API atb_status atb_first_derivative(const atb_coefficients* c, double x, double* out);
ATB_API atb_status atb_second_derivative(const atb_coefficients* c, double x, double* out);

ATB_API double atb_lower_bound(double x);
ATB_API double atb_upper_bound(double x);
ATB_API double atb_reference_arctan(double x);
ATB_API double atb_delta_f(double x);
ATB_API double atb_delta_h(double x);
/* The two functions below return NaN for an unknown side. */
ATB_API double atb_difference_slope(atb_side side, double x);
ATB_API double atb_relative_error(atb_side side, double x);
ATB_API double atb_envelope_max(double x);
ATB_API double atb_envelope_min(double x);
ATB_API void atb_evaluate_sample(double x, atb_sample* out);

/* Writes {-x*, 0, x*}. */
ATB_API atb_status atb_critical_points(atb_side side, double out[3]);
ATB_API atb_status atb_series_coefficients(atb_bound_kind kind, atb_series* out);
ATB_API void atb_pi_squared_bounds(double* lo, double* hi);
ATB_API void atb_discriminant_values(double* y_lower, double* y_upper);

/* ---- kernels ----------------------------------------------------------- */

ATB_API atb_certified atb_midpoint_arctan(double x);
ATB_API atb_status atb_atan2_approx(double y, double x, atb_certified* out);

/* ---- grids ------------------------------------------------------------- */

/* Writes up to `capacity` points; *count receives the full grid size, so a
 * call with capacity 0 sizes the buffer. */
ATB_API atb_status atb_make_grid(double lo, double hi, size_t n, atb_grid grid, double* out,
                                 size_t capacity, size_t* count);

/* ---- certification ----------------------------------------------------- */

typedef struct atb_certify_options {
  atb_grid grid;
  atb_coefficients lower;
  atb_coefficients upper;
  int oracle_digits;
} atb_certify_options;

/* Sharp triples, automatic grid, 50 oracle digits. */
ATB_API void atb_certify_options_init(atb_certify_options* options);

typedef struct atb_report atb_report;

typedef struct atb_report_summary {
  double lo;
  double hi;
  size_t sample_count;
  atb_grid grid;
  int passed;
  double tolerance;
  double worst_lower_margin;
  double worst_lower_x;
  double worst_upper_margin;
  double worst_upper_x;
  double max_r_f;
  double argmax_r_f;
  double max_r_h;
  double argmax_r_h;
  size_t envelope_violations;
} atb_report_summary;

typedef enum atb_report_format { ATB_REPORT_TEXT = 0, ATB_REPORT_CSV = 1 } atb_report_format;

/* options may be NULL for defaults. */
ATB_API atb_status atb_certify_range(double lo, double hi, size_t n,
                                     const atb_certify_options* options, atb_report** out);
ATB_API void atb_report_free(atb_report* report);
ATB_API atb_status atb_report_summary_get(const atb_report* report, atb_report_summary* out);
/* Returns the rendered report; the pointer stays valid until the report is freed. */
ATB_API const char* atb_report_render(const atb_report* report, atb_report_format format);
ATB_API atb_status atb_report_write(const atb_report* report, atb_report_format format,
                                    const char* path);

ATB_API atb_status atb_find_max_relative_error(atb_side side, size_t scan_points,
                                               int oracle_digits, double* x_star,
                                               double* r_star);

typedef struct atb_sharpness {
  atb_coefficients coefficients;
  int has_scan_witness;
  double scan_witness;
  double scan_violation;
  int has_asymptotic_witness;
  int asymptotic_at_infinity; /* 0: near zero, 1: near infinity */
  int asymptotic_order;
  double bound_coefficient;
  double arctan_coefficient;
} atb_sharpness;

/* scan_points 0 selects the default of 100000. */
ATB_API atb_status atb_probe_sharpness(atb_side side, int component, double epsilon,
                                       size_t scan_points, int oracle_digits,
                                       atb_sharpness* out);
ATB_API atb_status atb_probe_coefficients(atb_side side, const atb_coefficients* c,
                                          size_t scan_points, int oracle_digits,
                                          atb_sharpness* out);

typedef struct atb_series_report atb_series_report;

typedef struct atb_series_entry {
  const char* name; /* owned by the report */
  int asymptotic;
  int order;
  double expected;
  double measured;
  double relative_gap;
  int passed;
} atb_series_entry;

/* kind is ATB_SHARP_LOWER, ATB_SHARP_UPPER or ATB_REFERENCE. */
ATB_API atb_status atb_verify_series(atb_bound_kind kind, int oracle_digits,
                                     atb_series_report** out);
ATB_API size_t atb_series_report_size(const atb_series_report* report);
ATB_API atb_status atb_series_report_entry(const atb_series_report* report, size_t index,
                                           atb_series_entry* out);
ATB_API void atb_series_report_free(atb_series_report* report);

typedef struct atb_shape_report {
  size_t points_per_sign;
  int derivative_positive;
  int concavity_sign;
  int difference_checked;
  int slope_sign_changes;
  double located_critical_point;
  double closed_form_critical_point;
  int critical_point_matches;
  int passed;
} atb_shape_report;

/* custom is read only for ATB_CUSTOM. */
ATB_API atb_status atb_verify_shape_properties(atb_bound_kind kind, const atb_coefficients* custom,
                                               size_t n, atb_shape_report* out);

#ifdef __cplusplus
}
#endif

#endif /* ATANBOUNDS_ATANBOUNDS_H */
