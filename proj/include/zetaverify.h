/* Copyright 2026 The zetaverify authors
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

/* C interface of the zetaverify shared library.
 *
 * The library evaluates integral identities over the Riemann zeta function:
 * weighted vertical-line integrals of ln zeta (modulus or continued
 * argument) against closed forms, real-axis integrals, and sums of
 * zero contributions read from a table of zero ordinates. All objects are
 * opaque handles; every fallible call returns a zv_status, with details
 * available from zv_last_error(). Handles are not thread-safe to mutate,
 * but evaluations are pure and a catalog may be shared across threads.
 */

#ifndef ZETAVERIFY_H
#define ZETAVERIFY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZV_API __declspec(dllexport)
#else
#define ZV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zv_status {
  ZV_OK = 0,
  ZV_ERR_INVALID_ARGUMENT = 1,
  ZV_ERR_POLE_AT_ONE = 2,
  ZV_ERR_PARAMS_INSUFFICIENT = 3,
  ZV_ERR_ZERO_ON_PATH = 4,
  ZV_ERR_PARSE = 5,
  ZV_ERR_ORDER = 6,
  ZV_ERR_RANGE = 7,
  ZV_ERR_DEGENERATE_ARGUMENT = 8,
  ZV_ERR_TRUNCATION_EXCEEDS_TABLE = 9,
  ZV_ERR_IO = 10,
  ZV_ERR_INTERNAL = 11
} zv_status;

typedef struct zv_catalog zv_catalog; /* immutable table of zero ordinates */
typedef struct zv_case zv_case;       /* one identity instance */
typedef struct zv_result zv_result;   /* evaluation outcome */

ZV_API const char* zv_version(void);
ZV_API const char* zv_status_message(zv_status s);
/* Message of the last error raised on the calling thread ("" if none). */
ZV_API const char* zv_last_error(void);

/* ---- zero catalog ----------------------------------------------------- */

/* Parse a plain-text ordinate table (one decimal per line). A binary cache
 * sidecar (path + ".zvcache") is used and refreshed when use_cache != 0. */
ZV_API zv_status zv_catalog_load(const char* path, int use_cache, zv_catalog** out);
ZV_API void zv_catalog_free(zv_catalog* cat);
ZV_API uint64_t zv_catalog_count(const zv_catalog* cat);
ZV_API double zv_catalog_t_max(const zv_catalog* cat);
/* Ordinate by 0-based index. */
ZV_API zv_status zv_catalog_ordinate(const zv_catalog* cat, uint64_t index, double* out);
/* Number of ordinates <= T; fails with ZV_ERR_TRUNCATION_EXCEEDS_TABLE when
 * T exceeds the table maximum. */
ZV_API zv_status zv_catalog_count_up_to(const zv_catalog* cat, double T, uint64_t* out);

/* ---- cases and evaluation --------------------------------------------- */

typedef struct zv_case_params {
  /* One of: EQ2, THM3, THM4, THM5, THM6, THM7, EQ7, EQ8, B_GT_1, WANG. */
  const char* theorem;
  double a;           /* kernel half-width; ignored by the alpha families */
  double b_or_alpha;  /* b (EQ2/THM3/B_GT_1/WANG) or alpha (the rest) */
  double T;           /* truncation height of the line integral */
  double tol;         /* quadrature tolerance; <= 0 selects the default */
  double wang_radius; /* WANG only; <= 0 selects 1.0 */
  int panel_budget;   /* <= 0 selects the default (20000) */
} zv_case_params;

ZV_API zv_status zv_case_create(const zv_case_params* params, zv_case** out);
ZV_API void zv_case_free(zv_case* c);

/* Evaluate a case. `cat` may be NULL for cases that need no zero table. */
ZV_API zv_status zv_evaluate(const zv_case* c, const zv_catalog* cat, zv_result** out);
ZV_API void zv_result_free(zv_result* r);

typedef struct zv_breakdown {
  double lhs;
  double rhs;
  double delta; /* lhs - rhs, bit-exactly as assembled */
  double line_integral;
  double closed_form;
  double pole_term;
  double zero_sum;
  double sigma_integral;
  double err_estimate;
  double tail_estimate; /* reported separately, never added to lhs/rhs */
  double wall_time_ms;
  int64_t zeros_used;
  int converged;
} zv_breakdown;

ZV_API zv_status zv_result_breakdown(const zv_result* r, zv_breakdown* out);

/* Sample the case's line integrand on a uniform grid of n >= 2 points over
 * [t_lo, t_hi]; ts and values must hold n doubles. */
ZV_API zv_status zv_sample_integrand(const zv_case* c, const zv_catalog* cat, double t_lo,
                                     double t_hi, int n, double* ts, double* values);

/* ---- direct function evaluation --------------------------------------- */

/* zeta(re + i*im) to absolute accuracy target (<= 0 selects 1e-12). */
ZV_API zv_status zv_zeta(double re, double im, double target, double* out_re, double* out_im);

/* Branch-tracked log of zeta (with_zm1_factor == 0) or of zeta(z)*(z-1)
 * (with_zm1_factor != 0), continued horizontally from sigma = 4. */
ZV_API zv_status zv_log_zeta_tracked(double sigma, double t, int with_zm1_factor, double* out_re,
                                     double* out_im, long* out_windings);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZETAVERIFY_H */
