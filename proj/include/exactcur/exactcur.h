/* exactcur - exact CUR decompositions by column and row selection
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of libexactcur. Objects are opaque handles released with the
 * matching *_free function. Every fallible call returns an ecur_status; on
 * failure ecur_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Indices are 0-based. Matrix data is
 * exchanged in column-major order.
 */
#ifndef EXACTCUR_EXACTCUR_H
#define EXACTCUR_EXACTCUR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EXACTCUR_BUILDING)
#    define ECUR_API __declspec(dllexport)
#  else
#    define ECUR_API __declspec(dllimport)
#  endif
#else
#  define ECUR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecur_status {
  ECUR_OK = 0,
  ECUR_ERR_ZERO_MATRIX = 1,
  ECUR_ERR_INDEX_OUT_OF_RANGE = 2,
  ECUR_ERR_RANK_DEFICIENT = 3,
  ECUR_ERR_DOMAIN = 4,
  ECUR_ERR_ZERO_PROBABILITY_DRAW = 5,
  ECUR_ERR_NOISE_DOMINATES = 6,
  ECUR_ERR_DIVISION_BY_ZERO_WEIGHT = 7,
  ECUR_ERR_SINGULAR_INTERPOLATION = 8,
  ECUR_ERR_TOO_MANY_CLUSTERS = 9,
  ECUR_ERR_INVALID_ARGUMENT = 10,
  ECUR_ERR_IO = 11,
  ECUR_ERR_PARSE = 12,
  ECUR_ERR_CONFIG = 13,
  ECUR_ERR_BUFFER_TOO_SMALL = 14,
  ECUR_ERR_INTERNAL = 99
} ecur_status;

typedef enum ecur_scheme {
  ECUR_SCHEME_UNIFORM = 0,
  ECUR_SCHEME_LENGTH = 1,
  ECUR_SCHEME_LEVERAGE = 2
} ecur_scheme;

typedef enum ecur_norm { ECUR_NORM_SPECTRAL = 0, ECUR_NORM_FROBENIUS = 1 } ecur_norm;

typedef struct ecur_matrix ecur_matrix;
typedef struct ecur_cur ecur_cur;

/* Outcome of the five-condition exactness check. */
typedef struct ecur_report {
  size_t rank_a, rank_c, rank_r, rank_u;
  int holds[5]; /* conditions (i)..(v) */
  int u_pinv_identity;
  double residual_ii, residual_iii, residual_iv, residual_u_pinv;
} ecur_report;

ECUR_API const char* ecur_status_string(ecur_status status);
ECUR_API const char* ecur_last_error(void);
ECUR_API const char* ecur_version(void);

/* Pass a value <= 0 for any `tol` argument to use the default tolerance. */

ECUR_API ecur_status ecur_matrix_create(size_t rows, size_t cols, const double* col_major,
                                        ecur_matrix** out);
ECUR_API void ecur_matrix_free(ecur_matrix* m);
ECUR_API size_t ecur_matrix_rows(const ecur_matrix* m);
ECUR_API size_t ecur_matrix_cols(const ecur_matrix* m);
ECUR_API ecur_status ecur_matrix_copy_data(const ecur_matrix* m, double* out, size_t capacity);
ECUR_API ecur_status ecur_matrix_read_mm(const char* path, ecur_matrix** out);
ECUR_API ecur_status ecur_matrix_write_mm(const ecur_matrix* m, const char* path);

/* Full singular spectrum (min(m,n) values) into `sigma`, plus the numerical
 * rank and the tolerance it was measured at. */
ECUR_API ecur_status ecur_svd(const ecur_matrix* m, double tol, double* sigma, size_t capacity,
                              size_t* count, size_t* rank, double* tol_used);
ECUR_API ecur_status ecur_pseudoinverse(const ecur_matrix* m, double tol, ecur_matrix** out);
ECUR_API ecur_status ecur_stable_rank(const ecur_matrix* m, double* out);
ECUR_API ecur_status ecur_condition_number(const ecur_matrix* m, double tol, double* out);

ECUR_API ecur_status ecur_cur_build(const ecur_matrix* a, const size_t* rows, size_t nrows,
                                    const size_t* cols, size_t ncols, double tol, ecur_cur** out);
/* `k` is the target rank for leverage sampling (ignored otherwise). */
ECUR_API ecur_status ecur_cur_randomized(const ecur_matrix* a, ecur_scheme scheme, size_t k,
                                         size_t d1, size_t d2, uint64_t seed, int dedup,
                                         ecur_cur** out);
ECUR_API ecur_status ecur_cur_deim(const ecur_matrix* a, size_t k, double tol, ecur_cur** out);
ECUR_API void ecur_cur_free(ecur_cur* f);
ECUR_API size_t ecur_cur_row_count(const ecur_cur* f);
ECUR_API size_t ecur_cur_col_count(const ecur_cur* f);
ECUR_API ecur_status ecur_cur_row_indices(const ecur_cur* f, size_t* out, size_t capacity);
ECUR_API ecur_status ecur_cur_col_indices(const ecur_cur* f, size_t* out, size_t capacity);
/* ||A - C U^+ R|| relative to ||A|| in the same norm. */
ECUR_API ecur_status ecur_cur_relative_error(const ecur_matrix* a, const ecur_cur* f,
                                             ecur_norm norm, double* out);
ECUR_API ecur_status ecur_verify(const ecur_matrix* a, const size_t* rows, size_t nrows,
                                 const size_t* cols, size_t ncols, double tol, ecur_report* out);

ECUR_API ecur_status ecur_sample_size_rv(double r, double eps, double delta, double big_c,
                                         int64_t* out);
ECUR_API ecur_status ecur_sample_size_leverage(size_t k, double beta, double delta,
                                               int64_t* out);
ECUR_API ecur_status ecur_sample_size_length_via_lev(double r, double kappa, size_t k,
                                                     double delta, int64_t* out);

/* Runs an experiment from key=value config text. The CSV is written to
 * `out_path` when non-null, else to the config's `out` key when set. If
 * `csv_out` is non-null it receives the CSV text (free with ecur_string_free). */
ECUR_API ecur_status ecur_experiment_run(const char* config_text, const char* out_path,
                                         char** csv_out);

/* Generates a union-of-subspaces model from key=value text, builds a
 * randomized CUR with d rows and columns, and clusters the columns.
 * `labels` (capacity >= number of points) receives predicted labels. */
ECUR_API ecur_status ecur_cluster_run(const char* model_text, ecur_scheme scheme, size_t d,
                                      uint64_t seed, int* labels, size_t capacity,
                                      size_t* count, int* exact, double* accuracy);

ECUR_API void ecur_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
