/* Copyright 2026 The matcf authors
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

/* C API for matcf: matrix continued fractions K(B_n/A_n) and the matrix
 * error function.
 *
 * Conventions:
 *  - Every object is an opaque handle created by a matcf_*_create-style
 *    call and released by the matching matcf_*_free (free functions accept
 *    NULL).
 *  - Functions that can fail return matcf_status. On failure no output
 *    handle is written, and matcf_last_error() returns a message for the
 *    calling thread; matcf_last_error_index() returns the associated
 *    continued-fraction term index when one exists (otherwise -1).
 *  - Matrices are square, row major, double precision.
 *  - Continued fractions use the left-inverse convention: X/Y = Y^{-1} X.
 */

#ifndef MATCF_MATCF_H_
#define MATCF_MATCF_H_

#if defined(_WIN32)
#define MATCF_API __declspec(dllexport)
#else
#define MATCF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct matcf_matrix matcf_matrix;
typedef struct matcf_generator matcf_generator;
typedef struct matcf_eval_report matcf_eval_report;
typedef struct matcf_worpitzky_report matcf_worpitzky_report;
typedef struct matcf_divergence_report matcf_divergence_report;
typedef struct matcf_erf_table matcf_erf_table;

typedef enum matcf_status {
  MATCF_OK = 0,
  MATCF_ERR_INVALID_ARGUMENT = 1,
  MATCF_ERR_DIMENSION = 2,
  MATCF_ERR_SINGULAR = 3,
  MATCF_ERR_NONFINITE = 4,
  MATCF_ERR_NORM_TOO_LARGE = 5,
  MATCF_ERR_ZERO_COEFFICIENT = 6,
  MATCF_ERR_INTERNAL = 7
} matcf_status;

typedef enum matcf_termination {
  MATCF_TERM_TOLERANCE_MET = 0,
  MATCF_TERM_MAX_TERMS = 1,
  MATCF_TERM_GENERATOR_EXHAUSTED = 2,
  MATCF_TERM_SINGULAR_DENOMINATOR = 3
} matcf_termination;

/* Euler transform variants; see matcf_generator_taylor. */
typedef enum matcf_euler_form {
  MATCF_EULER_PARTIAL_SUM = 0, /* convergent n = partial sum S_n */
  MATCF_EULER_SHIFTED_LEAD = 1 /* leading term 0; convergent n = S_{n-1} */
} matcf_euler_form;

#define MATCF_UNBOUNDED (-1L)

MATCF_API const char* matcf_version(void);

/* Thread-local description of the most recent failure. Never NULL. */
MATCF_API const char* matcf_last_error(void);
MATCF_API long matcf_last_error_index(void);

/* ---- matrices ---- */

MATCF_API matcf_status matcf_matrix_create(int dim, const double* row_major,
                                           matcf_matrix** out);
MATCF_API matcf_status matcf_matrix_identity(int dim, matcf_matrix** out);
MATCF_API matcf_status matcf_matrix_zero(int dim, matcf_matrix** out);
MATCF_API void matcf_matrix_free(matcf_matrix* m);

MATCF_API int matcf_matrix_dim(const matcf_matrix* m);
/* Copies dim*dim entries into out (caller-sized). */
MATCF_API matcf_status matcf_matrix_copy_data(const matcf_matrix* m,
                                              double* out);
MATCF_API double matcf_matrix_inf_norm(const matcf_matrix* m);

MATCF_API matcf_status matcf_matrix_add(const matcf_matrix* a,
                                        const matcf_matrix* b,
                                        matcf_matrix** out);
MATCF_API matcf_status matcf_matrix_sub(const matcf_matrix* a,
                                        const matcf_matrix* b,
                                        matcf_matrix** out);
MATCF_API matcf_status matcf_matrix_mul(const matcf_matrix* a,
                                        const matcf_matrix* b,
                                        matcf_matrix** out);
MATCF_API matcf_status matcf_matrix_scale(const matcf_matrix* m, double c,
                                          matcf_matrix** out);
MATCF_API matcf_status matcf_matrix_invert(const matcf_matrix* m,
                                           matcf_matrix** out);
MATCF_API matcf_status matcf_matrix_is_symmetric_positive(
    const matcf_matrix* m, double tol, int* out);

/* Bound ||(I - C)^{-1}|| <= 1/(1 - ||C||); requires ||C|| < 1. */
MATCF_API matcf_status matcf_neumann_bound(const matcf_matrix* c,
                                           double* bound);

/* ---- generators ---- */

/* The erf continued fraction for square argument a (unbounded). */
MATCF_API matcf_status matcf_generator_erf(const matcf_matrix* a,
                                           matcf_generator** out);

/* Constant elements: every term is (b, a). length may be MATCF_UNBOUNDED.
 * a0 may be NULL for the zero matrix. */
MATCF_API matcf_status matcf_generator_constant(const matcf_matrix* a0,
                                                const matcf_matrix* b,
                                                const matcf_matrix* a,
                                                long length,
                                                matcf_generator** out);

/* Explicit term list b[0..n), a[0..n); generator length n. a0 may be NULL
 * for the zero matrix. */
MATCF_API matcf_status matcf_generator_terms(const matcf_matrix* a0,
                                             const matcf_matrix* const* b,
                                             const matcf_matrix* const* a,
                                             long n, matcf_generator** out);

/* Euler transform of the Taylor prefix c[0..n_coeffs) at argument x. */
MATCF_API matcf_status matcf_generator_taylor(const double* coeffs,
                                              long n_coeffs,
                                              const matcf_matrix* x, int form,
                                              matcf_generator** out);

/* Equivalence transform by scale factors r[0..nr) applied to terms
 * 1..nr; the result is bounded by nr (and by the source length). */
MATCF_API matcf_status matcf_generator_scale(const matcf_generator* gen,
                                             const double* r, long nr,
                                             matcf_generator** out);

/* Ordinary-form reduction of the first k_terms terms (numerators become I).
 */
MATCF_API matcf_status matcf_generator_to_ordinary(const matcf_generator* gen,
                                                   long k_terms,
                                                   matcf_generator** out);

MATCF_API void matcf_generator_free(matcf_generator* gen);
MATCF_API int matcf_generator_dim(const matcf_generator* gen);
/* Number of terms, or MATCF_UNBOUNDED. */
MATCF_API long matcf_generator_length(const matcf_generator* gen);
MATCF_API matcf_status matcf_generator_leading(const matcf_generator* gen,
                                               matcf_matrix** a0);
/* Term k (1-based); both outputs optional (NULL to skip). */
MATCF_API matcf_status matcf_generator_term(const matcf_generator* gen, long k,
                                            matcf_matrix** b,
                                            matcf_matrix** a);

/* ---- evaluation ---- */

MATCF_API matcf_status matcf_evaluate(const matcf_generator* gen, double tol,
                                      long max_terms, int keep_history,
                                      matcf_eval_report** out);
MATCF_API void matcf_eval_report_free(matcf_eval_report* r);
MATCF_API matcf_status matcf_eval_report_value(const matcf_eval_report* r,
                                               matcf_matrix** out);
MATCF_API long matcf_eval_report_terms_used(const matcf_eval_report* r);
/* One of matcf_termination. */
MATCF_API int matcf_eval_report_termination(const matcf_eval_report* r);
MATCF_API long matcf_eval_report_delta_count(const matcf_eval_report* r);
/* Copies delta_count() values. */
MATCF_API matcf_status matcf_eval_report_deltas(const matcf_eval_report* r,
                                                double* out);
MATCF_API long matcf_eval_report_history_count(const matcf_eval_report* r);
MATCF_API matcf_status matcf_eval_report_history(const matcf_eval_report* r,
                                                 long i, matcf_matrix** out);
MATCF_API const char* matcf_termination_name(int termination);

/* ---- diagnostics ---- */

MATCF_API matcf_status matcf_worpitzky(const matcf_generator* gen,
                                       long k_pairs,
                                       matcf_worpitzky_report** out);
MATCF_API void matcf_worpitzky_report_free(matcf_worpitzky_report* r);
MATCF_API long matcf_worpitzky_alpha_count(const matcf_worpitzky_report* r);
MATCF_API long matcf_worpitzky_beta_count(const matcf_worpitzky_report* r);
MATCF_API matcf_status matcf_worpitzky_alphas(const matcf_worpitzky_report* r,
                                              double* out);
MATCF_API matcf_status matcf_worpitzky_betas(const matcf_worpitzky_report* r,
                                             double* out);
MATCF_API double matcf_worpitzky_alpha(const matcf_worpitzky_report* r);
MATCF_API double matcf_worpitzky_beta(const matcf_worpitzky_report* r);
MATCF_API int matcf_worpitzky_satisfied(const matcf_worpitzky_report* r);
/* CF index whose inversion failed, or -1. */
MATCF_API long matcf_worpitzky_singular_index(const matcf_worpitzky_report* r);

MATCF_API matcf_status matcf_divergence(const matcf_generator* gen,
                                        long k_terms,
                                        matcf_divergence_report** out);
MATCF_API void matcf_divergence_report_free(matcf_divergence_report* r);
MATCF_API long matcf_divergence_count(const matcf_divergence_report* r);
MATCF_API matcf_status matcf_divergence_partial_sums(
    const matcf_divergence_report* r, double* out);
MATCF_API int matcf_divergence_is_ordinary(const matcf_divergence_report* r);
MATCF_API long matcf_divergence_first_non_ordinary(
    const matcf_divergence_report* r);
MATCF_API int matcf_divergence_positive_elements(
    const matcf_divergence_report* r);
MATCF_API long matcf_divergence_first_non_positive(
    const matcf_divergence_report* r);

/* ---- erf ---- */

MATCF_API matcf_status matcf_erf_scalar(double x, double tol, long max_terms,
                                        double* out);
MATCF_API matcf_status matcf_erf_scalar_taylor(double x, double tol,
                                               double* out);

/* CF evaluation of erf(a). report, diagnostic and within_proved_region are
 * optional outputs (pass NULL to skip). A singular denominator is reported
 * through the evaluation report, not as a failure status. */
MATCF_API matcf_status matcf_erf_matrix(const matcf_matrix* a, double tol,
                                        long max_terms, matcf_matrix** value,
                                        matcf_eval_report** report,
                                        matcf_worpitzky_report** diagnostic,
                                        int* within_proved_region);

/* Series evaluation; the independent oracle. */
MATCF_API matcf_status matcf_erf_matrix_taylor(const matcf_matrix* a,
                                               double tol, matcf_matrix** out);

/* Convergent table rows (n, F_n, oracle - F_n) for n = 1..n_max. */
MATCF_API matcf_status matcf_erf_convergent_table(const matcf_matrix* a,
                                                  long n_max,
                                                  matcf_erf_table** out);
MATCF_API void matcf_erf_table_free(matcf_erf_table* t);
MATCF_API long matcf_erf_table_rows(const matcf_erf_table* t);
MATCF_API int matcf_erf_table_truncated(const matcf_erf_table* t);
MATCF_API long matcf_erf_table_singular_index(const matcf_erf_table* t);
MATCF_API matcf_status matcf_erf_table_oracle(const matcf_erf_table* t,
                                              matcf_matrix** out);
/* Row i (0-based). */
MATCF_API matcf_status matcf_erf_table_convergent(const matcf_erf_table* t,
                                                  long i, matcf_matrix** out);
MATCF_API matcf_status matcf_erf_table_difference(const matcf_erf_table* t,
                                                  long i, matcf_matrix** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MATCF_MATCF_H_ */
