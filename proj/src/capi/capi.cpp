// Copyright 2026 The matcf authors
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

#include "matcf/matcf.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "core/continued_fraction.hpp"
#include "core/error_function.hpp"
#include "core/euler.hpp"
#include "core/matrix.hpp"

struct matcf_matrix {
  matcf::Matrix m;
};

struct matcf_generator {
  matcf::CfGenerator g;
};

struct matcf_eval_report {
  matcf::EvaluationReport r;
};

struct matcf_worpitzky_report {
  matcf::WorpitzkyReport r;
};

struct matcf_divergence_report {
  matcf::DivergenceReport r;
};

struct matcf_erf_table {
  matcf::ConvergentTable t;
};

namespace {

thread_local std::string t_last_error;
thread_local long t_last_index = -1;

matcf_status fail(matcf_status status, const char* message, long index = -1) {
  t_last_error = message;
  t_last_index = index;
  return status;
}

// Runs fn, translating library exceptions to status codes. fn returns the
// status for the non-throwing path (normally MATCF_OK).
template <typename Fn>
matcf_status guarded(Fn&& fn) noexcept {
  try {
    return fn();
  } catch (const matcf::DimensionError& e) {
    return fail(MATCF_ERR_DIMENSION, e.what());
  } catch (const matcf::SingularError& e) {
    return fail(MATCF_ERR_SINGULAR, e.what(), e.index());
  } catch (const matcf::NonFiniteError& e) {
    return fail(MATCF_ERR_NONFINITE, e.what());
  } catch (const matcf::NormTooLargeError& e) {
    return fail(MATCF_ERR_NORM_TOO_LARGE, e.what());
  } catch (const matcf::ZeroCoefficientError& e) {
    return fail(MATCF_ERR_ZERO_COEFFICIENT, e.what(), e.index());
  } catch (const matcf::InvalidArgumentError& e) {
    return fail(MATCF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(MATCF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MATCF_ERR_INTERNAL, "unknown error");
  }
}

matcf_matrix* wrap(matcf::Matrix m) { return new matcf_matrix{std::move(m)}; }

int to_int(matcf::Termination t) {
  switch (t) {
    case matcf::Termination::kToleranceMet:
      return MATCF_TERM_TOLERANCE_MET;
    case matcf::Termination::kMaxTerms:
      return MATCF_TERM_MAX_TERMS;
    case matcf::Termination::kGeneratorExhausted:
      return MATCF_TERM_GENERATOR_EXHAUSTED;
    case matcf::Termination::kSingularDenominator:
      return MATCF_TERM_SINGULAR_DENOMINATOR;
  }
  return -1;
}

}  // namespace

extern "C" {

const char* matcf_version(void) { return "0.1.0"; }

const char* matcf_last_error(void) { return t_last_error.c_str(); }

long matcf_last_error_index(void) { return t_last_index; }

/* ---- matrices ---- */

matcf_status matcf_matrix_create(int dim, const double* row_major,
                                 matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!row_major || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (dim < 1) {
      return fail(MATCF_ERR_DIMENSION, "dimension must be >= 1");
    }
    std::vector<double> data(row_major,
                             row_major + static_cast<std::size_t>(dim) * dim);
    *out = wrap(matcf::Matrix(dim, std::move(data)));
    return MATCF_OK;
  });
}

matcf_status matcf_matrix_identity(int dim, matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(matcf::Matrix::identity(dim));
    return MATCF_OK;
  });
}

matcf_status matcf_matrix_zero(int dim, matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(matcf::Matrix::zero(dim));
    return MATCF_OK;
  });
}

void matcf_matrix_free(matcf_matrix* m) { delete m; }

int matcf_matrix_dim(const matcf_matrix* m) { return m ? m->m.dim() : 0; }

matcf_status matcf_matrix_copy_data(const matcf_matrix* m, double* out) {
  if (!m || !out) {
    return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
  }
  std::memcpy(out, m->m.data().data(), m->m.data().size() * sizeof(double));
  return MATCF_OK;
}

double matcf_matrix_inf_norm(const matcf_matrix* m) {
  return m ? matcf::inf_norm(m->m) : 0.0;
}

matcf_status matcf_matrix_add(const matcf_matrix* a, const matcf_matrix* b,
                              matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!a || !b || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(a->m + b->m);
    return MATCF_OK;
  });
}

matcf_status matcf_matrix_sub(const matcf_matrix* a, const matcf_matrix* b,
                              matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!a || !b || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(a->m - b->m);
    return MATCF_OK;
  });
}

matcf_status matcf_matrix_mul(const matcf_matrix* a, const matcf_matrix* b,
                              matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!a || !b || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(a->m * b->m);
    return MATCF_OK;
  });
}

matcf_status matcf_matrix_scale(const matcf_matrix* m, double c,
                                matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!m || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(c * m->m);
    return MATCF_OK;
  });
}

matcf_status matcf_matrix_invert(const matcf_matrix* m, matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!m || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(matcf::invert(m->m));
    return MATCF_OK;
  });
}

matcf_status matcf_matrix_is_symmetric_positive(const matcf_matrix* m,
                                                double tol, int* out) {
  return guarded([&]() -> matcf_status {
    if (!m || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = matcf::is_symmetric_positive(m->m, tol) ? 1 : 0;
    return MATCF_OK;
  });
}

matcf_status matcf_neumann_bound(const matcf_matrix* c, double* bound) {
  return guarded([&]() -> matcf_status {
    if (!c || !bound) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *bound = matcf::neumann_bound(c->m);
    return MATCF_OK;
  });
}

/* ---- generators ---- */

matcf_status matcf_generator_erf(const matcf_matrix* a,
                                 matcf_generator** out) {
  return guarded([&]() -> matcf_status {
    if (!a || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = new matcf_generator{matcf::erf_cf_terms(a->m)};
    return MATCF_OK;
  });
}

matcf_status matcf_generator_constant(const matcf_matrix* a0,
                                      const matcf_matrix* b,
                                      const matcf_matrix* a, long length,
                                      matcf_generator** out) {
  return guarded([&]() -> matcf_status {
    if (!b || !a || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    matcf::Matrix lead = a0 ? a0->m : matcf::Matrix::zero(b->m.dim());
    matcf::CfTerm term{b->m, a->m};
    *out = new matcf_generator{matcf::CfGenerator(
        std::move(lead), length, [term](long) { return term; })};
    return MATCF_OK;
  });
}

matcf_status matcf_generator_terms(const matcf_matrix* a0,
                                   const matcf_matrix* const* b,
                                   const matcf_matrix* const* a, long n,
                                   matcf_generator** out) {
  return guarded([&]() -> matcf_status {
    if (!out || (n > 0 && (!b || !a))) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (n < 0 || (n == 0 && !a0)) {
      return fail(MATCF_ERR_INVALID_ARGUMENT,
                  "empty term list needs an explicit leading term");
    }
    auto terms = std::make_shared<std::vector<matcf::CfTerm>>();
    terms->reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
      if (!b[i] || !a[i]) {
        return fail(MATCF_ERR_INVALID_ARGUMENT, "null term matrix");
      }
      terms->push_back(matcf::CfTerm{b[i]->m, a[i]->m});
    }
    matcf::Matrix lead =
        a0 ? a0->m : matcf::Matrix::zero((*terms)[0].b.dim());
    *out = new matcf_generator{matcf::CfGenerator(
        std::move(lead), n, [terms](long k) { return (*terms)[k - 1]; })};
    return MATCF_OK;
  });
}

matcf_status matcf_generator_taylor(const double* coeffs, long n_coeffs,
                                    const matcf_matrix* x, int form,
                                    matcf_generator** out) {
  return guarded([&]() -> matcf_status {
    if (!coeffs || !x || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (n_coeffs < 1) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "need at least one coefficient");
    }
    if (form != MATCF_EULER_PARTIAL_SUM && form != MATCF_EULER_SHIFTED_LEAD) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "unknown Euler form");
    }
    matcf::TaylorSeries series{
        std::vector<double>(coeffs, coeffs + n_coeffs)};
    *out = new matcf_generator{matcf::taylor_to_cf(
        series, x->m,
        form == MATCF_EULER_PARTIAL_SUM ? matcf::EulerForm::kPartialSum
                                        : matcf::EulerForm::kShiftedLead)};
    return MATCF_OK;
  });
}

matcf_status matcf_generator_scale(const matcf_generator* gen, const double* r,
                                   long nr, matcf_generator** out) {
  return guarded([&]() -> matcf_status {
    if (!gen || !r || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (nr < 1) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "need at least one factor");
    }
    auto factors = std::make_shared<std::vector<double>>(r, r + nr);
    matcf::CfGenerator scaled = matcf::equivalent_scale(
        gen->g, [factors](long k) { return (*factors)[k - 1]; });
    long length = nr;
    if (scaled.is_bounded()) {
      length = std::min(length, scaled.length());
    }
    *out = new matcf_generator{matcf::CfGenerator(
        scaled.leading(), length,
        [scaled](long k) { return scaled.term(k); })};
    return MATCF_OK;
  });
}

matcf_status matcf_generator_to_ordinary(const matcf_generator* gen,
                                         long k_terms, matcf_generator** out) {
  return guarded([&]() -> matcf_status {
    if (!gen || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = new matcf_generator{matcf::to_ordinary(gen->g, k_terms)};
    return MATCF_OK;
  });
}

void matcf_generator_free(matcf_generator* gen) { delete gen; }

int matcf_generator_dim(const matcf_generator* gen) {
  return gen ? gen->g.dim() : 0;
}

long matcf_generator_length(const matcf_generator* gen) {
  return gen ? gen->g.length() : 0;
}

matcf_status matcf_generator_leading(const matcf_generator* gen,
                                     matcf_matrix** a0) {
  return guarded([&]() -> matcf_status {
    if (!gen || !a0) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *a0 = wrap(gen->g.leading());
    return MATCF_OK;
  });
}

matcf_status matcf_generator_term(const matcf_generator* gen, long k,
                                  matcf_matrix** b, matcf_matrix** a) {
  return guarded([&]() -> matcf_status {
    if (!gen) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    matcf::CfTerm t = gen->g.term(k);
    if (b) {
      *b = wrap(std::move(t.b));
    }
    if (a) {
      *a = wrap(std::move(t.a));
    }
    return MATCF_OK;
  });
}

/* ---- evaluation ---- */

matcf_status matcf_evaluate(const matcf_generator* gen, double tol,
                            long max_terms, int keep_history,
                            matcf_eval_report** out) {
  return guarded([&]() -> matcf_status {
    if (!gen || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = new matcf_eval_report{
        matcf::evaluate(gen->g, tol, max_terms, keep_history != 0)};
    return MATCF_OK;
  });
}

void matcf_eval_report_free(matcf_eval_report* r) { delete r; }

matcf_status matcf_eval_report_value(const matcf_eval_report* r,
                                     matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!r || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(r->r.value);
    return MATCF_OK;
  });
}

long matcf_eval_report_terms_used(const matcf_eval_report* r) {
  return r ? r->r.n_used : 0;
}

int matcf_eval_report_termination(const matcf_eval_report* r) {
  return r ? to_int(r->r.termination) : -1;
}

long matcf_eval_report_delta_count(const matcf_eval_report* r) {
  return r ? static_cast<long>(r->r.deltas.size()) : 0;
}

matcf_status matcf_eval_report_deltas(const matcf_eval_report* r,
                                      double* out) {
  if (!r || !out) {
    return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
  }
  std::copy(r->r.deltas.begin(), r->r.deltas.end(), out);
  return MATCF_OK;
}

long matcf_eval_report_history_count(const matcf_eval_report* r) {
  return r ? static_cast<long>(r->r.history.size()) : 0;
}

matcf_status matcf_eval_report_history(const matcf_eval_report* r, long i,
                                       matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!r || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (i < 0 || i >= static_cast<long>(r->r.history.size())) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "history index out of range");
    }
    *out = wrap(r->r.history[static_cast<std::size_t>(i)]);
    return MATCF_OK;
  });
}

const char* matcf_termination_name(int termination) {
  switch (termination) {
    case MATCF_TERM_TOLERANCE_MET:
      return matcf::termination_name(matcf::Termination::kToleranceMet);
    case MATCF_TERM_MAX_TERMS:
      return matcf::termination_name(matcf::Termination::kMaxTerms);
    case MATCF_TERM_GENERATOR_EXHAUSTED:
      return matcf::termination_name(matcf::Termination::kGeneratorExhausted);
    case MATCF_TERM_SINGULAR_DENOMINATOR:
      return matcf::termination_name(
          matcf::Termination::kSingularDenominator);
    default:
      return "unknown";
  }
}

/* ---- diagnostics ---- */

matcf_status matcf_worpitzky(const matcf_generator* gen, long k_pairs,
                             matcf_worpitzky_report** out) {
  return guarded([&]() -> matcf_status {
    if (!gen || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = new matcf_worpitzky_report{
        matcf::worpitzky_diagnostic(gen->g, k_pairs)};
    return MATCF_OK;
  });
}

void matcf_worpitzky_report_free(matcf_worpitzky_report* r) { delete r; }

long matcf_worpitzky_alpha_count(const matcf_worpitzky_report* r) {
  return r ? static_cast<long>(r->r.alphas.size()) : 0;
}

long matcf_worpitzky_beta_count(const matcf_worpitzky_report* r) {
  return r ? static_cast<long>(r->r.betas.size()) : 0;
}

matcf_status matcf_worpitzky_alphas(const matcf_worpitzky_report* r,
                                    double* out) {
  if (!r || !out) {
    return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
  }
  std::copy(r->r.alphas.begin(), r->r.alphas.end(), out);
  return MATCF_OK;
}

matcf_status matcf_worpitzky_betas(const matcf_worpitzky_report* r,
                                   double* out) {
  if (!r || !out) {
    return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
  }
  std::copy(r->r.betas.begin(), r->r.betas.end(), out);
  return MATCF_OK;
}

double matcf_worpitzky_alpha(const matcf_worpitzky_report* r) {
  return r ? r->r.alpha : 0.0;
}

double matcf_worpitzky_beta(const matcf_worpitzky_report* r) {
  return r ? r->r.beta : 0.0;
}

int matcf_worpitzky_satisfied(const matcf_worpitzky_report* r) {
  return r && r->r.satisfied ? 1 : 0;
}

long matcf_worpitzky_singular_index(const matcf_worpitzky_report* r) {
  return r ? r->r.singular_index : -1;
}

matcf_status matcf_divergence(const matcf_generator* gen, long k_terms,
                              matcf_divergence_report** out) {
  return guarded([&]() -> matcf_status {
    if (!gen || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = new matcf_divergence_report{
        matcf::positive_divergence_diagnostic(gen->g, k_terms)};
    return MATCF_OK;
  });
}

void matcf_divergence_report_free(matcf_divergence_report* r) { delete r; }

long matcf_divergence_count(const matcf_divergence_report* r) {
  return r ? static_cast<long>(r->r.partial_sums.size()) : 0;
}

matcf_status matcf_divergence_partial_sums(const matcf_divergence_report* r,
                                           double* out) {
  if (!r || !out) {
    return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
  }
  std::copy(r->r.partial_sums.begin(), r->r.partial_sums.end(), out);
  return MATCF_OK;
}

int matcf_divergence_is_ordinary(const matcf_divergence_report* r) {
  return r && r->r.is_ordinary ? 1 : 0;
}

long matcf_divergence_first_non_ordinary(const matcf_divergence_report* r) {
  return r ? r->r.first_non_ordinary : -1;
}

int matcf_divergence_positive_elements(const matcf_divergence_report* r) {
  return r && r->r.positive_elements ? 1 : 0;
}

long matcf_divergence_first_non_positive(const matcf_divergence_report* r) {
  return r ? r->r.first_non_positive : -1;
}

/* ---- erf ---- */

matcf_status matcf_erf_scalar(double x, double tol, long max_terms,
                              double* out) {
  return guarded([&]() -> matcf_status {
    if (!out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = matcf::erf_scalar(x, tol, max_terms);
    return MATCF_OK;
  });
}

matcf_status matcf_erf_scalar_taylor(double x, double tol, double* out) {
  return guarded([&]() -> matcf_status {
    if (!out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = matcf::erf_scalar_taylor(x, tol);
    return MATCF_OK;
  });
}

matcf_status matcf_erf_matrix(const matcf_matrix* a, double tol,
                              long max_terms, matcf_matrix** value,
                              matcf_eval_report** report,
                              matcf_worpitzky_report** diagnostic,
                              int* within_proved_region) {
  return guarded([&]() -> matcf_status {
    if (!a || !value) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    matcf::ErfResult result = matcf::erf_matrix(a->m, tol, max_terms);
    *value = wrap(std::move(result.value));
    if (report) {
      *report = new matcf_eval_report{std::move(result.report)};
    }
    if (diagnostic) {
      *diagnostic = new matcf_worpitzky_report{std::move(result.diagnostic)};
    }
    if (within_proved_region) {
      *within_proved_region = result.within_proved_region ? 1 : 0;
    }
    return MATCF_OK;
  });
}

matcf_status matcf_erf_matrix_taylor(const matcf_matrix* a, double tol,
                                     matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!a || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(matcf::erf_matrix_taylor(a->m, tol));
    return MATCF_OK;
  });
}

matcf_status matcf_erf_convergent_table(const matcf_matrix* a, long n_max,
                                        matcf_erf_table** out) {
  return guarded([&]() -> matcf_status {
    if (!a || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = new matcf_erf_table{matcf::convergent_table(a->m, n_max)};
    return MATCF_OK;
  });
}

void matcf_erf_table_free(matcf_erf_table* t) { delete t; }

long matcf_erf_table_rows(const matcf_erf_table* t) {
  return t ? static_cast<long>(t->t.rows.size()) : 0;
}

int matcf_erf_table_truncated(const matcf_erf_table* t) {
  return t && t->t.truncated ? 1 : 0;
}

long matcf_erf_table_singular_index(const matcf_erf_table* t) {
  return t ? t->t.singular_index : -1;
}

matcf_status matcf_erf_table_oracle(const matcf_erf_table* t,
                                    matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!t || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = wrap(t->t.oracle);
    return MATCF_OK;
  });
}

matcf_status matcf_erf_table_convergent(const matcf_erf_table* t, long i,
                                        matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!t || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (i < 0 || i >= static_cast<long>(t->t.rows.size())) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "row index out of range");
    }
    *out = wrap(t->t.rows[static_cast<std::size_t>(i)].f);
    return MATCF_OK;
  });
}

matcf_status matcf_erf_table_difference(const matcf_erf_table* t, long i,
                                        matcf_matrix** out) {
  return guarded([&]() -> matcf_status {
    if (!t || !out) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (i < 0 || i >= static_cast<long>(t->t.rows.size())) {
      return fail(MATCF_ERR_INVALID_ARGUMENT, "row index out of range");
    }
    *out = wrap(t->t.rows[static_cast<std::size_t>(i)].difference);
    return MATCF_OK;
  });
}

} /* extern "C" */
