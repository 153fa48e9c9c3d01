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

#include "core/continued_fraction.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

namespace matcf {

CfGenerator::CfGenerator(Matrix a0, long length,
                         std::function<CfTerm(long)> term)
    : a0_(std::move(a0)), length_(length), term_(std::move(term)) {
  if (length_ < 0 && length_ != kUnbounded) {
    throw InvalidArgumentError("generator length must be >= 0 or unbounded");
  }
  if (!term_) {
    throw InvalidArgumentError("generator needs a term function");
  }
}

CfTerm CfGenerator::term(long k) const {
  if (k < 1) {
    throw InvalidArgumentError("term index must be >= 1, got " +
                               std::to_string(k));
  }
  if (is_bounded() && k > length_) {
    throw InvalidArgumentError("term index " + std::to_string(k) +
                               " exceeds generator length " +
                               std::to_string(length_));
  }
  CfTerm t = term_(k);
  if (t.b.dim() != dim() || t.a.dim() != dim()) {
    throw DimensionError("term " + std::to_string(k) +
                         " does not match generator dimension");
  }
  return t;
}

ConvergentState ConvergentState::seed(const Matrix& a0) {
  const int m = a0.dim();
  return ConvergentState{Matrix::identity(m), a0, Matrix::zero(m),
                         Matrix::identity(m), 0};
}

ConvergentState step(const ConvergentState& state, const CfTerm& term) {
  Matrix p_next = term.a * state.p_curr + term.b * state.p_prev;
  Matrix q_next = term.a * state.q_curr + term.b * state.q_prev;
  return ConvergentState{state.p_curr, std::move(p_next), state.q_curr,
                         std::move(q_next), state.n + 1};
}

Matrix convergent(const ConvergentState& state) {
  return solve(state.q_curr, state.p_curr);
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::kToleranceMet:
      return "tolerance_met";
    case Termination::kMaxTerms:
      return "max_terms";
    case Termination::kGeneratorExhausted:
      return "generator_exhausted";
    case Termination::kSingularDenominator:
      return "singular_denominator";
  }
  return "unknown";
}

EvaluationReport evaluate(const CfGenerator& gen, double tol, long max_terms,
                          bool keep_history) {
  if (!(tol > 0.0)) {
    throw InvalidArgumentError("tolerance must be positive");
  }
  if (max_terms < 1) {
    throw InvalidArgumentError("max_terms must be >= 1");
  }

  ConvergentState state = ConvergentState::seed(gen.leading());
  EvaluationReport report{gen.leading(), 0, {}, {}, Termination::kMaxTerms};
  Matrix prev = gen.leading();
  for (long n = 1; n <= max_terms; ++n) {
    if (gen.is_bounded() && n > gen.length()) {
      report.termination = Termination::kGeneratorExhausted;
      return report;
    }
    state = step(state, gen.term(n));
    Matrix f(gen.dim());
    try {
      f = convergent(state);
    } catch (const SingularError&) {
      report.termination = Termination::kSingularDenominator;
      return report;
    }
    const double delta = inf_norm(f - prev);
    report.deltas.push_back(delta);
    if (keep_history) {
      report.history.push_back(f);
    }
    report.value = f;
    report.n_used = n;
    prev = std::move(f);
    if (delta <= tol * std::max(1.0, inf_norm(report.value))) {
      report.termination = Termination::kToleranceMet;
      return report;
    }
    const double q_norm = inf_norm(state.q_curr);
    if (q_norm > 1e100) {
      const double c = 1.0 / q_norm;
      state.p_prev = c * state.p_prev;
      state.p_curr = c * state.p_curr;
      state.q_prev = c * state.q_prev;
      state.q_curr = c * state.q_curr;
    }
  }
  report.termination = Termination::kMaxTerms;
  return report;
}

CfGenerator equivalent_scale(const CfGenerator& gen,
                             std::function<double(long)> r) {
  if (!r) {
    throw InvalidArgumentError("scale sequence must be callable");
  }
  auto scaled = [gen, r = std::move(r)](long k) -> CfTerm {
    const double rk = r(k);
    const double rk_prev = k >= 2 ? r(k - 1) : 1.0;  // r(0) := 1
    if (rk == 0.0 || rk_prev == 0.0) {
      throw InvalidArgumentError(
          "equivalence transform requires non-zero scale factors (index " +
          std::to_string(rk == 0.0 ? k : k - 1) + ")");
    }
    CfTerm t = gen.term(k);
    return CfTerm{(rk * rk_prev) * t.b, rk * t.a};
  };
  return CfGenerator(gen.leading(), gen.length(), std::move(scaled));
}

CfGenerator to_ordinary(const CfGenerator& gen, long k_terms) {
  if (k_terms < 1) {
    throw InvalidArgumentError("term count must be >= 1");
  }
  if (gen.is_bounded()) {
    k_terms = std::min(k_terms, gen.length());
  }
  const int m = gen.dim();
  Matrix odd = Matrix::identity(m);   // B_{2j-1} ... B_1, newest leftmost
  Matrix even = Matrix::identity(m);  // B_{2j}   ... B_2, newest leftmost
  auto terms = std::make_shared<std::vector<CfTerm>>();
  terms->reserve(static_cast<std::size_t>(k_terms));
  for (long k = 1; k <= k_terms; ++k) {
    const CfTerm t = gen.term(k);
    try {
      if (k % 2 == 1) {
        odd = t.b * odd;
        terms->push_back(CfTerm{Matrix::identity(m), invert(odd) * t.a * even});
      } else {
        even = t.b * even;
        terms->push_back(CfTerm{Matrix::identity(m), invert(even) * t.a * odd});
      }
    } catch (const SingularError&) {
      throw SingularError(
          "ordinary-form reduction needs invertible numerators; the product "
          "through B_" +
              std::to_string(k) + " is singular",
          k);
    }
  }
  const long produced = static_cast<long>(terms->size());
  return CfGenerator(gen.leading(), produced,
                     [terms](long k) { return (*terms)[k - 1]; });
}

WorpitzkyReport worpitzky_diagnostic(const CfGenerator& gen, long k_pairs) {
  if (k_pairs < 1) {
    throw InvalidArgumentError("pair count must be >= 1");
  }
  if (gen.is_bounded()) {
    k_pairs = std::min(k_pairs, gen.length() / 2);
  }
  const int m = gen.dim();
  WorpitzkyReport report;
  Matrix odd = Matrix::identity(m);
  Matrix even = Matrix::identity(m);
  for (long k = 1; k <= k_pairs; ++k) {
    const CfTerm t_odd = gen.term(2 * k - 1);
    const Matrix even_before = even;  // product through B_{2k-2}
    try {
      odd = t_odd.b * odd;
      report.alphas.push_back(
          inf_norm(invert(even_before) * invert(t_odd.a) * odd));
    } catch (const SingularError&) {
      report.singular_index = 2 * k - 1;
      break;
    }
    const CfTerm t_even = gen.term(2 * k);
    try {
      even = t_even.b * even;
      report.betas.push_back(inf_norm(invert(odd) * invert(t_even.a) * even));
    } catch (const SingularError&) {
      report.singular_index = 2 * k;
      break;
    }
  }
  for (double a : report.alphas) {
    report.alpha = std::max(report.alpha, a);
  }
  for (double b : report.betas) {
    report.beta = std::max(report.beta, b);
  }
  report.satisfied = report.singular_index < 0 && !report.alphas.empty() &&
                     report.alpha < 1.0 && report.beta < 1.0 &&
                     report.alpha * report.beta <= 0.25;
  return report;
}

DivergenceReport positive_divergence_diagnostic(const CfGenerator& gen,
                                                long k_terms) {
  if (k_terms < 1) {
    throw InvalidArgumentError("term count must be >= 1");
  }
  if (gen.is_bounded()) {
    k_terms = std::min(k_terms, gen.length());
  }
  const Matrix id = Matrix::identity(gen.dim());
  DivergenceReport report;
  double sum = 0.0;
  for (long k = 1; k <= k_terms; ++k) {
    const CfTerm t = gen.term(k);
    if (report.is_ordinary && inf_norm(t.b - id) > 1e-12) {
      report.is_ordinary = false;
      report.first_non_ordinary = k;
    }
    if (report.positive_elements && !is_symmetric_positive(t.a, 1e-12)) {
      report.positive_elements = false;
      report.first_non_positive = k;
    }
    sum += inf_norm(t.a);
    report.partial_sums.push_back(sum);
  }
  return report;
}

double neumann_bound(const Matrix& c) {
  const double norm = inf_norm(c);
  if (norm >= 1.0) {
    throw NormTooLargeError(
        "Neumann bound requires ||C|| < 1, got " + std::to_string(norm), norm);
  }
  const double bound = 1.0 / (1.0 - norm);
  const double actual = inf_norm(invert(Matrix::identity(c.dim()) - c));
  if (actual > bound + 1e-10) {
    throw Error("Neumann inequality self-check failed");
  }
  return bound;
}

}  // namespace matcf
