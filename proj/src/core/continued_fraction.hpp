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

#ifndef MATCF_CORE_CONTINUED_FRACTION_H_
#define MATCF_CORE_CONTINUED_FRACTION_H_

#include <functional>
#include <vector>

#include "core/matrix.hpp"

namespace matcf {

// Matrix continued fractions A0 + K(B_n/A_n), where division is by left
// inverse throughout: X/Y means Y^{-1} X. Order of the matrix products
// matters everywhere below; none of it commutes.

// One partial quotient: numerator b = B_k, denominator a = A_k.
struct CfTerm {
  Matrix b;
  Matrix a;
};

// Lazy description of a continued fraction. term(k) is 1-based and must be
// deterministic: the engine may request the same index more than once and
// relies on getting identical matrices back.
class CfGenerator {
 public:
  static constexpr long kUnbounded = -1;

  // length is the number of partial quotients, or kUnbounded.
  CfGenerator(Matrix a0, long length, std::function<CfTerm(long)> term);

  int dim() const { return a0_.dim(); }
  const Matrix& leading() const { return a0_; }  // A0
  long length() const { return length_; }
  bool is_bounded() const { return length_ != kUnbounded; }

  // Valid for 1 <= k, and k <= length() when bounded. Checks that the
  // produced term matches the generator dimension.
  CfTerm term(long k) const;

 private:
  Matrix a0_;
  long length_;
  std::function<CfTerm(long)> term_;
};

// Recurrence state after n partial quotients:
//   P_n = A_n P_{n-1} + B_n P_{n-2},   Q_n = A_n Q_{n-1} + B_n Q_{n-2},
// seeded with P_{-1} = I, P_0 = A0, Q_{-1} = 0, Q_0 = I. The convergent is
// F_n = Q_n^{-1} P_n.
struct ConvergentState {
  Matrix p_prev;
  Matrix p_curr;
  Matrix q_prev;
  Matrix q_curr;
  long n;

  static ConvergentState seed(const Matrix& a0);
};

// One recurrence step; A_k multiplies from the left, exactly as written.
ConvergentState step(const ConvergentState& state, const CfTerm& term);

// F_n = Q_n^{-1} P_n. Raises SingularError when Q_n is numerically singular.
Matrix convergent(const ConvergentState& state);

enum class Termination {
  kToleranceMet,
  kMaxTerms,
  kGeneratorExhausted,
  kSingularDenominator,
};

const char* termination_name(Termination t);

struct EvaluationReport {
  Matrix value;                  // last extractable convergent
  long n_used = 0;               // partial quotients absorbed into value
  std::vector<double> deltas;    // ||F_n - F_{n-1}|| for n = 1..
  std::vector<Matrix> history;   // F_1..F_n when requested
  Termination termination = Termination::kMaxTerms;
};

// Forward evaluation with the hybrid stopping rule
//   ||F_n - F_{n-1}|| <= tol * max(1, ||F_n||).
// A singular denominator halts evaluation; the report keeps the last good
// convergent and records the termination cause. To prevent overflow, all of
// (P, Q) are rescaled jointly by 1/||Q_n|| once ||Q_n|| exceeds 1e100; the
// convergents are unchanged because F_n = (cQ_n)^{-1} (cP_n).
EvaluationReport evaluate(const CfGenerator& gen, double tol, long max_terms,
                          bool keep_history = false);

// Equivalence transform by a scalar sequence: b'_k = r(k) r(k-1) b_k with
// r(0) = 1, and a'_k = r(k) a_k. Every convergent is unchanged. Scale
// factors must be non-zero; a zero raises InvalidArgumentError when the
// affected term is produced.
CfGenerator equivalent_scale(const CfGenerator& gen,
                             std::function<double(long)> r);

// Reduction to an ordinary fraction (all partial numerators I) using the
// two same-parity descending products of the original numerators:
//   A*_{2k}   = (B_{2k} B_{2k-2} ... B_2)^{-1}   A_{2k}   B_{2k-1} ... B_1
//   A*_{2k+1} = (B_{2k+1} B_{2k-1} ... B_1)^{-1} A_{2k+1} B_{2k}   ... B_2.
// The first k_terms terms are materialized eagerly so a singular numerator
// surfaces here (as SingularError with the term index) rather than later.
// For bounded generators k_terms is clamped to the generator length.
CfGenerator to_ordinary(const CfGenerator& gen, long k_terms);

// Boundedness diagnostic over index pairs (2k-1, 2k) for k = 1..k_pairs:
//   alpha_k = ||(B_{2k-2} ... B_2)^{-1} A_{2k-1}^{-1} B_{2k-1} ... B_1||
//   beta_k  = ||(B_{2k-1} ... B_1)^{-1} A_{2k}^{-1}   B_{2k}   ... B_2||
// with empty products read as I. satisfied requires alpha < 1, beta < 1 and
// alpha * beta <= 1/4, over the maxima of the computed sequences. These
// hypotheses are sufficient for convergence, never necessary, so the verdict
// is advisory. A singular element or product stops the scan; singular_index
// records the CF index of the pair member being processed.
struct WorpitzkyReport {
  std::vector<double> alphas;
  std::vector<double> betas;
  double alpha = 0.0;
  double beta = 0.0;
  bool satisfied = false;
  long singular_index = -1;
};

WorpitzkyReport worpitzky_diagnostic(const CfGenerator& gen, long k_pairs);

// Hypothesis check and partial sums for the positive-divergence criterion:
// an ordinary fraction whose denominators are symmetric positive definite
// converges iff sum ||A_n|| diverges. Finitely many terms can never decide
// divergence, so this reports the partial sums and hypothesis flags only;
// any conclusion drawn from them is indicative, not asserted.
struct DivergenceReport {
  std::vector<double> partial_sums;  // S_j = sum_{n<=j} ||A_n||
  bool is_ordinary = true;
  long first_non_ordinary = -1;   // first k with ||B_k - I|| > 1e-12
  bool positive_elements = true;
  long first_non_positive = -1;   // first k failing is_symmetric_positive

  bool hypotheses_met() const { return is_ordinary && positive_elements; }
};

DivergenceReport positive_divergence_diagnostic(const CfGenerator& gen,
                                                long k_terms);

// Bound ||(I - C)^{-1}|| <= 1/(1 - ||C||), valid for ||C|| < 1. Raises
// NormTooLargeError otherwise. The returned bound is self-checked against
// inf_norm(invert(I - C)) with slack 1e-10.
double neumann_bound(const Matrix& c);

}  // namespace matcf

#endif  // MATCF_CORE_CONTINUED_FRACTION_H_
