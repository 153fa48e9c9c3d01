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

#ifndef MATCF_CORE_ERROR_FUNCTION_H_
#define MATCF_CORE_ERROR_FUNCTION_H_

#include <vector>

#include "core/continued_fraction.hpp"
#include "core/matrix.hpp"

namespace matcf {

// erf for real scalars and real square matrices, through two independent
// routes: a continued-fraction expansion and the alternating Taylor series.
// The series defines erf(A) for every square A (it is entire); the fraction
// carries a convergence proof only for ||A|| < 1/2, which is why that
// threshold shows up as the advisory "proved region" below.

struct ErfCfSpec {
  Matrix argument;
  double norm;                 // inf_norm(argument), cached exactly
  bool within_proved_region;   // norm < 1/2
};

ErfCfSpec make_erf_spec(const Matrix& a);

// The erf continued fraction: a0 = 0 and
//   k = 1:   b = (2/sqrt(pi)) A,        a = I
//   k = 2:   b = A^2,                   a = 3I - A^2
//   k >= 3:  b = -(k-2)(2k-3)^2 A^2,    a = (-1)^k ((k-1)(2k-1) I - (2k-3) A^2)
// ((-1)^k equals (-1)^{k-2}.) The generator is unbounded.
CfGenerator erf_cf_terms(const ErfCfSpec& spec);
CfGenerator erf_cf_terms(const Matrix& a);

// CF evaluation on the 1x1 generator. A singular denominator (not expected
// for |x| < 1/2) propagates as SingularError.
double erf_scalar(double x, double tol, long max_terms);

// Series evaluation on the 1x1 path; see erf_matrix_taylor.
double erf_scalar_taylor(double x, double tol);

struct ErfResult {
  Matrix value;
  EvaluationReport report;
  WorpitzkyReport diagnostic;  // over the first min(10, max_terms / 2) pairs
  bool within_proved_region;
  double norm;
};

// CF evaluation of erf(A). ||A|| >= 1/2 is a reportable condition, not an
// error: evaluation proceeds and within_proved_region is set false. A
// singular denominator is likewise recorded in the report together with the
// last good convergent. The attached boundedness diagnostic is empty when
// max_terms < 2.
ErfResult erf_matrix(const Matrix& a, double tol, long max_terms);

// Alternating series (2/sqrt(pi)) sum (-1)^n A^{2n+1} / ((2n+1) n!), summed
// until ||term|| < tol once the term norms have started decreasing (before
// that point a small term proves nothing). Wholly independent of the CF
// path, which is what makes it usable as an oracle in tests.
Matrix erf_matrix_taylor(const Matrix& a, double tol);

struct ConvergentTableRow {
  long n;
  Matrix f;            // F_n
  Matrix difference;   // oracle - F_n
};

struct ConvergentTable {
  std::vector<ConvergentTableRow> rows;
  Matrix oracle;            // series evaluation at tol 1e-15
  bool truncated = false;   // a singular denominator stopped the table early
  long singular_index = -1;
};

// Rows (n, F_n, oracle - F_n) for n = 1..n_max. No stopping rule: the table
// steps through every requested convergent. Scalars go through dim 1.
ConvergentTable convergent_table(const Matrix& a, long n_max);

}  // namespace matcf

#endif  // MATCF_CORE_ERROR_FUNCTION_H_
