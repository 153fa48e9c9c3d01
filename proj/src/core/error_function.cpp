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

#include "core/error_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace matcf {

namespace {

// 2/sqrt(pi), from the platform constant; no stored decimal literal.
double two_over_sqrt_pi() {
  return 2.0 / std::sqrt(std::numbers::pi_v<double>);
}

}  // namespace

ErfCfSpec make_erf_spec(const Matrix& a) {
  const double norm = inf_norm(a);
  return ErfCfSpec{a, norm, norm < 0.5};
}

CfGenerator erf_cf_terms(const ErfCfSpec& spec) {
  const Matrix a = spec.argument;
  const Matrix a2 = a * a;
  const Matrix id = Matrix::identity(a.dim());
  auto term = [a, a2, id](long k) -> CfTerm {
    if (k == 1) {
      return CfTerm{two_over_sqrt_pi() * a, id};
    }
    if (k == 2) {
      return CfTerm{a2, 3.0 * id - a2};
    }
    const double kd = static_cast<double>(k);
    const double sign = k % 2 == 0 ? 1.0 : -1.0;  // (-1)^{k-2}
    Matrix b = (-(kd - 2.0) * (2.0 * kd - 3.0) * (2.0 * kd - 3.0)) * a2;
    Matrix den = sign * ((kd - 1.0) * (2.0 * kd - 1.0) * id -
                         (2.0 * kd - 3.0) * a2);
    return CfTerm{std::move(b), std::move(den)};
  };
  return CfGenerator(Matrix::zero(a.dim()), CfGenerator::kUnbounded,
                     std::move(term));
}

CfGenerator erf_cf_terms(const Matrix& a) {
  return erf_cf_terms(make_erf_spec(a));
}

double erf_scalar(double x, double tol, long max_terms) {
  const Matrix arg(1, {x});
  const EvaluationReport report = evaluate(erf_cf_terms(arg), tol, max_terms);
  if (report.termination == Termination::kSingularDenominator) {
    throw SingularError("erf continued fraction hit a singular denominator",
                        report.n_used + 1);
  }
  return report.value(0, 0);
}

double erf_scalar_taylor(double x, double tol) {
  return erf_matrix_taylor(Matrix(1, {x}), tol)(0, 0);
}

Matrix erf_matrix_taylor(const Matrix& a, double tol) {
  if (!(tol > 0.0)) {
    throw InvalidArgumentError("tolerance must be positive");
  }
  const Matrix a2 = a * a;
  Matrix term = a;  // A^{2n+1} / ((2n+1) n!) at n = 0
  Matrix total = a;
  double prev_norm = inf_norm(term);
  // Factorial decay beats geometric growth long before this cap for any
  // argument the library meets; the cap only turns a logic error into a
  // visible failure.
  for (long n = 1; n <= 2000; ++n) {
    const double ratio =
        (2.0 * n - 1.0) / ((2.0 * n + 1.0) * static_cast<double>(n));
    term = ratio * (term * a2);
    total = n % 2 == 1 ? total - term : total + term;
    const double norm = inf_norm(term);
    if (norm < tol && norm <= prev_norm) {
      return two_over_sqrt_pi() * total;
    }
    prev_norm = norm;
  }
  throw Error("erf series failed to converge");
}

ErfResult erf_matrix(const Matrix& a, double tol, long max_terms) {
  const ErfCfSpec spec = make_erf_spec(a);
  const CfGenerator gen = erf_cf_terms(spec);
  EvaluationReport report = evaluate(gen, tol, max_terms);
  const long pairs = std::min<long>(10, max_terms / 2);
  WorpitzkyReport diagnostic;
  if (pairs >= 1) {
    diagnostic = worpitzky_diagnostic(gen, pairs);
  }
  Matrix value = report.value;
  return ErfResult{std::move(value), std::move(report), std::move(diagnostic),
                   spec.within_proved_region, spec.norm};
}

ConvergentTable convergent_table(const Matrix& a, long n_max) {
  if (n_max < 1) {
    throw InvalidArgumentError("n_max must be >= 1");
  }
  const CfGenerator gen = erf_cf_terms(a);
  ConvergentTable table{{}, erf_matrix_taylor(a, 1e-15)};
  ConvergentState state = ConvergentState::seed(gen.leading());
  for (long n = 1; n <= n_max; ++n) {
    state = step(state, gen.term(n));
    Matrix f(a.dim());
    try {
      f = convergent(state);
    } catch (const SingularError&) {
      table.truncated = true;
      table.singular_index = n;
      break;
    }
    Matrix difference = table.oracle - f;
    table.rows.push_back(
        ConvergentTableRow{n, std::move(f), std::move(difference)});
  }
  return table;
}

}  // namespace matcf
