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

#include "core/euler.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

namespace matcf {

namespace {

void validate_coeffs(const TaylorSeries& series, EulerForm form) {
  if (series.coeffs.empty()) {
    throw InvalidArgumentError("series needs at least one coefficient");
  }
  for (double c : series.coeffs) {
    if (!std::isfinite(c)) {
      throw NonFiniteError("series coefficient is not finite");
    }
  }
  const long n = static_cast<long>(series.coeffs.size()) - 1;
  const long first = form == EulerForm::kShiftedLead ? 0 : 1;
  for (long i = first; i <= n; ++i) {
    if (series.coeffs[static_cast<std::size_t>(i)] == 0.0) {
      throw ZeroCoefficientError(
          "Euler transform is undefined for zero coefficient c_" +
              std::to_string(i),
          i);
    }
  }
}

}  // namespace

CfGenerator taylor_to_cf(const TaylorSeries& series, const Matrix& x,
                         EulerForm form) {
  validate_coeffs(series, form);
  const int m = x.dim();
  const Matrix id = Matrix::identity(m);
  auto coeffs = std::make_shared<std::vector<double>>(series.coeffs);
  const long n = static_cast<long>(coeffs->size()) - 1;

  if (form == EulerForm::kPartialSum) {
    // k = 1:      b = c_1 x,          a = I
    // k = 2:      b = -c_2 x,         a = c_1 I + c_2 x
    // k >= 3:     b = -c_{k-2} c_k x, a = c_{k-1} I + c_k x
    auto term = [coeffs, x, id](long k) -> CfTerm {
      const std::vector<double>& c = *coeffs;
      if (k == 1) {
        return CfTerm{c[1] * x, id};
      }
      const double ck = c[static_cast<std::size_t>(k)];
      const double factor = k == 2 ? -ck : -c[static_cast<std::size_t>(k - 2)] * ck;
      return CfTerm{factor * x,
                    c[static_cast<std::size_t>(k - 1)] * id + ck * x};
    };
    const Matrix a0 = (*coeffs)[0] * id;
    return CfGenerator(a0, n, std::move(term));
  }

  // kShiftedLead:
  // k = 1:      b = c_0 I,              a = I
  // k = 2:      b = -c_1 x,             a = c_0 I + c_1 x
  // k >= 3:     b = -c_{k-3} c_{k-1} x, a = c_{k-2} I + c_{k-1} x
  auto term = [coeffs, x, id](long k) -> CfTerm {
    const std::vector<double>& c = *coeffs;
    if (k == 1) {
      return CfTerm{c[0] * id, id};
    }
    const double ck = c[static_cast<std::size_t>(k - 1)];
    const double factor = k == 2 ? -ck : -c[static_cast<std::size_t>(k - 3)] * ck;
    return CfTerm{factor * x,
                  c[static_cast<std::size_t>(k - 2)] * id + ck * x};
  };
  return CfGenerator(Matrix::zero(m), n + 1, std::move(term));
}

Matrix taylor_eval(const TaylorSeries& series, const Matrix& x) {
  if (series.coeffs.empty()) {
    throw InvalidArgumentError("series needs at least one coefficient");
  }
  const int m = x.dim();
  const Matrix id = Matrix::identity(m);
  const auto& c = series.coeffs;
  Matrix acc = c.back() * id;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = x * acc + c[i] * id;
  }
  return acc;
}

double taylor_eval(const TaylorSeries& series, double x) {
  return taylor_eval(series, Matrix(1, {x}))(0, 0);
}

}  // namespace matcf
