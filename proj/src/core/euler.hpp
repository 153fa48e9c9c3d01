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

#ifndef MATCF_CORE_EULER_H_
#define MATCF_CORE_EULER_H_

#include <vector>

#include "core/continued_fraction.hpp"
#include "core/matrix.hpp"

namespace matcf {

// A truncated Taylor expansion about 0: coeffs holds c_0 .. c_N.
struct TaylorSeries {
  std::vector<double> coeffs;
};

// The two classical displays of the Euler transform of sum c_n x^n.
//
// kPartialSum emits
//   [c_0; c_1 x / I, -c_2 x / (c_1 I + c_2 x), -c_1 c_3 x / (c_2 I + c_3 x),
//    ..., -c_{n-2} c_n x / (c_{n-1} I + c_n x)]
// whose convergent F_n equals the partial sum S_n. Length N.
//
// kShiftedLead emits
//   [0; c_0 I / I, -c_1 x / (c_0 I + c_1 x), -c_0 c_2 x / (c_1 I + c_2 x),
//    ...]
// whose convergent F_n equals S_{n-1}. Length N + 1. With a zero leading
// term the whole value sits inside the fraction, so the first numerator can
// absorb scalar prefactors; the erf expansion is built on this variant.
enum class EulerForm { kPartialSum, kShiftedLead };

// Builds the transform as a generator over matrices (scalars are the m = 1
// case; scalar coefficients are promoted to multiples of I). Coefficients
// that the chosen form places in denominators must be non-zero:
// c_1..c_N for kPartialSum, c_0..c_N for kShiftedLead. A violation raises
// ZeroCoefficientError with the offending index.
CfGenerator taylor_to_cf(const TaylorSeries& series, const Matrix& x,
                         EulerForm form = EulerForm::kPartialSum);

// Direct Horner evaluation sum c_n X^n of the full stored prefix. The
// independent oracle for the transform.
Matrix taylor_eval(const TaylorSeries& series, const Matrix& x);

// Scalar convenience; routes through the 1x1 matrix path so the scalar and
// matrix evaluations cannot drift apart.
double taylor_eval(const TaylorSeries& series, double x);

}  // namespace matcf

#endif  // MATCF_CORE_EULER_H_
