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

// Reference data for the erf continued fraction: a published difference
// table for eleven scalar arguments, and three worked matrix examples
// (2x2, 3x3, 5x5) with their printed convergents. Values are kept as the
// exact strings they were published with, so tests can compare against the
// precision actually printed rather than an arbitrary tolerance.
//
// Two entries in the source tables are internally inconsistent and are
// corrected here; see the notes on k3x3 and k5x5 below.

#ifndef MATCF_TESTS_REFERENCE_DATA_H_
#define MATCF_TESTS_REFERENCE_DATA_H_

#include "core/matrix.hpp"

namespace matcf::reference {

// A value as printed in the reference tables.
struct Printed {
  const char* text;
};

// The printed value as a double.
double printed_value(const Printed& p);

// One unit in the last printed digit: "0.3525e-7" -> 1e-11. A bare "0"
// carries no digits; it is read as |value| below 1e-10.
double printed_ulp(const Printed& p);

// ---- scalar difference table ----
// For each x, the printed values of erf(x) - F_n(x) for n = 1..5.

inline constexpr int kTableSize = 11;
inline constexpr int kTableCols = 5;

extern const double kTableX[kTableSize];
extern const Printed kTableDiff[kTableSize][kTableCols];

// ---- 2x2 example ----
// Argument [[1/3, 1/17], [-2/23, 1/11]]; the printed table lists erf(A) and
// five convergents. The printed F_k corresponds to F_{k+1} of the recurrence
// seeded at A_0 = 0 (the printed index starts after the linear term).

matcf::Matrix k2x2_argument();
matcf::Matrix k2x2_erf();
extern const double k2x2F[5][4];  // printed F_1..F_5, row major

// ---- 3x3 example ----
// Argument [[1/15, -1/9, 0], [0, 1/20, 0], [1/7, 0, 1/5]]. The source
// prints the (1,2) entry as +1/9, which is inconsistent with its own erf and
// convergent tables; the (1,2) and (3,2) entries of every printed value flip
// sign under that change, nothing else. k3x3_argument() returns the
// corrected sign; k3x3_argument_printed() the one as printed. Printed F_k is
// again F_{k+1} of the recurrence.

matcf::Matrix k3x3_argument();
matcf::Matrix k3x3_argument_printed();
matcf::Matrix k3x3_erf();
extern const double k3x3F[5][9];  // printed F_1..F_5, row major

// ---- 5x5 example ----
// The source prints the (2,5) entry of the argument as 0.2, inconsistent
// with every printed output (which require 0.02); corrected here. For this
// example the printed convergent index matches the recurrence index
// directly: printed F_1 is the first convergent (2/sqrt(pi)) A.

matcf::Matrix k5x5_argument();
matcf::Matrix k5x5_erf();
matcf::Matrix k5x5_f1();
matcf::Matrix k5x5_f5();

}  // namespace matcf::reference

#endif  // MATCF_TESTS_REFERENCE_DATA_H_
