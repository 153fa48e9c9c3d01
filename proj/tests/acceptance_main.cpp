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

// Acceptance gate. Eight criteria, one PASS/FAIL line each, exit 0 only if
// every criterion passes. Criteria 1-4 reproduce the published reference
// tables (tests/reference_data.*); criteria 5-8 are randomized property
// checks with fixed seeds. All tolerances are stated inline.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/continued_fraction.hpp"
#include "core/error_function.hpp"
#include "core/errors.hpp"
#include "core/euler.hpp"
#include "core/matrix.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

namespace {

using matcf::CfGenerator;
using matcf::CfTerm;
using matcf::ConvergentState;
using matcf::ConvergentTable;
using matcf::Matrix;
using matcf::WorpitzkyReport;

struct Result {
  bool pass = true;
  std::string detail;
};

// Accumulates failures (reported first) and informational stats.
class Collector {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      problems_.push_back(what);
    }
  }

  void info(const std::string& what) { infos_.push_back(what); }

  Result done() const {
    std::string detail;
    for (const auto& p : problems_) {
      append(detail, p);
    }
    for (const auto& i : infos_) {
      append(detail, i);
    }
    return {pass_, detail};
  }

 private:
  static void append(std::string& detail, const std::string& piece) {
    if (!detail.empty()) {
      detail += "; ";
    }
    detail += piece;
  }

  bool pass_ = true;
  std::vector<std::string> problems_;
  std::vector<std::string> infos_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double max_entry_dev(const Matrix& got, const Matrix& want) {
  double dev = 0.0;
  for (int i = 0; i < got.dim(); ++i) {
    for (int j = 0; j < got.dim(); ++j) {
      dev = std::max(dev, std::abs(got(i, j) - want(i, j)));
    }
  }
  return dev;
}

Matrix matrix_from_row_major(int dim, const double* entries) {
  return Matrix(dim, std::vector<double>(
                         entries, entries + static_cast<std::size_t>(dim) *
                                                static_cast<std::size_t>(dim)));
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

// Convergents F_1..F_n of a generator by the forward recurrence.
std::vector<Matrix> convergents_of(const CfGenerator& gen, long n) {
  std::vector<Matrix> out;
  ConvergentState state = ConvergentState::seed(gen.leading());
  for (long k = 1; k <= n; ++k) {
    state = step(state, gen.term(k));
    out.push_back(convergent(state));
  }
  return out;
}

// ---- criterion 1 -------------------------------------------------------
// The scalar difference table: erf(x) - F_n for eleven x values. Columns
// n = 1..4 must match the printed value within 5 units in the last printed
// digit. The printed fifth column is internally inconsistent in its signs,
// so it is compared by magnitude and reported without gating. Runtime
// budget 1 s.

Result criterion_scalar_table() {
  Stopwatch timer;
  Collector c;
  double max_units = 0.0;
  double info_units = 0.0;
  for (int i = 0; i < matcf::reference::kTableSize; ++i) {
    const double x = matcf::reference::kTableX[i];
    const ConvergentTable table = matcf::convergent_table(Matrix(1, {x}), 5);
    for (int col = 0; col < matcf::reference::kTableCols; ++col) {
      const matcf::reference::Printed& printed =
          matcf::reference::kTableDiff[i][col];
      const double want = matcf::reference::printed_value(printed);
      const double ulp = matcf::reference::printed_ulp(printed);
      const double got = table.rows[static_cast<std::size_t>(col)]
                             .difference(0, 0);
      if (col < 4) {
        const double units = std::abs(got - want) / ulp;
        max_units = std::max(max_units, units);
        std::ostringstream what;
        what << "x = " << x << ", n = " << (col + 1) << ": off by " << units
             << " units in the last printed digit";
        c.expect(units <= 5.0, what.str());
      } else {
        info_units =
            std::max(info_units, std::abs(std::abs(got) - std::abs(want)) /
                                     ulp);
      }
    }
  }
  const double secs = timer.seconds();
  c.expect(secs < 1.0, "runtime " + fixed3(secs) + " s exceeds 1 s");
  c.info("max " + fixed3(max_units) + " units over n = 1..4");
  c.info("column 5 magnitude within " + fixed3(info_units) +
         " units (informational)");
  c.info(fixed3(secs) + " s");
  return c.done();
}

// ---- criterion 2 -------------------------------------------------------
// 2x2 example: erf(A) entrywise to 1e-9 and the five printed convergents
// entrywise to 1e-8. The printed F_k is F_{k+1} of the recurrence. Runtime
// budget 0.1 s.

Result criterion_2x2() {
  Stopwatch timer;
  Collector c;
  const Matrix a = matcf::reference::k2x2_argument();
  const Matrix erf = matcf::erf_matrix(a, 1e-14, 64).value;
  const double dev_erf = max_entry_dev(erf, matcf::reference::k2x2_erf());
  c.expect(dev_erf <= 1e-9, "erf deviates by " + sci(dev_erf));

  const ConvergentTable table = matcf::convergent_table(a, 6);
  double dev_f = 0.0;
  for (int k = 0; k < 5; ++k) {
    const Matrix want = matrix_from_row_major(2, matcf::reference::k2x2F[k]);
    dev_f = std::max(
        dev_f,
        max_entry_dev(table.rows[static_cast<std::size_t>(k + 1)].f, want));
  }
  c.expect(dev_f <= 1e-8, "a convergent deviates by " + sci(dev_f));

  const double secs = timer.seconds();
  c.expect(secs < 0.1, "runtime " + fixed3(secs) + " s exceeds 0.1 s");
  c.info("erf dev " + sci(dev_erf) + ", convergent dev " + sci(dev_f));
  c.info(fixed3(secs) + " s");
  return c.done();
}

// ---- criterion 3 -------------------------------------------------------
// 3x3 example with the corrected argument entry (1,2) = -1/9: erf and the
// five printed convergents to 1e-8. With the entry as printed (+1/9) the
// (1,2) and (3,2) entries of erf flip sign at unchanged magnitude and
// everything else is unchanged; that discrepancy is asserted exactly.

Result criterion_3x3() {
  Collector c;
  const Matrix a = matcf::reference::k3x3_argument();
  const Matrix want_erf = matcf::reference::k3x3_erf();
  const Matrix erf = matcf::erf_matrix(a, 1e-14, 64).value;
  const double dev_erf = max_entry_dev(erf, want_erf);
  c.expect(dev_erf <= 1e-8, "erf deviates by " + sci(dev_erf));

  const ConvergentTable table = matcf::convergent_table(a, 6);
  double dev_f = 0.0;
  for (int k = 0; k < 5; ++k) {
    const Matrix want = matrix_from_row_major(3, matcf::reference::k3x3F[k]);
    dev_f = std::max(
        dev_f,
        max_entry_dev(table.rows[static_cast<std::size_t>(k + 1)].f, want));
  }
  c.expect(dev_f <= 1e-8, "a convergent deviates by " + sci(dev_f));

  const Matrix as_printed =
      matcf::erf_matrix(matcf::reference::k3x3_argument_printed(), 1e-14, 64)
          .value;
  double dev_flip = 0.0;
  double dev_rest = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const bool flips = (i == 0 && j == 1) || (i == 2 && j == 1);
      if (flips) {
        dev_flip = std::max(dev_flip,
                            std::abs(as_printed(i, j) + want_erf(i, j)));
        c.expect(std::abs(want_erf(i, j)) > 1e-6,
                 "flipped entry too small to carry a sign");
      } else {
        dev_rest = std::max(dev_rest,
                            std::abs(as_printed(i, j) - want_erf(i, j)));
      }
    }
  }
  c.expect(dev_flip <= 1e-8,
           "sign-flipped entries deviate in magnitude by " + sci(dev_flip));
  c.expect(dev_rest <= 1e-8,
           "entries outside the flip positions move by " + sci(dev_rest));
  c.info("erf dev " + sci(dev_erf) + ", convergent dev " + sci(dev_f) +
         ", flip magnitude dev " + sci(dev_flip));
  return c.done();
}

// ---- criterion 4 -------------------------------------------------------
// 5x5 example with the corrected argument entry (2,5) = 0.02. The printed
// F_1 is the first convergent (2/sqrt(pi)) A (to 1e-7); the printed F_5 is
// the fifth convergent (to 1e-8); erf agrees with the series oracle to
// 1e-10. The printed erf is asserted (to 5e-9) only on entries consistent
// with the printed F_5 (within 2e-9); inconsistent entries are listed.

Result criterion_5x5() {
  Collector c;
  const Matrix a = matcf::reference::k5x5_argument();
  const double prefactor = 2.0 / std::sqrt(std::numbers::pi_v<double>);

  const ConvergentTable table = matcf::convergent_table(a, 5);
  const Matrix f1_formula = prefactor * a;
  c.expect(max_entry_dev(table.rows[0].f, f1_formula) <= 1e-14,
           "first convergent is not (2/sqrt(pi)) A");
  const double dev_f1 = max_entry_dev(matcf::reference::k5x5_f1(), f1_formula);
  c.expect(dev_f1 <= 1e-7, "printed F_1 deviates by " + sci(dev_f1));
  const double dev_f5 =
      max_entry_dev(table.rows[4].f, matcf::reference::k5x5_f5());
  c.expect(dev_f5 <= 1e-8, "printed F_5 deviates by " + sci(dev_f5));

  const Matrix cf = matcf::erf_matrix(a, 1e-14, 64).value;
  const Matrix series = matcf::erf_matrix_taylor(a, 1e-15);
  const double dev_oracle = max_entry_dev(cf, series);
  c.expect(dev_oracle <= 1e-10,
           "fraction and series disagree by " + sci(dev_oracle));

  const Matrix printed_erf = matcf::reference::k5x5_erf();
  const Matrix printed_f5 = matcf::reference::k5x5_f5();
  double dev_erf = 0.0;
  int inconsistent = 0;
  std::string listed;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (std::abs(printed_erf(i, j) - printed_f5(i, j)) <= 2e-9) {
        dev_erf = std::max(dev_erf, std::abs(cf(i, j) - printed_erf(i, j)));
      } else {
        ++inconsistent;
        listed += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                  ")";
      }
    }
  }
  c.expect(dev_erf <= 5e-9,
           "printed erf deviates by " + sci(dev_erf) +
               " on self-consistent entries");
  if (inconsistent > 0) {
    c.info(std::to_string(inconsistent) +
           " printed erf entries skipped as inconsistent with printed F_5:" +
           listed);
  } else {
    c.info("all 25 printed erf entries consistent with printed F_5");
  }
  c.info("F_1 dev " + sci(dev_f1) + ", F_5 dev " + sci(dev_f5) +
         ", oracle dev " + sci(dev_oracle) + ", erf dev " + sci(dev_erf));
  return c.done();
}

// ---- criterion 5 -------------------------------------------------------
// Oracle equivalence: 200 random scalars in (-0.5, 0.5) against std::erf
// and 100 random matrices (dim <= 4, norm <= 0.45) against the series
// oracle, all within 1e-8, plus the structural invariants of the matrix
// function: oddness, commutation with the argument, diagonal reduction,
// similarity equivariance. Runtime budget 10 s.

Result criterion_invariants() {
  Stopwatch timer;
  Collector c;
  matcf::testing::Rng rng(20260815);

  std::uniform_real_distribution<double> scalar_dist(-0.499, 0.499);
  double dev_scalar = 0.0;
  for (int t = 0; t < 200; ++t) {
    const double x = scalar_dist(rng);
    dev_scalar = std::max(
        dev_scalar, std::abs(matcf::erf_scalar(x, 1e-14, 64) - std::erf(x)));
  }
  c.expect(dev_scalar <= 1e-8,
           "scalar erf deviates from std::erf by " + sci(dev_scalar));

  std::uniform_real_distribution<double> norm_dist(0.05, 0.45);
  double dev_matrix = 0.0;
  double dev_odd = 0.0;
  double dev_commute = 0.0;
  double dev_similarity = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int dim = 1 + t % 4;
    const Matrix a =
        matcf::testing::random_with_norm(rng, dim, norm_dist(rng));
    const Matrix cf = matcf::erf_matrix(a, 1e-13, 64).value;
    const Matrix series = matcf::erf_matrix_taylor(a, 1e-15);
    dev_matrix = std::max(dev_matrix, max_entry_dev(cf, series));

    if (t % 3 == 0) {  // dims cycle mod 4, so this subset hits every dim
      const Matrix neg = matcf::erf_matrix(-a, 1e-13, 64).value;
      dev_odd = std::max(dev_odd, max_entry_dev(neg, -cf));
      dev_commute = std::max(dev_commute, matcf::inf_norm(a * cf - cf * a));
      const Matrix s = matcf::testing::near_identity(rng, dim, 0.4);
      const Matrix b = matcf::solve(s, a * s);
      const Matrix erf_b = matcf::erf_matrix(b, 1e-13, 96).value;
      dev_similarity =
          std::max(dev_similarity, max_entry_dev(erf_b, matcf::solve(s, cf * s)));
    }
  }
  c.expect(dev_matrix <= 1e-8,
           "matrix erf deviates from the series by " + sci(dev_matrix));
  c.expect(dev_odd <= 1e-12, "oddness violated by " + sci(dev_odd));
  c.expect(dev_commute <= 1e-12,
           "erf(A) fails to commute with A by " + sci(dev_commute));
  c.expect(dev_similarity <= 1e-8,
           "similarity equivariance violated by " + sci(dev_similarity));

  double dev_diag = 0.0;
  bool off_diag_zero = true;
  for (int t = 0; t < 10; ++t) {
    std::vector<double> entries(9, 0.0);
    for (int i = 0; i < 3; ++i) {
      entries[static_cast<std::size_t>(4 * i)] = scalar_dist(rng);
    }
    const Matrix d(3, entries);
    const Matrix erf_d = matcf::erf_matrix(d, 1e-13, 64).value;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) {
          dev_diag =
              std::max(dev_diag, std::abs(erf_d(i, j) - std::erf(d(i, j))));
        } else if (erf_d(i, j) != 0.0) {
          off_diag_zero = false;
        }
      }
    }
  }
  c.expect(dev_diag <= 1e-10,
           "diagonal reduction deviates by " + sci(dev_diag));
  c.expect(off_diag_zero, "erf of a diagonal matrix has off-diagonal fill");

  const double secs = timer.seconds();
  c.expect(secs < 10.0, "runtime " + fixed3(secs) + " s exceeds 10 s");
  c.info("scalar dev " + sci(dev_scalar) + ", matrix dev " + sci(dev_matrix) +
         ", odd " + sci(dev_odd) + ", commute " + sci(dev_commute) +
         ", similarity " + sci(dev_similarity));
  c.info(fixed3(secs) + " s");
  return c.done();
}

// ---- criterion 6 -------------------------------------------------------
// Transform invariance: the equivalence rescale and the ordinary-form
// reduction leave every convergent of 100 random generators unchanged
// within 1e-9 (relative to max(1, ||F_n||)); the Euler transform of the
// erf series reproduces the erf fraction term for term (first 8 terms,
// x in {0.1, 0.3}) within 1e-12 after the documented rescale.

Result criterion_transforms() {
  Collector c;
  matcf::testing::Rng rng(616161);
  double dev = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int dim = 1 + t % 3;
    const long length = 4 + t % 3;
    const CfGenerator gen =
        matcf::testing::random_tame_generator(rng, dim, length);
    const std::vector<Matrix> base = convergents_of(gen, length);
    const CfGenerator scaled = matcf::equivalent_scale(
        gen, [](long k) { return 0.35 + 0.4 * static_cast<double>(k % 5); });
    const std::vector<Matrix> after_scale = convergents_of(scaled, length);
    const CfGenerator ordinary = matcf::to_ordinary(gen, length);
    const std::vector<Matrix> after_ordinary =
        convergents_of(ordinary, length);
    for (long k = 0; k < length; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      const double scale = std::max(1.0, matcf::inf_norm(base[idx]));
      dev = std::max(dev, max_entry_dev(after_scale[idx], base[idx]) / scale);
      dev = std::max(dev,
                     max_entry_dev(after_ordinary[idx], base[idx]) / scale);
    }
  }
  c.expect(dev <= 1e-9, "a transform moved a convergent by " + sci(dev) +
                            " (relative)");

  double dev_terms = 0.0;
  const double prefactor = 2.0 / std::sqrt(std::numbers::pi_v<double>);
  for (const double x : {0.1, 0.3}) {
    std::vector<double> coeffs(10);
    for (int n = 0; n < 10; ++n) {
      coeffs[static_cast<std::size_t>(n)] = (n % 2 == 0 ? 1.0 : -1.0) *
                                            std::pow(x, n + 1) /
                                            ((2.0 * n + 1.0) * factorial(n));
    }
    const CfGenerator base = matcf::taylor_to_cf(
        matcf::TaylorSeries{coeffs}, Matrix(1, {x}),
        matcf::EulerForm::kShiftedLead);
    const CfGenerator folded(
        base.leading(), base.length(), [base, prefactor](long k) {
          CfTerm t = base.term(k);
          return k == 1 ? CfTerm{prefactor * t.b, t.a} : t;
        });
    const CfGenerator rescaled = matcf::equivalent_scale(folded, [x](long n) {
      if (n == 1) {
        return 1.0;
      }
      return (2.0 * n - 1.0) * (2.0 * n - 3.0) *
             factorial(static_cast<int>(n) - 1) / std::pow(x, n - 1);
    });
    const CfGenerator reference = matcf::erf_cf_terms(Matrix(1, {x}));
    for (long k = 1; k <= 8; ++k) {
      const CfTerm got = rescaled.term(k);
      const CfTerm want = reference.term(k);
      dev_terms = std::max(dev_terms,
                           std::abs(got.b(0, 0) - want.b(0, 0)) /
                               std::max(1.0, std::abs(want.b(0, 0))));
      dev_terms = std::max(dev_terms,
                           std::abs(got.a(0, 0) - want.a(0, 0)) /
                               std::max(1.0, std::abs(want.a(0, 0))));
    }
  }
  c.expect(dev_terms <= 1e-12,
           "series pipeline deviates from the erf fraction by " +
               sci(dev_terms));
  c.info("convergent dev " + sci(dev) + " (relative), pipeline term dev " +
         sci(dev_terms));
  return c.done();
}

// ---- criterion 7 -------------------------------------------------------
// Diagnostics: the boundedness test on the 2x2 example's erf fraction
// reports alpha, beta < 1/2 and satisfied over 10 index pairs, and the
// Neumann bound ||(I - C)^{-1}|| <= 1 / (1 - ||C||) holds on 1000 random C
// with ||C|| <= 0.9 while ||C|| >= 1 is rejected.

Result criterion_diagnostics() {
  Collector c;
  const CfGenerator gen =
      matcf::erf_cf_terms(matcf::reference::k2x2_argument());
  const WorpitzkyReport report = matcf::worpitzky_diagnostic(gen, 10);
  c.expect(report.satisfied, "boundedness test not satisfied");
  c.expect(report.alpha < 0.5, "alpha = " + sci(report.alpha) + " >= 1/2");
  c.expect(report.beta < 0.5, "beta = " + sci(report.beta) + " >= 1/2");
  c.expect(report.singular_index < 0, "unexpected singular element");

  matcf::testing::Rng rng(424242);
  std::uniform_real_distribution<double> norm_dist(0.05, 0.9);
  double worst_excess = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int dim = 1 + t % 3;
    const Matrix cm =
        matcf::testing::random_with_norm(rng, dim, norm_dist(rng));
    const double bound = matcf::neumann_bound(cm);
    const double actual =
        matcf::inf_norm(matcf::invert(Matrix::identity(dim) - cm));
    worst_excess = std::max(worst_excess, actual - bound);
  }
  c.expect(worst_excess <= 1e-10,
           "Neumann bound violated by " + sci(worst_excess));

  bool rejected = false;
  try {
    matcf::neumann_bound(Matrix::identity(2));
  } catch (const matcf::NormTooLargeError&) {
    rejected = true;
  }
  c.expect(rejected, "norm >= 1 not rejected");
  c.info("alpha " + sci(report.alpha) + ", beta " + sci(report.beta) +
         ", worst bound excess " + sci(worst_excess));
  return c.done();
}

// ---- criterion 8 -------------------------------------------------------
// Recurrence correctness: for 100 random finite generators (dim <= 3,
// length <= 6) every forward-recurrence convergent equals the naive
// bottom-up nested evaluation within 1e-10 (relative to max(1, ||F_n||)).

Result criterion_recurrence() {
  Collector c;
  matcf::testing::Rng rng(808808);
  double dev = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int dim = 1 + t % 3;
    const long length = 1 + t % 6;
    const CfGenerator gen =
        matcf::testing::random_tame_generator(rng, dim, length);
    ConvergentState state = ConvergentState::seed(gen.leading());
    std::vector<CfTerm> seen;
    for (long n = 1; n <= length; ++n) {
      seen.push_back(gen.term(n));
      state = step(state, gen.term(n));
      const Matrix forward = convergent(state);
      const Matrix nested = matcf::testing::nested_value(gen.leading(), seen);
      dev = std::max(dev, max_entry_dev(forward, nested) /
                              std::max(1.0, matcf::inf_norm(forward)));
    }
  }
  c.expect(dev <= 1e-10,
           "forward and nested evaluation differ by " + sci(dev) +
               " (relative)");
  c.info("max relative dev " + sci(dev));
  return c.done();
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    std::function<Result()> fn;
  };
  const std::vector<Entry> criteria = {
      {1, "scalar difference table reproduction", criterion_scalar_table},
      {2, "2x2 reference example", criterion_2x2},
      {3, "3x3 reference example and sign regression", criterion_3x3},
      {4, "5x5 reference example", criterion_5x5},
      {5, "oracle equivalence and erf invariants", criterion_invariants},
      {6, "transform invariance", criterion_transforms},
      {7, "convergence diagnostics", criterion_diagnostics},
      {8, "recurrence against nested evaluation", criterion_recurrence},
  };

  bool all_pass = true;
  for (const auto& entry : criteria) {
    Result result;
    try {
      result = entry.fn();
    } catch (const std::exception& ex) {
      result.pass = false;
      result.detail = std::string("exception: ") + ex.what();
    }
    std::printf("%s criterion %d: %s (%s)\n", result.pass ? "PASS" : "FAIL",
                entry.id, entry.label, result.detail.c_str());
    all_pass = all_pass && result.pass;
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES");
  return all_pass ? 0 : 1;
}
