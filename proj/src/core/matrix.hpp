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

#ifndef MATCF_CORE_MATRIX_H_
#define MATCF_CORE_MATRIX_H_

#include <cstddef>
#include <vector>

#include "core/errors.hpp"

namespace matcf {

// Dense square matrix of doubles, row major, immutable once constructed.
// Two invariants hold for every Matrix in the library: the dimension is
// >= 1, and all entries are finite. Both are checked on construction, and
// since every operation returns a fresh Matrix, they hold after every
// operation as well.
class Matrix {
 public:
  // The zero matrix of the given dimension.
  explicit Matrix(int dim);

  // Takes ownership of row-major entries; data.size() must be dim * dim.
  Matrix(int dim, std::vector<double> data);

  static Matrix identity(int dim);
  static Matrix zero(int dim);

  int dim() const { return dim_; }

  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * dim_ + j];
  }

  const std::vector<double>& data() const { return data_; }

 private:
  int dim_;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& lhs, const Matrix& rhs);
Matrix operator-(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(double c, const Matrix& m);
Matrix operator-(const Matrix& m);

// Subordinate infinity norm: max over rows of the absolute row sum.
// Submultiplicative, and 0 exactly for the zero matrix.
double inf_norm(const Matrix& m);

Matrix transpose(const Matrix& m);

// Inverse via LU factorization with partial pivoting. A pivot magnitude
// <= 1e-14 * ||M|| raises SingularError (comparison is <= so the all-zero
// matrix is rejected too). The result is residual-checked:
//   ||M * N - I|| <= 1e-12 * max(1, ||M|| * ||N||).
Matrix invert(const Matrix& m);

// Solves M * X = rhs through the same LU path as invert(), without forming
// an explicit inverse. Used for the convergent extraction Q^{-1} P.
Matrix solve(const Matrix& m, const Matrix& rhs);

// True iff ||M - M^T|| <= tol and Cholesky elimination of the symmetrized
// part succeeds with strictly positive pivots (positive definiteness).
bool is_symmetric_positive(const Matrix& m, double tol);

}  // namespace matcf

#endif  // MATCF_CORE_MATRIX_H_
