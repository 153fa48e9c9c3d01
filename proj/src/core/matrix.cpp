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

#include "core/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

namespace matcf {

namespace {

void require_same_dim(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(lhs.dim()) +
                         " vs " + std::to_string(rhs.dim()));
  }
}

}  // namespace

Matrix::Matrix(int dim)
    : Matrix(dim, std::vector<double>(
                      dim >= 1 ? static_cast<std::size_t>(dim) * dim : 0,
                      0.0)) {}

Matrix::Matrix(int dim, std::vector<double> data)
    : dim_(dim), data_(std::move(data)) {
  if (dim_ < 1) {
    throw DimensionError("matrix dimension must be >= 1, got " +
                         std::to_string(dim_));
  }
  if (data_.size() != static_cast<std::size_t>(dim_) * dim_) {
    throw DimensionError("entry count " + std::to_string(data_.size()) +
                         " does not match dimension " + std::to_string(dim_));
  }
  for (double v : data_) {
    if (!std::isfinite(v)) {
      throw NonFiniteError("matrix entry is not finite");
    }
  }
}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m.data_[static_cast<std::size_t>(i) * dim + i] = 1.0;
  }
  return m;
}

Matrix Matrix::zero(int dim) { return Matrix(dim); }

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs);
  std::vector<double> out(lhs.data().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = lhs.data()[i] + rhs.data()[i];
  }
  return Matrix(lhs.dim(), std::move(out));
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs);
  std::vector<double> out(lhs.data().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = lhs.data()[i] - rhs.data()[i];
  }
  return Matrix(lhs.dim(), std::move(out));
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_dim(lhs, rhs);
  const int n = lhs.dim();
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        acc += lhs(i, k) * rhs(k, j);
      }
      out[static_cast<std::size_t>(i) * n + j] = acc;
    }
  }
  return Matrix(n, std::move(out));
}

Matrix operator*(double c, const Matrix& m) {
  std::vector<double> out(m.data().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = c * m.data()[i];
  }
  return Matrix(m.dim(), std::move(out));
}

Matrix operator-(const Matrix& m) { return -1.0 * m; }

double inf_norm(const Matrix& m) {
  const int n = m.dim();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      row += std::abs(m(i, j));
    }
    best = std::max(best, row);
  }
  return best;
}

Matrix transpose(const Matrix& m) {
  const int n = m.dim();
  std::vector<double> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(j) * n + i] = m(i, j);
    }
  }
  return Matrix(n, std::move(out));
}

namespace {

// LU factorization with partial pivoting, stored packed (unit lower
// triangle implicit). perm[i] is the source row of factored row i.
struct LuFactors {
  int n;
  std::vector<double> lu;
  std::vector<int> perm;
};

LuFactors lu_factor(const Matrix& m) {
  const int n = m.dim();
  const double threshold = 1e-14 * inf_norm(m);
  LuFactors f{n, m.data(), std::vector<int>(n)};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  auto at = [&](int i, int j) -> double& {
    return f.lu[static_cast<std::size_t>(i) * n + j];
  };
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(at(k, k));
    for (int r = k + 1; r < n; ++r) {
      if (std::abs(at(r, k)) > best) {
        best = std::abs(at(r, k));
        piv = r;
      }
    }
    if (best <= threshold) {
      throw SingularError("matrix is singular to working precision");
    }
    if (piv != k) {
      for (int c = 0; c < n; ++c) {
        std::swap(at(k, c), at(piv, c));
      }
      std::swap(f.perm[k], f.perm[piv]);
    }
    for (int r = k + 1; r < n; ++r) {
      const double factor = at(r, k) / at(k, k);
      at(r, k) = factor;
      for (int c = k + 1; c < n; ++c) {
        at(r, c) -= factor * at(k, c);
      }
    }
  }
  return f;
}

// Solves using the factors for one right-hand-side column of rhs.
void lu_solve_column(const LuFactors& f, const Matrix& rhs, int col,
                     std::vector<double>& x) {
  const int n = f.n;
  auto at = [&](int i, int j) {
    return f.lu[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) {
    double acc = rhs(f.perm[i], col);
    for (int j = 0; j < i; ++j) {
      acc -= at(i, j) * x[j];
    }
    x[i] = acc;
  }
  for (int i = n - 1; i >= 0; --i) {
    double acc = x[i];
    for (int j = i + 1; j < n; ++j) {
      acc -= at(i, j) * x[j];
    }
    x[i] = acc / at(i, i);
  }
}

}  // namespace

Matrix solve(const Matrix& m, const Matrix& rhs) {
  require_same_dim(m, rhs);
  const int n = m.dim();
  const LuFactors f = lu_factor(m);
  std::vector<double> out(static_cast<std::size_t>(n) * n);
  std::vector<double> x(n);
  for (int col = 0; col < n; ++col) {
    lu_solve_column(f, rhs, col, x);
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i) * n + col] = x[i];
    }
  }
  Matrix result(n, std::move(out));
  const double residual = inf_norm(m * result - rhs);
  const double scale =
      std::max({1.0, inf_norm(m) * inf_norm(result), inf_norm(rhs)});
  if (residual > 1e-12 * scale) {
    throw SingularError("solve residual check failed; matrix near singular");
  }
  return result;
}

Matrix invert(const Matrix& m) { return solve(m, Matrix::identity(m.dim())); }

bool is_symmetric_positive(const Matrix& m, double tol) {
  if (inf_norm(m - transpose(m)) > tol) {
    return false;
  }
  // Cholesky on the symmetrized part; a pivot <= 0 means not positive
  // definite. The comparison is written so a NaN pivot also fails.
  const int n = m.dim();
  std::vector<double> s(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s[static_cast<std::size_t>(i) * n + j] = 0.5 * (m(i, j) + m(j, i));
    }
  }
  auto at = [&](int i, int j) -> double& {
    return s[static_cast<std::size_t>(i) * n + j];
  };
  for (int k = 0; k < n; ++k) {
    double d = at(k, k);
    for (int j = 0; j < k; ++j) {
      d -= at(k, j) * at(k, j);
    }
    if (!(d > 0.0)) {
      return false;
    }
    const double root = std::sqrt(d);
    at(k, k) = root;
    for (int r = k + 1; r < n; ++r) {
      double acc = at(r, k);
      for (int j = 0; j < k; ++j) {
        acc -= at(r, j) * at(k, j);
      }
      at(r, k) = acc / root;
    }
  }
  return true;
}

}  // namespace matcf
