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

#ifndef MATCF_CORE_ERRORS_H_
#define MATCF_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace matcf {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands disagree on matrix dimension, or a dimension is not >= 1.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A matrix required to be invertible is singular to working precision.
// When the matrix is a continued-fraction element (or a product of them),
// index() carries the 1-based term index; otherwise it is -1.
class SingularError : public Error {
 public:
  explicit SingularError(const std::string& what, long index = -1)
      : Error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

// A matrix entry is NaN or infinite, either on input or as the result of an
// operation.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

// ||C|| >= 1 where the Neumann bound requires ||C|| < 1.
class NormTooLargeError : public Error {
 public:
  NormTooLargeError(const std::string& what, double norm)
      : Error(what), norm_(norm) {}
  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

// The Euler transform met a zero coefficient that the transform places in a
// denominator; index() is the offending position in the coefficient list.
class ZeroCoefficientError : public Error {
 public:
  ZeroCoefficientError(const std::string& what, long index)
      : Error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

// A scalar argument is out of range (non-positive tolerance, zero scale
// factor, term count < 1, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace matcf

#endif  // MATCF_CORE_ERRORS_H_
