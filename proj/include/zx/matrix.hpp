// Copyright 2026 The zxnf Authors
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


#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Core>

#include "zx/cyclotomic.hpp"

namespace Eigen {

template <>
struct NumTraits<zx::DyadicCyclotomic> : GenericNumTraits<zx::DyadicCyclotomic> {
  using Real = zx::DyadicCyclotomic;
  using NonInteger = zx::DyadicCyclotomic;
  using Literal = zx::DyadicCyclotomic;
  using Nested = zx::DyadicCyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 128,
  };
};

}  // namespace Eigen

namespace zx {

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using ExactMatrix = Dense<DyadicCyclotomic>;
using FloatMatrix = Dense<std::complex<double>>;

enum class BackendKind { Auto, Exact, Float };

/// Scalar backend request. For Exact, order 0 means "the smallest order that
/// holds every phase of the diagram".
struct Backend {
  BackendKind kind = BackendKind::Auto;
  std::int64_t order = 0;

  static Backend automatic() { return {}; }
  static Backend exact(std::int64_t order = 0) { return {BackendKind::Exact, order}; }
  static Backend floating() { return {BackendKind::Float, 0}; }
};

/// A dense linear map with either exact cyclotomic or double entries. Exact
/// matrices keep every entry at order(); rows and columns are powers of two.
class Matrix {
 public:
  Matrix() = default;
  Matrix(ExactMatrix m, std::int64_t order);
  explicit Matrix(FloatMatrix m);

  bool is_exact() const { return exact_; }
  std::int64_t order() const { return order_; }
  Eigen::Index rows() const { return exact_ ? em_.rows() : fm_.rows(); }
  Eigen::Index cols() const { return exact_ ? em_.cols() : fm_.cols(); }

  const ExactMatrix& exact() const;
  const FloatMatrix& floating() const;
  /// Complex approximation of the entries (a copy for float matrices).
  FloatMatrix to_float() const;
  /// Same values with every exact entry re-expressed at `order`.
  Matrix with_order(std::int64_t order) const;

 private:
  bool exact_ = false;
  std::int64_t order_ = 0;
  ExactMatrix em_;
  FloatMatrix fm_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_kron(const Matrix& a, const Matrix& b);
/// Exact matrices are compared exactly; otherwise entrywise
/// |a - b| <= tol * (1 + max |entry|).
bool mat_equal(const Matrix& a, const Matrix& b, double tol = 1e-9);

template <typename Scalar>
Dense<Scalar> kron(const Dense<Scalar>& a, const Dense<Scalar>& b) {
  Dense<Scalar> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

/// Product that skips zero entries of `a`; exact entries are costly to multiply.
template <typename Scalar>
Dense<Scalar> multiply(const Dense<Scalar>& a, const Dense<Scalar>& b) {
  Dense<Scalar> r = Dense<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == Scalar(0)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!(b(k, j) == Scalar(0))) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

}  // namespace zx
