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


#include "zx/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "zx/errors.hpp"

namespace zx {

namespace {

bool power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

void check_shape(Eigen::Index rows, Eigen::Index cols) {
  if (!power_of_two(rows) || !power_of_two(cols))
    throw ZxError(ErrorCode::Shape, "matrix dimensions must be powers of two, got " + std::to_string(rows) + "x" +
                                        std::to_string(cols));
}

DyadicCyclotomic at_order(const DyadicCyclotomic& x, std::int64_t order) {
  if (x.order() == order) return x;
  return embed_order(x, order);
}

}  // namespace

Matrix::Matrix(ExactMatrix m, std::int64_t order) : exact_(true), order_(order), em_(std::move(m)) {
  check_shape(em_.rows(), em_.cols());
  if (order <= 0 || order % 8 != 0) throw ZxError(ErrorCode::MalformedOrder, "exact matrix needs an order 8n");
  for (Eigen::Index i = 0; i < em_.size(); ++i) em_.data()[i] = at_order(em_.data()[i], order);
}

Matrix::Matrix(FloatMatrix m) : fm_(std::move(m)) { check_shape(fm_.rows(), fm_.cols()); }

const ExactMatrix& Matrix::exact() const {
  if (!exact_) throw ZxError(ErrorCode::Backend, "matrix is not exact");
  return em_;
}

const FloatMatrix& Matrix::floating() const {
  if (exact_) throw ZxError(ErrorCode::Backend, "matrix is exact");
  return fm_;
}

FloatMatrix Matrix::to_float() const {
  if (!exact_) return fm_;
  FloatMatrix r(em_.rows(), em_.cols());
  for (Eigen::Index i = 0; i < em_.size(); ++i) r.data()[i] = eval_complex(em_.data()[i]).value();
  return r;
}

Matrix Matrix::with_order(std::int64_t order) const {
  if (!exact_) throw ZxError(ErrorCode::Backend, "matrix is not exact");
  return Matrix(em_, order);
}

namespace {

// Bring both operands to one backend, and exact ones to a common order.
std::pair<Matrix, Matrix> align(const Matrix& a, const Matrix& b) {
  if (a.is_exact() && b.is_exact()) {
    const std::int64_t order = lcm_order(a.order(), b.order());
    return {a.with_order(order), b.with_order(order)};
  }
  return {Matrix(a.to_float()), Matrix(b.to_float())};
}

}  // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ZxError(ErrorCode::Shape, "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                        " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  auto [x, y] = align(a, b);
  if (x.is_exact()) return Matrix(multiply(x.exact(), y.exact()), x.order());
  return Matrix(FloatMatrix(x.floating() * y.floating()));
}

Matrix mat_kron(const Matrix& a, const Matrix& b) {
  auto [x, y] = align(a, b);
  if (x.is_exact()) return Matrix(kron(x.exact(), y.exact()), x.order());
  return Matrix(kron(x.floating(), y.floating()));
}

bool mat_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.is_exact() && b.is_exact()) {
    auto [x, y] = align(a, b);
    return x.exact() == y.exact();
  }
  const FloatMatrix fa = a.to_float();
  const FloatMatrix fb = b.to_float();
  double scale = 0.0;
  for (Eigen::Index i = 0; i < fa.size(); ++i)
    scale = std::max({scale, std::abs(fa.data()[i]), std::abs(fb.data()[i])});
  for (Eigen::Index i = 0; i < fa.size(); ++i)
    if (std::abs(fa.data()[i] - fb.data()[i]) > tol * (1.0 + scale)) return false;
  return true;
}

}  // namespace zx
