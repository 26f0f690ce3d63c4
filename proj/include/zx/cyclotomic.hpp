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
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zx {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial; coeffs()[i] is the coefficient of X^i. Trailing
/// zeros are always stripped, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial monomial(BigInt coeff, std::size_t degree);
  static IntPolynomial constant(BigInt c) { return monomial(std::move(c), 0); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial, -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const;

  /// Every coefficient divisible by two (vacuously true for zero).
  bool all_even() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& k) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  /// Exact division by every coefficient; requires divisibility.
  IntPolynomial divided_exactly(const BigInt& k) const;

  /// Quotient and remainder of Euclidean division by a monic divisor.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;

  /// P(X^k).
  IntPolynomial substitute_power(std::size_t k) const;

  std::complex<double> evaluate(std::complex<double> x) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Phi_N, computed as (X^N - 1) divided by every Phi_d for proper divisors d.
IntPolynomial cyclotomic_poly(std::int64_t n);

std::int64_t totient(std::int64_t n);

struct ComplexApprox {
  double re = 0.0;
  double im = 0.0;

  std::complex<double> value() const { return {re, im}; }
};

/// An element of Z[1/2, zeta_N] written (1/2^p) * P(zeta_N), zeta_N = e^{2 pi i / N}.
///
/// Canonical values satisfy deg P < phi(N) and, when p > 0, P is not twice an
/// integer polynomial; zero is always (N, 0, 0). Since {1, ..., zeta^{phi-1}}
/// is a Z-basis of Z[zeta], two canonical values are equal exactly when their
/// fields agree.
///
/// Order 0 is reserved for the rational subring Z[1/2], whose elements embed
/// into every order. Such values arise from integer literals (Eigen builds
/// zeros and ones this way) and adopt the order of whatever they meet.
class DyadicCyclotomic {
 public:
  DyadicCyclotomic() = default;
  DyadicCyclotomic(long long integer);  // NOLINT: integer literals embed implicitly

  std::int64_t order() const { return order_; }
  std::int64_t p() const { return p_; }
  const IntPolynomial& poly() const { return poly_; }

  bool is_zero() const { return poly_.is_zero(); }
  bool is_rational() const { return poly_.degree() <= 0; }

  DyadicCyclotomic operator+(const DyadicCyclotomic& o) const;
  DyadicCyclotomic operator-(const DyadicCyclotomic& o) const;
  DyadicCyclotomic operator-() const;
  DyadicCyclotomic operator*(const DyadicCyclotomic& o) const;
  DyadicCyclotomic& operator+=(const DyadicCyclotomic& o) { return *this = *this + o; }
  DyadicCyclotomic& operator-=(const DyadicCyclotomic& o) { return *this = *this - o; }
  DyadicCyclotomic& operator*=(const DyadicCyclotomic& o) { return *this = *this * o; }

  /// Field identity, with order-0 rationals compared against any order.
  bool operator==(const DyadicCyclotomic& o) const;
  bool operator!=(const DyadicCyclotomic& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  friend DyadicCyclotomic canonicalize(std::int64_t, std::int64_t, IntPolynomial);
  friend DyadicCyclotomic make_rational(std::int64_t, IntPolynomial);
  std::int64_t order_ = 0;
  std::int64_t p_ = 0;
  IntPolynomial poly_;
};

std::ostream& operator<<(std::ostream& os, const DyadicCyclotomic& a);

/// Reduce modulo Phi_order and strip common factors of two. `order` must be a
/// positive multiple of 8.
DyadicCyclotomic canonicalize(std::int64_t order, std::int64_t p, IntPolynomial poly);

/// c / 2^p as an order-free rational.
DyadicCyclotomic make_rational(std::int64_t p, IntPolynomial constant);

DyadicCyclotomic add(const DyadicCyclotomic& a, const DyadicCyclotomic& b);
DyadicCyclotomic mul(const DyadicCyclotomic& a, const DyadicCyclotomic& b);
DyadicCyclotomic neg(const DyadicCyclotomic& a);

/// Complex conjugate: zeta^k maps to zeta^{-k}.
DyadicCyclotomic conj(const DyadicCyclotomic& a);

/// Re-express `a` in the ring of order `new_order` (a.order() must divide it).
DyadicCyclotomic embed_order(const DyadicCyclotomic& a, std::int64_t new_order);

/// zeta_order^k for any integer k.
DyadicCyclotomic root_power(std::int64_t order, std::int64_t k);

/// 1/sqrt(2) = (zeta_8 + zeta_8^7) / 2 expressed at `order`.
DyadicCyclotomic sqrt2_inv(std::int64_t order);

/// Multiplicative inverse of 1 + zeta_order^k.
DyadicCyclotomic invert_one_plus_root(std::int64_t order, std::int64_t k);

/// General inverse of a nonzero element, when it lies in the ring.
DyadicCyclotomic inverse(const DyadicCyclotomic& a);

ComplexApprox eval_complex(const DyadicCyclotomic& a);

std::int64_t lcm_order(std::int64_t a, std::int64_t b);

}  // namespace zx
