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

#include "zx/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "zx/errors.hpp"

namespace zx {

using BigRational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, std::size_t degree) {
  if (coeff == 0) return {};
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPolynomial::all_even() const {
  for (const auto& c : coeffs_)
    if (boost::multiprecision::bit_test(c, 0)) return false;
  return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const BigInt& k) const {
  if (k == 0) return {};
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

IntPolynomial IntPolynomial::divided_exactly(const BigInt& k) const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) {
    if (c % k != 0) throw ZxError(ErrorCode::Precondition, "inexact polynomial division");
    c /= k;
  }
  return r;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1)
    throw ZxError(ErrorCode::Precondition, "divisor must be monic");
  const std::size_t d = divisor.coeffs_.size() - 1;
  if (coeffs_.size() <= d) return {IntPolynomial{}, *this};
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(coeffs_.size() - d);
  for (std::size_t i = coeffs_.size(); i-- > d;) {
    const BigInt lead = rem[i];
    if (lead == 0) continue;
    quot[i - d] = lead;
    for (std::size_t j = 0; j <= d; ++j) rem[i - d + j] -= lead * divisor.coeffs_[j];
  }
  rem.resize(d);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<BigInt> c((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * k] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].convert_to<double>();
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

IntPolynomial compute_cyclotomic(std::int64_t n);

// Memo of Phi_N; entries are immutable once inserted.
const IntPolynomial& cached_cyclotomic(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPolynomial value = compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(value)).first->second;
}

IntPolynomial compute_cyclotomic(std::int64_t n) {
  // X^n - 1
  IntPolynomial acc = IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial{1};
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = acc.divmod_monic(cached_cyclotomic(d));
    if (!r.is_zero()) throw ZxError(ErrorCode::Precondition, "cyclotomic division left a remainder");
    acc = std::move(q);
  }
  return acc;
}

bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

void check_order(std::int64_t order) {
  if (order <= 0 || order % 8 != 0)
    throw ZxError(ErrorCode::MalformedOrder,
                  "ring order must be a positive multiple of 8, got " + std::to_string(order));
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t join_orders(std::int64_t a, std::int64_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw ZxError(ErrorCode::OrderMismatch,
                "cyclotomic orders differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

// Strip factors of two shared by every coefficient while p allows it.
void reduce_parity(std::int64_t& p, IntPolynomial& poly) {
  if (poly.is_zero()) {
    p = 0;
    return;
  }
  while (p > 0 && poly.all_even()) {
    poly = poly.divided_exactly(2);
    --p;
  }
}

}  // namespace

IntPolynomial cyclotomic_poly(std::int64_t n) {
  if (n < 1) throw ZxError(ErrorCode::Precondition, "cyclotomic order must be positive");
  return cached_cyclotomic(n);
}

std::int64_t totient(std::int64_t n) {
  if (n < 1) throw ZxError(ErrorCode::Precondition, "totient of a non-positive integer");
  std::int64_t result = n;
  std::int64_t m = n;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::int64_t lcm_order(std::int64_t a, std::int64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return std::lcm(a, b);
}

// ---------------------------------------------------------------------------
// DyadicCyclotomic

DyadicCyclotomic::DyadicCyclotomic(long long integer) : poly_(IntPolynomial::constant(integer)) {}

DyadicCyclotomic make_rational(std::int64_t p, IntPolynomial constant) {
  if (constant.degree() > 0) throw ZxError(ErrorCode::Precondition, "order-free values must be rational");
  if (p < 0) throw ZxError(ErrorCode::Precondition, "negative power of 1/2");
  DyadicCyclotomic r;
  reduce_parity(p, constant);
  r.p_ = p;
  r.poly_ = std::move(constant);
  return r;
}

DyadicCyclotomic canonicalize(std::int64_t order, std::int64_t p, IntPolynomial poly) {
  check_order(order);
  if (p < 0) throw ZxError(ErrorCode::Precondition, "negative power of 1/2");
  const IntPolynomial& phi = cached_cyclotomic(order);
  if (poly.degree() >= phi.degree()) poly = poly.divmod_monic(phi).second;
  reduce_parity(p, poly);
  DyadicCyclotomic r;
  r.order_ = order;
  r.p_ = p;
  r.poly_ = std::move(poly);
  return r;
}

namespace {

DyadicCyclotomic build(std::int64_t order, std::int64_t p, IntPolynomial poly) {
  return order == 0 ? make_rational(p, std::move(poly)) : canonicalize(order, p, std::move(poly));
}

IntPolynomial shifted(const IntPolynomial& poly, std::int64_t by) {
  return by == 0 ? poly : poly * (BigInt(1) << static_cast<unsigned>(by));
}

}  // namespace

DyadicCyclotomic DyadicCyclotomic::operator+(const DyadicCyclotomic& o) const {
  const std::int64_t order = join_orders(order_, o.order_);
  if (is_zero()) return order == o.order_ ? o : build(order, o.p_, o.poly_);
  if (o.is_zero()) return order == order_ ? *this : build(order, p_, poly_);
  const std::int64_t p = std::max(p_, o.p_);
  return build(order, p, shifted(poly_, p - p_) + shifted(o.poly_, p - o.p_));
}

DyadicCyclotomic DyadicCyclotomic::operator-() const {
  DyadicCyclotomic r = *this;
  r.poly_ = -poly_;
  return r;
}

DyadicCyclotomic DyadicCyclotomic::operator-(const DyadicCyclotomic& o) const { return *this + (-o); }

DyadicCyclotomic DyadicCyclotomic::operator*(const DyadicCyclotomic& o) const {
  const std::int64_t order = join_orders(order_, o.order_);
  if (is_zero() || o.is_zero()) return order == 0 ? DyadicCyclotomic{} : canonicalize(order, 0, {});
  return build(order, p_ + o.p_, poly_ * o.poly_);
}

bool DyadicCyclotomic::operator==(const DyadicCyclotomic& o) const {
  if (order_ != o.order_) {
    if (order_ != 0 && o.order_ != 0) return false;
    if (!is_rational() || !o.is_rational()) return false;
  }
  return p_ == o.p_ && poly_ == o.poly_;
}

std::string DyadicCyclotomic::to_string() const {
  std::ostringstream os;
  os << '(' << order_ << ", " << p_ << ", " << poly_ << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DyadicCyclotomic& a) { return os << a.to_string(); }

DyadicCyclotomic add(const DyadicCyclotomic& a, const DyadicCyclotomic& b) { return a + b; }
DyadicCyclotomic mul(const DyadicCyclotomic& a, const DyadicCyclotomic& b) { return a * b; }
DyadicCyclotomic neg(const DyadicCyclotomic& a) { return -a; }

DyadicCyclotomic conj(const DyadicCyclotomic& a) {
  if (a.order() == 0 || a.is_rational()) return a;
  const std::int64_t n = a.order();
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  const auto& src = a.poly().coeffs();
  for (std::size_t i = 0; i < src.size(); ++i) c[static_cast<std::size_t>(mod(-static_cast<std::int64_t>(i), n))] += src[i];
  return canonicalize(n, a.p(), IntPolynomial(std::move(c)));
}

DyadicCyclotomic embed_order(const DyadicCyclotomic& a, std::int64_t new_order) {
  check_order(new_order);
  if (a.order() == 0) return canonicalize(new_order, a.p(), a.poly());
  if (new_order % a.order() != 0)
    throw ZxError(ErrorCode::Embedding, "cannot embed order " + std::to_string(a.order()) + " into order " +
                                            std::to_string(new_order));
  if (new_order == a.order()) return a;
  return canonicalize(new_order, a.p(), a.poly().substitute_power(static_cast<std::size_t>(new_order / a.order())));
}

DyadicCyclotomic root_power(std::int64_t order, std::int64_t k) {
  check_order(order);
  return canonicalize(order, 0, IntPolynomial::monomial(1, static_cast<std::size_t>(mod(k, order))));
}

DyadicCyclotomic sqrt2_inv(std::int64_t order) {
  check_order(order);
  const auto m = static_cast<std::size_t>(order / 8);
  return canonicalize(order, 1, IntPolynomial::monomial(1, m) + IntPolynomial::monomial(1, 7 * m));
}

DyadicCyclotomic inverse(const DyadicCyclotomic& a) {
  if (a.is_zero()) throw ZxError(ErrorCode::NonInvertible, "zero has no inverse");
  if (a.order() == 0 || a.is_rational()) {
    // c / 2^p is a unit of Z[1/2] only when c is +-2^k.
    BigInt c = a.poly().coeff(0);
    BigInt mag = c < 0 ? BigInt(-c) : c;
    std::int64_t k = 0;
    while (mag > 1 && (mag & 1) == 0) {
      mag >>= 1;
      ++k;
    }
    if (mag != 1) throw ZxError(ErrorCode::NonInvertible, "value is not a unit of the dyadic ring");
    IntPolynomial num = IntPolynomial::constant((c < 0 ? BigInt(-1) : BigInt(1)) << static_cast<unsigned>(a.p()));
    return a.order() == 0 ? make_rational(k, num) : canonicalize(a.order(), k, num);
  }
  const std::int64_t order = a.order();
  const IntPolynomial& phi = cached_cyclotomic(order);
  const auto dim = static_cast<std::size_t>(phi.degree());

  // Column j of the multiplication-by-P matrix holds the coefficients of P * X^j mod Phi.
  std::vector<std::vector<BigRational>> m(dim, std::vector<BigRational>(dim + 1));
  for (std::size_t j = 0; j < dim; ++j) {
    IntPolynomial col = (a.poly() * IntPolynomial::monomial(1, j)).divmod_monic(phi).second;
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = BigRational(col.coeff(i));
  }
  m[0][dim] = 1;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t pivot = c;
    while (pivot < dim && m[pivot][c] == 0) ++pivot;
    if (pivot == dim) throw ZxError(ErrorCode::NonInvertible, "singular multiplication matrix");
    std::swap(m[pivot], m[c]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const BigRational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= dim; ++k) m[r][k] -= f * m[c][k];
    }
  }
  BigInt denom_lcm = 1;
  std::vector<BigRational> y(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    y[i] = m[i][dim] / m[i][i];
    const BigInt d = boost::multiprecision::denominator(y[i]);
    denom_lcm = boost::multiprecision::lcm(denom_lcm, d);
  }
  std::int64_t k = 0;
  BigInt rest = denom_lcm;
  while ((rest & 1) == 0) {
    rest >>= 1;
    ++k;
  }
  if (rest != 1) throw ZxError(ErrorCode::NonInvertible, "inverse leaves the dyadic ring");
  std::vector<BigInt> coeffs(dim);
  for (std::size_t i = 0; i < dim; ++i)
    coeffs[i] = boost::multiprecision::numerator(y[i]) * (denom_lcm / boost::multiprecision::denominator(y[i]));
  // a = P / 2^p, so a^{-1} = 2^p * P^{-1}.
  IntPolynomial result(std::move(coeffs));
  if (k >= a.p()) return canonicalize(order, k - a.p(), result);
  return canonicalize(order, 0, result * (BigInt(1) << static_cast<unsigned>(a.p() - k)));
}

DyadicCyclotomic invert_one_plus_root(std::int64_t order, std::int64_t k) {
  check_order(order);
  const std::int64_t kk = mod(k, order);
  if (2 * kk == order)
    throw ZxError(ErrorCode::NonInvertible, "1 + zeta^k vanishes when zeta^k = -1");
  const std::int64_t root_order = kk == 0 ? 1 : order / std::gcd(order, kk);
  if (!is_power_of_two(root_order)) return inverse(canonicalize(order, 0, IntPolynomial{1} + IntPolynomial::monomial(1, static_cast<std::size_t>(kk))));
  if (root_order == 1) return canonicalize(order, 1, IntPolynomial{1});

  // With u of order 2^t: (1+u)(1-u)(1+u^2)...(1+u^{2^{t-2}}) = 1 - u^{2^{t-1}} = 2.
  const IntPolynomial u = IntPolynomial::monomial(1, static_cast<std::size_t>(kk));
  IntPolynomial acc = IntPolynomial{1} - u;
  const IntPolynomial& phi = cached_cyclotomic(order);
  std::int64_t power = kk;
  for (std::int64_t step = 4; step < root_order; step *= 2) {
    power = mod(2 * power, order);
    acc = (acc * (IntPolynomial{1} + IntPolynomial::monomial(1, static_cast<std::size_t>(power)))).divmod_monic(phi).second;
  }
  return canonicalize(order, 1, acc);
}

ComplexApprox eval_complex(const DyadicCyclotomic& a) {
  std::complex<double> acc = 0.0;
  const auto& c = a.poly().coeffs();
  const double n = static_cast<double>(a.order());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const double angle = a.order() == 0 ? 0.0 : 2.0 * M_PI * static_cast<double>(i) / n;
    acc += c[i].convert_to<double>() * std::polar(1.0, angle);
  }
  acc = std::ldexp(1.0, -static_cast<int>(a.p())) * acc;
  return {acc.real(), acc.imag()};
}

}  // namespace zx
