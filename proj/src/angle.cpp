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


#include "zx/angle.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "zx/errors.hpp"

namespace zx {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Angle Angle::pi(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ZxError(ErrorCode::Precondition, "angle with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Angle a;
  a.num_ = mod(num, 2 * den);
  a.den_ = den;
  return a;
}

Angle Angle::radians(double value) {
  if (!std::isfinite(value)) throw ZxError(ErrorCode::Precondition, "angle must be finite");
  Angle a;
  a.exact_ = false;
  a.rad_ = value;
  return a;
}

double Angle::value() const { return exact_ ? M_PI * static_cast<double>(num_) / static_cast<double>(den_) : rad_; }

Angle Angle::operator+(const Angle& o) const {
  if (exact_ && o.exact_) {
    const std::int64_t l = std::lcm(den_, o.den_);
    return pi(num_ * (l / den_) + o.num_ * (l / o.den_), l);
  }
  return radians(value() + o.value());
}

Angle Angle::operator-() const { return exact_ ? pi(-num_, den_) : radians(-rad_); }

Angle Angle::times(std::int64_t k) const {
  if (!exact_) return radians(rad_ * static_cast<double>(k));
  const auto wide = static_cast<__int128>(num_) * k % (2 * static_cast<__int128>(den_));
  return pi(static_cast<std::int64_t>(wide), den_);
}

bool Angle::operator==(const Angle& o) const {
  if (exact_ != o.exact_) return false;
  return exact_ ? (num_ == o.num_ && den_ == o.den_) : rad_ == o.rad_;
}

std::int64_t Angle::root_exponent(std::int64_t order) const {
  if (!exact_) throw ZxError(ErrorCode::ExactAngle, "real angle has no exact root of unity");
  if (order % (2 * den_) != 0)
    throw ZxError(ErrorCode::Embedding,
                  "angle " + to_string() + "pi is not in the ring of order " + std::to_string(order));
  return num_ * (order / (2 * den_));
}

std::string Angle::to_string() const {
  std::ostringstream os;
  if (exact_) {
    os << num_ << '/' << den_;
  } else {
    os.precision(17);
    os << rad_;
  }
  return os.str();
}

Angle parse_pi_fraction(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw ZxError(ErrorCode::Parse, "bad phase fraction '" + text + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw ZxError(ErrorCode::Parse, "bad phase fraction '" + text + "'");
    }
    if (used != s.size()) throw ZxError(ErrorCode::Parse, "bad phase fraction '" + text + "'");
    return static_cast<std::int64_t>(v);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Angle::pi(parse_int(text), 1);
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw ZxError(ErrorCode::Parse, "phase denominator must be positive in '" + text + "'");
  return Angle::pi(parse_int(text.substr(0, slash)), den);
}

Fragment Fragment::rational(std::int64_t n) {
  if (n < 1) throw ZxError(ErrorCode::Precondition, "fragment parameter must be positive");
  return Fragment{false, n};
}

bool Fragment::dyadic() const {
  const std::int64_t q = 4 * n;
  return !unrestricted && (q & (q - 1)) == 0;
}

int Fragment::dyadic_exponent() const {
  if (!dyadic()) throw ZxError(ErrorCode::Precondition, "fragment is not dyadic");
  int k = 0;
  for (std::int64_t q = 4 * n; q > 1; q >>= 1) ++k;
  return k;
}

bool Fragment::contains(const Fragment& o) const {
  if (unrestricted) return true;
  return !o.unrestricted && n % o.n == 0;
}

bool Fragment::contains(const Angle& a) const { return contains(fragment_of(a)); }

Fragment Fragment::join(const Fragment& o) const {
  if (unrestricted || o.unrestricted) return any();
  return rational(std::lcm(n, o.n));
}

std::string Fragment::to_string() const {
  if (unrestricted) return "unrestricted";
  if (dyadic()) return "pi/" + std::to_string(4 * n) + " (dyadic, pi/2^" + std::to_string(dyadic_exponent()) + ")";
  return "pi/" + std::to_string(4 * n);
}

Fragment fragment_of(const Angle& a) {
  if (!a.is_exact()) return Fragment::any();
  return Fragment::rational(std::lcm<std::int64_t>(4, a.den()) / 4);
}

}  // namespace zx
