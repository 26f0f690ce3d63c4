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

#include <cstdint>
#include <string>

namespace zx {

/// A spider phase: either an exact rational multiple of pi, kept reduced and
/// in [0, 2pi), or a finite real number of radians.
class Angle {
 public:
  Angle() = default;

  /// (num/den) * pi.
  static Angle pi(std::int64_t num, std::int64_t den = 1);
  static Angle radians(double value);

  bool is_exact() const { return exact_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Value in radians; for exact angles this is num/den * pi.
  double value() const;
  bool is_zero() const { return exact_ ? num_ == 0 : rad_ == 0.0; }

  Angle operator+(const Angle& o) const;
  Angle operator-(const Angle& o) const { return *this + (-o); }
  Angle operator-() const;
  Angle times(std::int64_t k) const;

  /// Structural equality; an exact angle never equals a real one.
  bool operator==(const Angle& o) const;
  bool operator!=(const Angle& o) const { return !(*this == o); }

  /// Exponent e with e^{i angle} = zeta_order^e. Requires an exact angle with
  /// 2*den dividing order.
  std::int64_t root_exponent(std::int64_t order) const;

  /// "num/den" for exact angles, the radian value otherwise.
  std::string to_string() const;

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double rad_ = 0.0;
};

/// Parse "a/b" or "a" as a multiple of pi.
Angle parse_pi_fraction(const std::string& text);

/// The pi/4n fragment (ring order 8n), or the unrestricted fragment.
struct Fragment {
  bool unrestricted = false;
  std::int64_t n = 1;

  static Fragment rational(std::int64_t n);
  static Fragment any() { return Fragment{true, 1}; }

  std::int64_t order() const { return 8 * n; }
  /// 4n is a power of two: the fragment is pi/2^k with k = dyadic_exponent().
  bool dyadic() const;
  int dyadic_exponent() const;

  bool contains(const Fragment& o) const;
  bool contains(const Angle& a) const;
  Fragment join(const Fragment& o) const;
  bool operator==(const Fragment& o) const { return unrestricted == o.unrestricted && (unrestricted || n == o.n); }

  std::string to_string() const;
};

/// Smallest fragment containing the angle (and pi/4).
Fragment fragment_of(const Angle& a);

}  // namespace zx
