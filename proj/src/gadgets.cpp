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


#include "zx/gadgets.hpp"

#include <cmath>

#include "zx/errors.hpp"

namespace zx {

namespace {

const Angle kPi = Angle::pi(1);

Term z_phase_sum_and() {
  // [c = ab] = 1/2 sum_z (-1)^{zc} (-1)^{zab}; the cubic phase pi*zab expands
  // over parities as pi/4 (z + a + b - z^a - z^b - a^b + z^a^b).
  CircuitBuilder b(2);
  int a = 0;
  int bb = 1;
  int z = b.add(Term::z(0, 1))[0];
  a = b.apply(Term::z(1, 1, Angle::pi(1, 4)), {a})[0];
  bb = b.apply(Term::z(1, 1, Angle::pi(1, 4)), {bb})[0];
  z = b.apply(Term::z(1, 1, Angle::pi(1, 4)), {z})[0];
  auto gadget = [&](std::vector<int*> vars, Angle theta) {
    std::vector<int> copies;
    for (int* v : vars) {
      std::vector<int> out = b.apply(Term::z(1, 2), {*v});
      *v = out[0];
      copies.push_back(out[1]);
    }
    int parity = b.apply(Term::x(static_cast<int>(copies.size()), 1), copies)[0];
    b.apply(Term::z(1, 0, theta), {parity});
  };
  gadget({&z, &a}, Angle::pi(-1, 4));
  gadget({&z, &bb}, Angle::pi(-1, 4));
  gadget({&a, &bb}, Angle::pi(-1, 4));
  gadget({&z, &a, &bb}, Angle::pi(1, 4));
  b.apply(Term::z(1, 0), {a});
  b.apply(Term::z(1, 0), {bb});
  int c = b.apply(Term::h(), {z})[0];
  // Parity gadgets on k wires shrink norms by 2^{(k-1)/2}: a factor 1/4 in total.
  b.add(Term::z(0, 0));
  b.add(Term::z(0, 0));
  return b.finish({c});
}

Term cosine_effect(const Angle& beta) {
  // c -> cos(beta c) = 1/2 sum_b e^{-i beta b} e^{i beta (b xor c)}
  CircuitBuilder b(1);
  int extra = b.add(Term::z(0, 1, -beta))[0];
  int parity = b.apply(Term::x(2, 1), {0, extra})[0];
  b.apply(Term::z(1, 0, beta), {parity});
  b.add(scalar_diagram(ScalarValue::InvSqrt2));
  return b.finish({});
}

Term copies(int k) { return Term::z(1, k); }

Term balanced_sum(const std::vector<Term>& units, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return units[lo];
  const std::size_t mid = (lo + hi) / 2;
  return sum_cs(ControlledState(balanced_sum(units, lo, mid)), ControlledState(balanced_sum(units, mid, hi))).diagram();
}

}  // namespace

ControlledState::ControlledState(Term diagram) : diagram_(std::move(diagram)) {
  if (diagram_.inputs() != 1)
    throw ZxError(ErrorCode::Arity, "a controlled state has exactly one input, got " + std::to_string(diagram_.inputs()));
}

Matrix encoded(const ControlledState& s, const InterpOptions& options) {
  return column(interp(s.diagram(), options), 1);
}

Matrix on_zero(const ControlledState& s, const InterpOptions& options) {
  return column(interp(s.diagram(), options), 0);
}

bool is_controlled_state(const Term& d, const InterpOptions& options) {
  if (d.inputs() != 1) throw ZxError(ErrorCode::Arity, "controlled states have one input");
  const Matrix zero = column(interp(d, options), 0);
  if (zero.is_exact()) {
    for (Eigen::Index i = 0; i < zero.rows(); ++i)
      if (zero.exact()(i, 0) != DyadicCyclotomic(1)) return false;
    return true;
  }
  for (Eigen::Index i = 0; i < zero.rows(); ++i)
    if (std::abs(zero.floating()(i, 0) - 1.0) > 1e-9) return false;
  return true;
}

Term and_gate() {
  static const Term t = z_phase_sum_and();
  return t;
}

Term not_gate() { return Term::x(1, 1, kPi); }

Term triangle() {
  // [y <= x] = sum_c [c = x AND y][c = y]
  static const Term t = [] {
    CircuitBuilder b(1);
    std::vector<int> y = b.add(Term::z(0, 2));
    int c = b.apply(and_gate(), {0, y[0]})[0];
    int out = b.apply(Term::z(2, 1), {c, y[1]})[0];
    return b.finish({out});
  }();
  return t;
}

Term transistor() {
  static const Term t = compose(tensor(not_gate(), Term::id()), and_gate());
  return t;
}

Term w_split() {
  // X(1,2) spreads c over pairs of parity c; the AND check removes |11>.
  static const Term t = [] {
    CircuitBuilder b(1);
    std::vector<int> ab = b.apply(Term::x(1, 2), {0});
    std::vector<int> ca = b.apply(copies(2), {ab[0]});
    std::vector<int> cb = b.apply(copies(2), {ab[1]});
    int both = b.apply(and_gate(), {ca[1], cb[1]})[0];
    b.apply(Term::x(1, 0), {both});
    return b.finish({ca[0], cb[0]});
  }();
  return t;
}

Term merge_outputs(int n) {
  CircuitBuilder b(2 * n);
  std::vector<int> out;
  for (int i = 0; i < n; ++i) out.push_back(b.apply(Term::z(2, 1), {i, n + i})[0]);
  return b.finish(out);
}

Term basis_state(int bit) {
  if (bit != 0 && bit != 1) throw ZxError(ErrorCode::Precondition, "basis index must be 0 or 1");
  return tensor(Term::x(0, 1, bit ? kPi : Angle{}), scalar_diagram(ScalarValue::InvSqrt2));
}

Term basis_effect(int bit) { return transpose(basis_state(bit)); }

Term plug(const Term& d, int bit) {
  if (d.inputs() < 1) throw ZxError(ErrorCode::Arity, "nothing to plug into");
  return compose(tensor(basis_state(bit), identity(d.inputs() - 1)), d);
}

Term scalar_diagram(ScalarValue value, const Angle& theta) {
  static const Term two = Term::z(0, 0);
  static const Term sqrt2 = compose(Term::x(0, 1), Term::z(1, 0));
  static const Term inv_sqrt2 =
      compose_all({Term::cap(), tensor(compose(Term::h(), triangle()), Term::id()), Term::cup()});
  static const Term half = tensor(inv_sqrt2, inv_sqrt2);
  switch (value) {
    case ScalarValue::Two: return two;
    case ScalarValue::Half: return half;
    case ScalarValue::Sqrt2: return sqrt2;
    case ScalarValue::InvSqrt2: return inv_sqrt2;
    case ScalarValue::Phase:
      return tensor(compose(Term::x(0, 1, kPi), Term::z(1, 0, theta)), inv_sqrt2);
  }
  return two;
}

ControlledState sum_cs(const ControlledState& a, const ControlledState& b) {
  if (a.outputs() != b.outputs())
    throw ZxError(ErrorCode::Arity, "sum of controlled states with " + std::to_string(a.outputs()) + " and " +
                                        std::to_string(b.outputs()) + " outputs");
  Term t = compose(w_split(), tensor(a.diagram(), b.diagram()));
  if (a.outputs() > 0) t = compose(t, merge_outputs(a.outputs()));
  return ControlledState(t);
}

ControlledState prod_cs(const ControlledState& a, const ControlledState& b) {
  if (a.outputs() != b.outputs())
    throw ZxError(ErrorCode::Arity, "product of controlled states with " + std::to_string(a.outputs()) + " and " +
                                        std::to_string(b.outputs()) + " outputs");
  Term t = compose(copies(2), tensor(a.diagram(), b.diagram()));
  if (a.outputs() > 0) t = compose(t, merge_outputs(a.outputs()));
  return ControlledState(t);
}

ControlledState lambda_unit(const Angle& alpha) { return ControlledState(Term::z(1, 0, alpha)); }

ControlledState gamma(const Angle& alpha, const IntPolynomial& poly) {
  if (!alpha.is_exact()) throw ZxError(ErrorCode::ExactAngle, "gamma needs an exact angle");
  std::vector<Term> units;
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
    const BigInt& c = poly.coeffs()[k];
    const Angle phase = alpha.times(static_cast<std::int64_t>(k)) + (c < 0 ? kPi : Angle{});
    const BigInt count = c < 0 ? BigInt(-c) : c;
    for (BigInt i = 0; i < count; ++i) units.push_back(Term::z(1, 0, phase));
  }
  if (units.empty()) return ControlledState(basis_effect(0));
  return ControlledState(balanced_sum(units, 0, units.size()));
}

ControlledState c_half() {
  // (<0| + <1|) T^t = (2, 1), halved.
  static const ControlledState s(
      tensor(compose(transpose(triangle()), Term::z(1, 0)), scalar_diagram(ScalarValue::Half)));
  return s;
}

ControlledState lambda_rational(std::int64_t n, std::int64_t p, const IntPolynomial& poly) {
  if (n < 1 || p < 0) throw ZxError(ErrorCode::Precondition, "lambda_rational needs n >= 1 and p >= 0");
  const DyadicCyclotomic canon = canonicalize(8 * n, p, poly);
  if (canon.p() != p || canon.poly() != poly)
    throw ZxError(ErrorCode::Canonicity, "(" + std::to_string(p) + ", " + poly.to_string() +
                                             ") is not canonical at order " + std::to_string(8 * n));
  ControlledState s = gamma(Angle::pi(1, 4 * n), poly);
  for (std::int64_t i = 0; i < p; ++i) s = prod_cs(s, c_half());
  return s;
}

ControlledState lambda_real(std::complex<double> x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw ZxError(ErrorCode::Precondition, "lambda_real needs a finite value");
  if (x == 0.0) return ControlledState(basis_effect(0));
  const double rho = std::abs(x);
  const double theta = std::arg(x);
  const int n = std::max(0, static_cast<int>(std::ceil(std::log2(rho))));
  const double scale = std::ldexp(1.0, n);
  const double beta = std::acos(std::min(1.0, rho / scale));
  const double gam = std::acos(1.0 / scale);
  // c -> 2^n * cos(beta c) * e^{i theta c} * cos(gamma (1 - c))
  CircuitBuilder b(1);
  std::vector<int> c = b.apply(copies(3), {0});
  b.apply(cosine_effect(Angle::radians(beta)), {c[0]});
  b.apply(Term::z(1, 0, Angle::radians(theta)), {c[1]});
  b.apply(compose(not_gate(), cosine_effect(Angle::radians(gam))), {c[2]});
  for (int i = 0; i < n; ++i) b.add(scalar_diagram(ScalarValue::Two));
  return ControlledState(b.finish({}));
}

}  // namespace zx
