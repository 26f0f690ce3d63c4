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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "zx/errors.hpp"
#include "zx/gadgets.hpp"
#include "zx/graph.hpp"

using namespace zx;
using namespace zx::testing;

namespace {

InterpOptions exact(std::int64_t order = 0) {
  InterpOptions o;
  o.backend = Backend::exact(order);
  return o;
}

Matrix ints(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<DyadicCyclotomic>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return exact_matrix(r, 8);
}

Matrix half(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<DyadicCyclotomic>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long long v : row) r.back().push_back(make_rational(1, IntPolynomial::constant(v)));
  }
  return exact_matrix(r, 8);
}

bool same(const Term& t, const Matrix& m) { return mat_equal(interp(t, exact()), m); }

DyadicCyclotomic scalar_of(const Term& t, std::int64_t order = 8) {
  return interp(t, exact(order)).exact()(0, 0);
}

std::complex<double> float_scalar(const Matrix& m) {
  return m.is_exact() ? eval_complex(m.exact()(0, 0)).value() : m.floating()(0, 0);
}

}  // namespace

TEST_CASE("gate contracts") {
  CHECK(same(and_gate(), ints({{1, 1, 1, 0}, {0, 0, 0, 1}})));
  CHECK(same(triangle(), ints({{1, 1}, {0, 1}})));
  CHECK(same(not_gate(), ints({{0, 1}, {1, 0}})));
  CHECK(same(plug(transistor(), 0), ints({{1, 0}, {0, 1}})));
  CHECK(same(plug(transistor(), 1), ints({{1, 1}, {0, 0}})));
  CHECK(same(w_split(), ints({{1, 0}, {0, 1}, {0, 1}, {0, 0}})));
  CHECK(same(basis_state(0), ints({{1}, {0}})));
  CHECK(same(basis_state(1), ints({{0}, {1}})));
  CHECK(same(basis_effect(1), ints({{0, 1}})));
  CHECK_THROWS_AS(basis_state(2), ZxError);
}

TEST_CASE("merge multiplies outputs pointwise") {
  CHECK(same(merge_outputs(1), ints({{1, 0, 0, 0}, {0, 0, 0, 1}})));
  const Matrix m = interp(merge_outputs(2), exact());
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 16);
  for (Eigen::Index col = 0; col < 16; ++col) {
    const int a0 = (col >> 3) & 1, a1 = (col >> 2) & 1, b0 = (col >> 1) & 1, b1 = col & 1;
    for (Eigen::Index row = 0; row < 4; ++row) {
      const bool hit = a0 == b0 && a1 == b1 && row == ((a0 << 1) | a1);
      CHECK(m.exact()(row, col) == DyadicCyclotomic(hit ? 1 : 0));
    }
  }
  CHECK(merge_outputs(0).size() == Term::empty().size());
}

TEST_CASE("scalar diagrams") {
  CHECK(scalar_of(scalar_diagram(ScalarValue::Two)) == DyadicCyclotomic(2));
  CHECK(scalar_of(scalar_diagram(ScalarValue::Half)) == make_rational(1, IntPolynomial::constant(1)));
  CHECK(scalar_of(scalar_diagram(ScalarValue::InvSqrt2)) == sqrt2_inv(8));
  CHECK(scalar_of(scalar_diagram(ScalarValue::Sqrt2)) == sqrt2_inv(8) * DyadicCyclotomic(2));
  for (std::int64_t k = 0; k < 16; ++k)
    CHECK(scalar_of(scalar_diagram(ScalarValue::Phase, Angle::pi(k, 8)), 16) == root_power(16, k));
  const double theta = 0.7312;
  const auto v = float_scalar(interp(scalar_diagram(ScalarValue::Phase, Angle::radians(theta))));
  CHECK(std::abs(v - std::polar(1.0, theta)) < 1e-12);
}

TEST_CASE("controlled states") {
  CHECK_THROWS_AS(ControlledState(Term::z(2, 1)), ZxError);
  CHECK(!is_controlled_state(triangle(), exact()));
  CHECK(is_controlled_state(transpose(triangle()), exact()));
  CHECK(is_controlled_state(Term::z(1, 0, Angle::pi(1, 4)), exact()));
  CHECK(!is_controlled_state(Term::x(1, 0), exact()));
  CHECK(is_controlled_state(c_half().diagram(), exact()));
  CHECK(mat_equal(encoded(c_half(), exact()), half({{1}})));
  CHECK(mat_equal(on_zero(c_half(), exact()), ints({{1}})));
  CHECK(mat_equal(encoded(lambda_unit(Angle::pi(1, 2)), exact()), exact_matrix({{root_power(8, 2)}}, 8)));
}

TEST_CASE("sum and product of controlled states") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> k(0, 7);
  for (int trial = 0; trial < 20; ++trial) {
    const int a = k(rng), b = k(rng), c = k(rng), d = k(rng);
    // |x> -> e^{i pi/4 (u x0 + v x1) c}, each phase switched on by AND with the control.
    auto state = [](int u, int v) {
      CircuitBuilder b(1);
      std::vector<int> c = b.apply(Term::z(1, 2), {0});
      std::vector<int> out;
      for (int i = 0; i < 2; ++i) {
        std::vector<int> x = b.add(Term::z(0, 2));
        int both = b.apply(and_gate(), {c[i], x[0]})[0];
        b.apply(Term::z(1, 0, Angle::pi(i == 0 ? u : v, 4)), {both});
        out.push_back(x[1]);
      }
      return ControlledState(b.finish(out));
    };
    const ControlledState s = state(a, b);
    const ControlledState t = state(c, d);
    const Matrix es = encoded(s, exact());
    const Matrix et = encoded(t, exact());
    const Matrix sum = encoded(sum_cs(s, t), exact());
    const Matrix prod = encoded(prod_cs(s, t), exact());
    for (Eigen::Index i = 0; i < 4; ++i) {
      CHECK(sum.exact()(i, 0) == es.exact()(i, 0) + et.exact()(i, 0));
      CHECK(prod.exact()(i, 0) == es.exact()(i, 0) * et.exact()(i, 0));
    }
    CHECK(is_controlled_state(sum_cs(s, t).diagram(), exact()));
    CHECK(is_controlled_state(prod_cs(s, t).diagram(), exact()));
  }
  CHECK_THROWS_AS(sum_cs(c_half(), ControlledState(Term::z(1, 1))), ZxError);
  CHECK_THROWS_AS(prod_cs(c_half(), ControlledState(Term::z(1, 1))), ZxError);
}

TEST_CASE("monoid laws on controlled scalars") {
  const ControlledState one(Term::z(1, 0));
  const ControlledState zero(basis_effect(0));
  const ControlledState u = lambda_unit(Angle::pi(3, 4));
  const ControlledState v = c_half();
  auto value = [](const ControlledState& s) { return encoded(s, exact()).exact()(0, 0); };
  CHECK(value(sum_cs(u, zero)) == value(u));
  CHECK(value(prod_cs(u, one)) == value(u));
  CHECK(value(prod_cs(u, zero)) == DyadicCyclotomic(0));
  CHECK(value(sum_cs(u, v)) == value(sum_cs(v, u)));
  CHECK(value(prod_cs(u, v)) == value(prod_cs(v, u)));
  CHECK(value(prod_cs(u, sum_cs(v, one))) == value(sum_cs(prod_cs(u, v), u)));
}

TEST_CASE("gamma evaluates integer polynomials at roots") {
  // 1 + i at alpha = pi/4 via X^2 + 1.
  const ControlledState g = gamma(Angle::pi(1, 4), IntPolynomial{1, 0, 1});
  CHECK(encoded(g, exact()).exact()(0, 0) == DyadicCyclotomic(1) + root_power(8, 2));
  // Phi_{8n} vanishes at e^{i pi / 4n}.
  for (std::int64_t n = 1; n <= 3; ++n) {
    const ControlledState z = gamma(Angle::pi(1, 4 * n), cyclotomic_poly(8 * n));
    CHECK(encoded(z, exact(8 * n)).exact()(0, 0).is_zero());
  }
  // Independent float evaluation of random polynomials.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<BigInt> c;
    for (int i = 0; i < 4; ++i) c.emplace_back(coeff(rng));
    const IntPolynomial p(c);
    const auto v = float_scalar(encoded(gamma(Angle::pi(1, 8), p), exact(16)));
    CHECK(std::abs(v - p.evaluate(std::polar(1.0, M_PI / 8))) < 1e-9);
  }
  CHECK(encoded(gamma(Angle::pi(1, 4), IntPolynomial{}), exact()).exact()(0, 0).is_zero());
  CHECK_THROWS_AS(gamma(Angle::radians(0.3), IntPolynomial{1}), ZxError);
}

TEST_CASE("lambda_rational encodes canonical values") {
  const DyadicCyclotomic x = canonicalize(8, 2, IntPolynomial{3, -1, 0, 2});
  const ControlledState s = lambda_rational(1, x.p(), x.poly());
  CHECK(is_controlled_state(s.diagram(), exact()));
  CHECK(encoded(s, exact()).exact()(0, 0) == x);
  const DyadicCyclotomic y = canonicalize(16, 1, IntPolynomial{1, 0, 0, 1, 0, 0, 0, 0});
  CHECK(encoded(lambda_rational(2, y.p(), y.poly()), exact(16)).exact()(0, 0) == y);
  CHECK_THROWS_AS(lambda_rational(1, 1, IntPolynomial{2}), ZxError);
  CHECK_THROWS_AS(lambda_rational(1, 0, IntPolynomial{1, 0, 0, 0, 1}), ZxError);
}

TEST_CASE("lambda_real reaches arbitrary complex numbers") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> part(-8.0, 8.0);
  std::vector<std::complex<double>> xs = {0.0, 1.0, -1.0, {0.0, 1.0}, 0.5, 7.99, {-3.0, 4.0}};
  for (int i = 0; i < 30; ++i) {
    std::complex<double> x(part(rng), part(rng));
    if (std::abs(x) <= 8.0) xs.push_back(x);
  }
  for (const auto& x : xs) {
    const ControlledState s = lambda_real(x);
    const Matrix m = interp(s.diagram());
    CHECK(std::abs(float_scalar(column(m, 0)) - 1.0) < 1e-9);
    CHECK(std::abs(float_scalar(column(m, 1)) - x) < 1e-9);
  }
  CHECK_THROWS_AS(lambda_real({NAN, 0.0}), ZxError);
}

TEST_CASE("graph equality sees through relabelling") {
  const OpenGraph a = to_graph(triangle());
  const OpenGraph b = to_graph(from_graph(to_graph(triangle())));
  CHECK(graph_equal(a, b));
  CHECK(!graph_equal(a, to_graph(transpose(triangle()))));
}

TEST_CASE("AND is a commutative monoid with unit |1>") {
  const Term one = basis_state(1);
  CHECK(mat_equal(interp(compose(Term::swap(), and_gate()), exact()), interp(and_gate(), exact())));
  CHECK(mat_equal(interp(compose(tensor(one, Term::id()), and_gate()), exact()), interp(Term::id(), exact())));
  CHECK(mat_equal(interp(compose(tensor(and_gate(), Term::id()), and_gate()), exact()),
                  interp(compose(tensor(Term::id(), and_gate()), and_gate()), exact())));
}

TEST_CASE("transposed AND and Z copy form a bialgebra") {
  const Term delta = transpose(and_gate());
  const Term eps = basis_effect(1);
  const Term mu = Term::z(2, 1);
  const Term eta = Term::z(0, 1);
  auto eq = [](const Term& a, const Term& b) { return mat_equal(interp(a, exact()), interp(b, exact())); };
  CHECK(eq(compose(eta, eps), Term::empty()));
  CHECK(eq(compose(mu, eps), tensor(eps, eps)));
  CHECK(eq(compose(eta, delta), tensor(eta, eta)));
  const Term middle = tensor_all({Term::id(), Term::swap(), Term::id()});
  CHECK(eq(compose(mu, delta), compose_all({tensor(delta, delta), middle, tensor(mu, mu)})));
}
