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

#include <random>

#include "support.hpp"
#include "zx/errors.hpp"
#include "zx/gadgets.hpp"
#include "zx/normalform.hpp"
#include "zx/rules.hpp"

using namespace zx;
using namespace zx::testing;

namespace {

InterpOptions exact(std::int64_t order = 0) {
  InterpOptions o;
  o.backend = Backend::exact(order);
  return o;
}

bool same_map(const OpenGraph& a, const OpenGraph& b) {
  return mat_equal(interp(from_graph(a)), interp(from_graph(b)));
}

const std::vector<Rule>& rules() {
  static const std::vector<Rule> r = builtin_rules();
  return r;
}

OpenGraph chain(std::vector<Angle> phases) {
  OpenGraph g(1, 1);
  Endpoint prev = Endpoint::input(0);
  for (const Angle& a : phases) {
    const int v = g.add_vertex(VertexKind::Z, a);
    g.add_edge(prev, Endpoint::vertex(v));
    prev = Endpoint::vertex(v);
  }
  g.add_edge(prev, Endpoint::output(0));
  return g;
}

}  // namespace

TEST_CASE("rule set and variants") {
  const auto base = base_rules();
  CHECK(base.size() == 12);
  std::vector<std::string> names;
  for (const Rule& r : base) names.push_back(r.name);
  CHECK(names == std::vector<std::string>{"S1", "S2", "E", "B1", "B2", "K", "EU", "H", "SUP", "C", "BW", "A"});
  // E has no boundary, so flipping changes nothing; H has no spiders, so colours change nothing.
  CHECK(rules().size() == 4 * 12 - 2 - 2);
  // Base rules with their colour swaps: twice the base count minus H.
  int unflipped = 0;
  for (const Rule& r : rules())
    if (r.name.find(".flip") == std::string::npos) ++unflipped;
  CHECK(unflipped == 2 * 12 - 1);
  CHECK_THROWS_AS(find_rule(rules(), "nope"), ZxError);
}

TEST_CASE("rule instances") {
  const Rule& s1 = find_rule(rules(), "S1");
  Instance zero{{Angle{}, Angle{}}, {1, 1}, {1}};
  const auto [l, r] = instantiate_terms(s1, zero);
  CHECK(mat_equal(interp(l), interp(Term::z(1, 1))));
  CHECK(mat_equal(interp(r), interp(Term::z(1, 1))));
  const auto [el, er] = instantiate_terms(find_rule(rules(), "E"), Instance{});
  CHECK(er.inputs() == 0);
  CHECK(er.outputs() == 0);
  CHECK(interp(el, exact()).exact()(0, 0) == DyadicCyclotomic(1));
  CHECK(interp(er, exact()).exact()(0, 0) == DyadicCyclotomic(1));
  CHECK_THROWS_AS(instantiate(s1, s1.lhs, Instance{}), ZxError);
}

TEST_CASE("every rule is sound") {
  for (const Rule& r : rules()) {
    CAPTURE(r.name);
    CHECK(check_soundness(r, 30, Fragment::rational(1), 5).ok());
    CHECK(check_soundness(r, 30, Fragment::rational(3), 6).ok());
    CHECK(check_soundness(r, 30, Fragment::any(), 7).ok());
  }
}

TEST_CASE("soundness reports counterexamples") {
  Rule bad = find_rule(rules(), "S1");
  bad.rhs.nodes[0].phase = PhaseExpr::param(0);
  const SoundnessReport rep = check_soundness(bad, 50, Fragment::rational(1));
  CHECK(!rep.ok());
  REQUIRE(rep.counterexample);
  CHECK(!rep.counterexample->params[1].is_zero());
  Instance witness{{Angle::pi(1, 4), Angle::pi(1, 4)}, {1, 1}, {1}};
  const auto [l, r] = instantiate_terms(bad, witness);
  CHECK(!mat_equal(interp(l), interp(r)));
  CHECK_THROWS_AS(check_soundness(bad, 0, Fragment::rational(1)), ZxError);
}

TEST_CASE("matching") {
  const Rule& s1 = find_rule(rules(), "S1");
  const OpenGraph two = chain({Angle::pi(1, 4), Angle::pi(1, 4)});
  const auto m2 = find_matches(two, s1);
  REQUIRE(m2.size() == 1);
  const OpenGraph fused = apply_rule(two, s1, m2[0]);
  CHECK(fused.vertices().size() == 1);
  CHECK(fused.vertices().begin()->second.phase == Angle::pi(1, 2));
  CHECK(same_map(two, fused));
  CHECK(find_matches(chain({Angle{}, Angle{}, Angle{}}), s1).size() == 2);
  const OpenGraph empty(0, 0);
  for (const Rule& r : rules()) {
    CAPTURE(r.name);
    CHECK(find_matches(empty, r).empty());
  }
  CHECK(find_matches(empty, find_rule(rules(), "E"), Direction::Backward).size() == 1);
  const OpenGraph grown = apply_rule(empty, find_rule(rules(), "E"), find_matches(empty, find_rule(rules(), "E"), Direction::Backward)[0], Direction::Backward);
  CHECK(grown.vertices().size() == 2);
  CHECK(same_map(empty, grown));
}

TEST_CASE("rewrites on wires") {
  const OpenGraph wire = to_graph(Term::id());
  const Rule& s2 = find_rule(rules(), "S2");
  const auto back = find_matches(wire, s2, Direction::Backward);
  REQUIRE(back.size() == 1);
  const OpenGraph grown = apply_rule(wire, s2, back[0], Direction::Backward);
  CHECK(grown.vertices().size() == 1);
  CHECK(same_map(wire, grown));
  const OpenGraph hh = to_graph(compose(Term::h(), Term::h()));
  const Rule& h = find_rule(rules(), "H");
  const auto hm = find_matches(hh, h);
  REQUIRE(hm.size() == 1);
  const OpenGraph shrunk = apply_rule(hh, h, hm[0]);
  CHECK(shrunk.vertices().empty());
  CHECK(same_map(hh, shrunk));
  CHECK(graph_equal(shrunk, wire));
  // Splitting a spider backwards through S1 keeps the map.
  const OpenGraph one = to_graph(Term::z(2, 2, Angle::pi(3, 4)));
  const auto split = find_matches(one, find_rule(rules(), "S1"), Direction::Backward);
  REQUIRE(!split.empty());
  CHECK(same_map(one, apply_rule(one, find_rule(rules(), "S1"), split[0], Direction::Backward)));
  Match broken = hm[0];
  broken.vertices = {999, 998};
  CHECK_THROWS_AS(apply_rule(hh, h, broken), ZxError);
}

TEST_CASE("random rewrites preserve the map and the normal form") {
  std::mt19937_64 rng(41);
  int applied = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Term d = random_term(rng, 1, 6, 4);
    OpenGraph g = to_graph(d);
    std::uniform_int_distribution<int> steps(1, 5);
    const int want = steps(rng);
    for (int s = 0; s < want; ++s) {
      std::vector<std::tuple<const Rule*, Direction, Match>> options;
      for (const Rule& r : rules())
        for (Direction dir : {Direction::Forward, Direction::Backward}) {
          if (dir == Direction::Backward && (r.name.rfind("S1", 0) == 0 || r.name.rfind("E", 0) == 0)) continue;
          for (auto& m : find_matches(g, r, dir)) options.emplace_back(&r, dir, std::move(m));
        }
      if (options.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      const auto& [r, dir, m] = options[pick(rng)];
      OpenGraph next = apply_rule(g, *r, m, dir);
      CAPTURE(r->name);
      CHECK(same_map(g, next));
      g = std::move(next);
      ++applied;
    }
    CHECK(normalize(d) == normalize(from_graph(g)));
  }
  CHECK(applied > 40);
}

TEST_CASE("angle multiplier") {
  CHECK(angle_multiplier(Term::z(1, 1, Angle::pi(1, 4)), 9).phase() == Angle::pi(1, 4));
  CHECK(angle_multiplier(Term::z(1, 1, Angle::pi(1, 12)), 9).phase() == Angle::pi(3, 4));
  CHECK_THROWS_AS(angle_multiplier(Term::z(1, 1, Angle::radians(0.1)), 3), ZxError);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const Angle a = random_angle(rng, 3);
    CHECK(angle_multiplier(Term::x(0, 1, a), 1 + 2 * a.den()).phase() == a);
  }
}

TEST_CASE("incompleteness witness") {
  const IncompletenessReport r3 = incompleteness_witness(3, 10);
  CHECK(r3.multiplier == 9);
  CHECK(r3.original.is_zero());
  CHECK(r3.multiplied == DyadicCyclotomic(3));
  CHECK(r3.rule_failures == 0);
  CHECK(r3.ok());
  const IncompletenessReport r5 = incompleteness_witness(5, 3);
  CHECK(r5.original.is_zero());
  CHECK(!r5.multiplied.is_zero());
  // Independent value: Phi_40 at e^{i pi k / 4} for the multiplier 25.
  const auto expected = cyclotomic_poly(40).evaluate(std::polar(1.0, M_PI * 25.0 / 20.0));
  CHECK(std::abs(eval_complex(r5.multiplied).value() - expected) < 1e-9);
  CHECK_THROWS_AS(incompleteness_witness(9), ZxError);
  CHECK_THROWS_AS(incompleteness_witness(2), ZxError);
}

TEST_CASE("cancellation") {
  const Term z0 = Term::z(0, 0);
  const auto [a, b] = cancel_scalar(tensor(Term::h(), z0), tensor(Term::h(), z0), Angle{});
  CHECK(a == Term::h());
  CHECK(b == Term::h());
  CHECK_THROWS_AS(cancel_scalar(tensor(Term::h(), Term::z(0, 0, Angle::pi(1))), tensor(Term::h(), Term::z(0, 0, Angle::pi(1))), Angle::pi(1)), ZxError);
  CHECK_THROWS_AS(cancel_scalar(Term::h(), tensor(Term::h(), z0), Angle{}), ZxError);
  const Term s = Term::z(0, 0, Angle::pi(1, 2));
  const Term d1 = compose(Term::z(1, 1, Angle::pi(1, 4)), Term::z(1, 1, Angle::pi(1, 4)));
  const Term d2 = Term::z(1, 1, Angle::pi(1, 2));
  const auto [c1, c2] = cancel_scalar(tensor(d1, s), tensor(d2, s), Angle::pi(1, 2));
  CHECK(mat_equal(interp(c1), interp(c2)));
  CHECK(tensor(c1, s) == tensor(d1, s));
}

TEST_CASE("equations") {
  const Term hopf_l = compose(Term::z(1, 2), Term::x(2, 1));
  const Term hopf_r = tensor_all({Term::z(1, 0), Term::x(0, 1), scalar_diagram(ScalarValue::Half)});
  CHECK(verify_equation(Equation(hopf_l, hopf_r, "hopf")));
  Matrix tri = exact_matrix({{1, 1}, {0, 1}}, 8);
  CHECK(mat_equal(interp(triangle()), tri));
  CHECK(!verify_equation(Equation(Term::z(1, 1), Term::x(1, 1, Angle::pi(1)), "false")));
  CHECK(verify_equation(Equation(Term::z(1, 1, Angle::radians(0.2)), compose(Term::z(1, 1, Angle::radians(0.1)), Term::z(1, 1, Angle::radians(0.1))), "real")));
  CHECK_THROWS_AS(Equation(Term::z(1, 1), Term::z(1, 2), "bad"), ZxError);
}
