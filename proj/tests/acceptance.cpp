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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "zx/cyclotomic.hpp"
#include "zx/errors.hpp"
#include "zx/gadgets.hpp"
#include "zx/lemmas.hpp"
#include "zx/normalform.hpp"
#include "zx/rules.hpp"

using namespace zx;
using namespace zx::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

InterpOptions exact(std::int64_t order = 0) {
  InterpOptions o;
  o.backend = Backend::exact(order);
  return o;
}

bool eq(const Term& a, const Term& b) { return mat_equal(interp(a, exact()), interp(b, exact())); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome axiom_soundness() {
  const auto start = Clock::now();
  const std::vector<Rule> rules = builtin_rules();
  int failures = 0;
  std::string first;
  for (const Rule& r : rules) {
    std::uint64_t seed = 101;
    for (const Fragment& f : {Fragment::rational(1), Fragment::rational(3), Fragment::any()}) {
      const SoundnessReport rep = check_soundness(r, 100, f, seed++, 1e-9);
      if (!rep.ok()) {
        ++failures;
        if (first.empty()) first = rep.rule;
      }
    }
  }
  const double t = seconds_since(start);
  std::ostringstream s;
  s << rules.size() << " variants x 3 settings x 100 samples, " << failures << " failing" << (first.empty() ? "" : " (")
    << first << (first.empty() ? "" : ")") << ", " << t << " s";
  return {failures == 0 && t <= 60.0, s.str()};
}

Outcome cyclotomic_vanishing() {
  bool ok = true;
  for (std::int64_t n = 1; n <= 3; ++n) {
    const Term g = gamma(Angle::pi(1, 4 * n), cyclotomic_poly(8 * n)).diagram();
    const Matrix m = interp(g, exact(8 * n));
    ok = ok && m.exact()(0, 0) == DyadicCyclotomic(1) && m.exact()(0, 1).is_zero();
  }
  return {ok, "n = 1, 2, 3"};
}

DyadicCyclotomic random_scalar(std::mt19937_64& rng, std::int64_t order) {
  std::uniform_int_distribution<long long> c(-8, 8);
  std::uniform_int_distribution<std::int64_t> p(0, 3);
  std::vector<BigInt> coeffs;
  for (std::int64_t i = 0; i < totient(order); ++i) coeffs.emplace_back(c(rng));
  return canonicalize(order, p(rng), IntPolynomial(coeffs));
}

Outcome universality() {
  std::mt19937_64 rng(3);
  int good = 0;
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int n = t % 4;
    const int m = (t / 4) % 4;
    ExactMatrix e(Eigen::Index(1) << m, Eigen::Index(1) << n);
    for (Eigen::Index i = 0; i < e.size(); ++i) e.data()[i] = random_scalar(rng, 8);
    const Matrix a(e, 8);
    const auto start = Clock::now();
    const bool same = mat_equal(interp(render(lambda_map(a)), exact()), a);
    const double dt = seconds_since(start);
    worst = std::max(worst, dt);
    if (same && dt <= 2.0) ++good;
  }
  std::ostringstream s;
  s << good << "/50 exact, slowest " << worst << " s";
  return {good == 50, s.str()};
}

Outcome canonicity() {
  const std::vector<Rule> rules = builtin_rules();
  std::mt19937_64 rng(17);
  int pairs = 0;
  int same = 0;
  int attempts = 0;
  while (pairs < 100 && attempts < 1000) {
    ++attempts;
    const Term d = random_term(rng, 1, 8, 4);
    OpenGraph g = to_graph(d);
    const int want = std::uniform_int_distribution<int>(1, 5)(rng);
    int applied = 0;
    for (int s = 0; s < want; ++s) {
      std::vector<std::tuple<const Rule*, Direction, Match>> options;
      for (const Rule& r : rules)
        for (Direction dir : {Direction::Forward, Direction::Backward}) {
          if (dir == Direction::Backward && (r.name.rfind("S1", 0) == 0 || r.name.rfind("E", 0) == 0)) continue;
          for (auto& m : find_matches(g, r, dir)) options.emplace_back(&r, dir, std::move(m));
        }
      if (options.empty()) break;
      const auto& [r, dir, m] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      g = apply_rule(g, *r, m, dir);
      ++applied;
    }
    if (applied == 0) continue;
    ++pairs;
    if (normalize(d) == normalize(from_graph(g))) ++same;
  }
  std::ostringstream s;
  s << same << "/" << pairs << " structurally identical";
  return {pairs == 100 && same == 100, s.str()};
}

Outcome incompleteness() {
  const IncompletenessReport rep = incompleteness_witness(3, 50, 1);
  const bool ok = rep.original.is_zero() && rep.multiplied == DyadicCyclotomic(3) && rep.rule_failures == 0 &&
                  rep.rule_samples >= 50 * static_cast<int>(builtin_rules().size());
  std::ostringstream s;
  s << "multiplier " << rep.multiplier << ", original " << rep.original.to_string() << ", multiplied "
    << rep.multiplied.to_string() << ", " << rep.rule_failures << "/" << rep.rule_samples << " instances broken";
  return {ok, s.str()};
}

Outcome ring_canonicity() {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> pd(0, 3);
  std::uniform_int_distribution<int> len(0, 20);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto poly = [&](int max) {
    std::vector<BigInt> c(static_cast<std::size_t>(len(rng) % (max + 1)));
    for (auto& x : c) x = coef(rng);
    return IntPolynomial(std::move(c));
  };
  int good = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::int64_t order = t % 2 == 0 ? 8 : 24;
    const int p = pd(rng);
    const IntPolynomial q = poly(20);
    const IntPolynomial r = poly(6);
    const DyadicCyclotomic x = canonicalize(order, p, q);
    const bool idem = canonicalize(order, x.p(), x.poly()) == x;
    const bool collapse = canonicalize(order, p, q + r * cyclotomic_poly(order)) == x &&
                          canonicalize(order, p + 1, q * BigInt(2)) == x;
    if (idem && collapse) ++good;
  }
  return {good == 1000, std::to_string(good) + "/1000"};
}

Outcome dyadic_inverses() {
  int checked = 0;
  int good = 0;
  for (std::int64_t order : {16, 32, 64}) {
    for (std::int64_t k = 0; k < order; ++k) {
      if (2 * k == order) continue;
      ++checked;
      const DyadicCyclotomic x =
          canonicalize(order, 0, IntPolynomial{1} + IntPolynomial::monomial(1, static_cast<std::size_t>(k)));
      try {
        if (mul(x, invert_one_plus_root(order, k)) == canonicalize(order, 0, {1})) ++good;
      } catch (const ZxError&) {
      }
    }
  }
  return {good == checked, std::to_string(good) + "/" + std::to_string(checked)};
}

Outcome transistor_algebra() {
  const Term a = and_gate();
  const Term id = Term::id();
  const Term delta = transpose(a);
  const Term eps = basis_effect(1);
  const Term mu = Term::z(2, 1);
  const Term eta = Term::z(0, 1);
  const Term middle = tensor_all({id, Term::swap(), id});
  const std::vector<bool> laws = {
      eq(compose(Term::swap(), a), a),
      eq(compose(tensor(basis_state(1), id), a), id),
      eq(compose(tensor(a, id), a), compose(tensor(id, a), a)),
      eq(compose(eta, eps), Term::empty()),
      eq(compose(mu, eps), tensor(eps, eps)),
      eq(compose(eta, delta), tensor(eta, eta)),
      eq(compose(mu, delta), compose_all({tensor(delta, delta), middle, tensor(mu, mu)})),
  };
  const auto good = std::count(laws.begin(), laws.end(), true);
  return {good == 7, std::to_string(good) + "/7 identities"};
}

// A controlled state on k outputs with random pi/4 phases, switched on by the control.
ControlledState random_controlled(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> ph(0, 7);
  CircuitBuilder b(1);
  std::vector<int> c = b.apply(Term::z(1, k), {0});
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    std::vector<int> x = b.add(Term::z(0, 2));
    const int both = b.apply(and_gate(), {c[static_cast<std::size_t>(i)], x[0]})[0];
    b.apply(Term::z(1, 0, Angle::pi(ph(rng), 4)), {both});
    out.push_back(x[1]);
  }
  return ControlledState(b.finish(out));
}

Outcome sum_product() {
  std::mt19937_64 rng(31);
  int good = 0;
  for (int t = 0; t < 50; ++t) {
    const int k = 1 + t % 3;
    const ControlledState s = random_controlled(rng, k);
    const ControlledState u = random_controlled(rng, k);
    const Matrix es = encoded(s, exact());
    const Matrix eu = encoded(u, exact());
    const ControlledState sum = sum_cs(s, u);
    const ControlledState prod = prod_cs(s, u);
    const Matrix esum = encoded(sum, exact());
    const Matrix eprod = encoded(prod, exact());
    bool ok = is_controlled_state(s.diagram(), exact()) && is_controlled_state(u.diagram(), exact()) &&
              is_controlled_state(sum.diagram(), exact()) && is_controlled_state(prod.diagram(), exact());
    for (Eigen::Index i = 0; i < es.rows(); ++i)
      ok = ok && esum.exact()(i, 0) == es.exact()(i, 0) + eu.exact()(i, 0) &&
           eprod.exact()(i, 0) == es.exact()(i, 0) * eu.exact()(i, 0);
    if (ok) ++good;
  }
  return {good == 50, std::to_string(good) + "/50 pairs"};
}

Outcome lambda_reals() {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> part(-8.0, 8.0);
  int good = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::complex<double> x;
    do x = {part(rng), part(rng)};
    while (std::abs(x) > 8.0);
    const FloatMatrix m = interp(lambda_real(x).diagram()).to_float();
    const double e0 = std::abs(m(0, 0) - 1.0);
    const double e1 = std::abs(m(0, 1) - x);
    worst = std::max({worst, e0, e1});
    if (e0 <= 1e-9 && e1 <= 1e-9) ++good;
  }
  std::ostringstream s;
  s << good << "/100, worst error " << worst;
  return {good == 100, s.str()};
}

Outcome lemma_corpus() {
  const std::vector<Equation> lemmas = load_lemmas(std::string(ZX_SOURCE_DIR) + "/data/lemmas");
  std::set<std::string> labels;
  int good = 0;
  for (const Equation& e : lemmas) {
    const Fragment f = fragment_of(e.lhs).join(fragment_of(e.rhs));
    labels.insert(e.label);
    if (!f.unrestricted && verify_equation(e, exact(f.order()))) ++good;
  }
  std::ostringstream s;
  s << good << "/" << lemmas.size() << " equations, " << labels.size() << " statements";
  return {good == static_cast<int>(lemmas.size()) && labels.size() >= 20, s.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom soundness", axiom_soundness},
      {"cyclotomic vanishing", cyclotomic_vanishing},
      {"universality", universality},
      {"normal form canonicity", canonicity},
      {"incompleteness witness", incompleteness},
      {"ring canonicity", ring_canonicity},
      {"dyadic inverses", dyadic_inverses},
      {"transistor algebra", transistor_algebra},
      {"sum and product", sum_product},
      {"real scalars", lambda_reals},
      {"lemma corpus", lemma_corpus},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
