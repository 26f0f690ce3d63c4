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


#include "zx/lemmas.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zx/errors.hpp"
#include "zx/gadgets.hpp"
#include "zx/json_io.hpp"

namespace zx {

namespace {

using Params = std::vector<std::pair<std::string, Angle>>;

Term seq(std::initializer_list<Term> parts) { return compose_all(std::vector<Term>(parts)); }
Term par(std::initializer_list<Term> parts) { return tensor_all(std::vector<Term>(parts)); }

Term scalar(ScalarValue v, const Angle& theta = {}) { return scalar_diagram(v, theta); }

Angle neg(const Angle& a) { return a.times(-1); }

Angle sum(const Angle& a, const Angle& b) { return Angle::pi(a.num() * b.den() + b.num() * a.den(), a.den() * b.den()); }

const std::vector<Angle>& samples() {
  static const std::vector<Angle> s = {Angle::pi(3, 4), Angle::pi(1, 6), Angle::pi(5, 3)};
  return s;
}

}  // namespace

std::vector<Equation> builtin_lemmas() {
  const Term id = Term::id();
  const Term t = triangle();
  const Term tt = transpose(triangle());
  const Term pi_x = Term::x(0, 1, Angle::pi(1, 1));
  std::vector<Equation> out;

  out.emplace_back(seq({Term::z(1, 2), Term::x(2, 1)}), par({Term::z(1, 0), Term::x(0, 1), scalar(ScalarValue::Half)}),
                   "hopf");
  out.emplace_back(par({Term::z(0, 0, Angle::pi(1, 2)), Term::z(0, 0, Angle::pi(-1, 2)), scalar(ScalarValue::Half)}),
                   Term::empty(), "inverse");
  out.emplace_back(seq({Term::z(0, 1), Term::x(1, 2)}), par({Term::z(0, 1), Term::z(0, 1), scalar(ScalarValue::InvSqrt2)}),
                   "copy");
  out.emplace_back(seq({Term::z(0, 1, Angle::pi(1, 2))}),
                   par({Term::x(0, 1, Angle::pi(-1, 2)), scalar(ScalarValue::Phase, Angle::pi(1, 4))}),
                   "green-state-pi_2-is-red-state-minus-pi_2");
  out.emplace_back(Term::h(),
                   par({seq({Term::z(1, 1, Angle::pi(1, 2)), Term::x(1, 1, Angle::pi(1, 2)), Term::z(1, 1, Angle::pi(1, 2))}),
                        scalar(ScalarValue::Phase, Angle::pi(-1, 4))}),
                   "euler-decomp-with-scalar");
  for (const Angle& a : samples()) {
    out.emplace_back(par({scalar(ScalarValue::Phase, a), scalar(ScalarValue::Phase, neg(a))}), Term::empty(),
                     "multiplying-global-phases", Params{{"alpha", a}});
    out.emplace_back(seq({Term::z(0, 1), Term::x(1, 0, a)}), scalar(ScalarValue::Sqrt2), "bicolor-0-alpha",
                     Params{{"alpha", a}});
    out.emplace_back(seq({Term::x(1, 1, Angle::pi(1, 1)), Term::z(1, 1, a)}),
                     par({seq({Term::z(1, 1, neg(a)), Term::x(1, 1, Angle::pi(1, 1))}), scalar(ScalarValue::Phase, a)}),
                     "k1", Params{{"alpha", a}});
    out.emplace_back(seq({Term::z(1, 3, a), tensor(id, seq({tensor(Term::h(), id), Term::cup()}))}),
                     par({Term::z(1, 1, sum(a, Angle::pi(1, 1))), scalar(ScalarValue::InvSqrt2)}), "h-loop",
                     Params{{"alpha", a}});
  }

  out.emplace_back(seq({Term::x(0, 1), t}), Term::x(0, 1), "red-state-on-triangle");
  out.emplace_back(seq({pi_x, t}), par({Term::z(0, 1), scalar(ScalarValue::Sqrt2)}), "pi-red-state-on-triangle");
  out.emplace_back(seq({Term::x(0, 1), tt}), par({Term::z(0, 1), scalar(ScalarValue::Sqrt2)}),
                   "red-state-on-upside-down-triangle");
  out.emplace_back(seq({pi_x, tt}), pi_x, "pi-red-state-on-upside-down-triangle");
  out.emplace_back(seq({Term::z(0, 1, Angle::pi(1, 1)), tt}), par({Term::x(0, 1), scalar(ScalarValue::InvSqrt2)}),
                   "pi-green-state-on-upside-down-triangle");
  out.emplace_back(seq({t, Term::z(1, 1, Angle::pi(1, 1)), t, Term::z(1, 1, Angle::pi(1, 1))}), id,
                   "inverse-of-triangle");
  out.emplace_back(seq({Term::cap(), tensor(t, id), Term::cup()}), Term::z(0, 0), "looped-triangle");
  out.emplace_back(seq({not_gate(), t}), transpose(seq({not_gate(), t})), "not-triangle-is-symmetrical");
  out.emplace_back(seq({t, Term::h()}), transpose(seq({Term::h(), tt})), "triangle-hadamard-transpose");

  const Term a = and_gate();
  out.emplace_back(seq({Term::swap(), a}), a, "transistor-commutative");
  out.emplace_back(seq({tensor(a, id), a}), seq({tensor(id, a), a}), "transistor-associative");
  out.emplace_back(seq({tensor(basis_state(1), id), a}), id, "transistor-unit");
  out.emplace_back(seq({tensor(basis_state(0), id), a}), tensor(Term::z(1, 0), basis_state(0)),
                   "transistor-absorbing");
  out.emplace_back(seq({a, Term::z(1, 2)}),
                   seq({par({Term::z(1, 2), Term::z(1, 2)}), par({id, Term::swap(), id}), par({a, a})}),
                   "transistor-copy-bialgebra");
  out.emplace_back(seq({w_split(), Term::swap()}), w_split(), "black-dot-swappable-outputs");
  out.emplace_back(seq({transistor(), id}), seq({tensor(not_gate(), id), a}), "transistor-from-and");
  return out;
}

std::vector<std::string> export_lemmas(const std::vector<Equation>& lemmas, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    std::ostringstream name;
    name << (i < 10 ? "0" : "") << i << "-" << lemmas[i].label << ".json";
    const std::string path = (std::filesystem::path(dir) / name.str()).string();
    std::ofstream f(path);
    if (!f) throw ZxError(ErrorCode::Resource, "cannot write " + path);
    f << equation_to_json(lemmas[i]).dump(1) << "\n";
    paths.push_back(path);
  }
  return paths;
}

std::vector<Equation> load_lemmas(const std::string& dir) {
  if (!std::filesystem::is_directory(dir)) throw ZxError(ErrorCode::Parse, dir + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Equation> out;
  for (const auto& p : files) {
    std::ifstream f(p);
    std::stringstream text;
    text << f.rdbuf();
    try {
      out.push_back(parse_equation(text.str()));
    } catch (const ZxError& e) {
      throw ZxError(e.code(), p.filename().string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace zx
