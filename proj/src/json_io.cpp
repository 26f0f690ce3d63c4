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


#include "zx/json_io.hpp"

#include <limits>

#include "zx/errors.hpp"

namespace zx {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ZxError(ErrorCode::Parse, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

int count(const Json& j, const std::string& where) {
  const std::int64_t n = integer(j, where);
  if (n < 0 || n > 1024) fail(where, "leg count out of range");
  return static_cast<int>(n);
}

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

BigInt big_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      fail(where, "bad integer \"" + j.get<std::string>() + "\"");
    }
  }
  fail(where, "expected an integer");
}

Json angle_to_json(const Angle& a) {
  if (!a.is_exact()) return Json{{"rad", a.value()}};
  return std::to_string(a.num()) + "/" + std::to_string(a.den());
}

Angle angle_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_pi_fraction(j.get<std::string>());
    } catch (const ZxError& e) {
      fail(where, e.what());
    }
  }
  if (j.is_object() && j.contains("rad")) {
    const Json& r = j.at("rad");
    if (!r.is_number()) fail(where + ".rad", "expected a number");
    return Angle::radians(r.get<double>());
  }
  fail(where, "expected a phase string like \"1/4\" or {\"rad\": x}");
}

bool is_exact_literal(const Json& j) { return j.is_object() && j.contains("order"); }

// A scalar literal, exact ones as (order, value).
DyadicCyclotomic exact_from_json(const Json& j, const std::string& where) {
  const std::int64_t order = integer(field(j, "order", where), where + ".order");
  const std::int64_t p = integer(field(j, "p", where), where + ".p");
  const Json& poly = field(j, "poly", where);
  if (!poly.is_array()) fail(where + ".poly", "expected an array");
  std::vector<BigInt> coeffs;
  for (std::size_t i = 0; i < poly.size(); ++i)
    coeffs.push_back(big_from_json(poly[i], where + ".poly[" + std::to_string(i) + "]"));
  if (order <= 0 || order % 8 != 0) fail(where + ".order", "order must be a positive multiple of 8");
  if (p < 0) fail(where + ".p", "p must be non-negative");
  return canonicalize(order, p, IntPolynomial(std::move(coeffs)));
}

std::complex<double> float_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  const Json& re = field(j, "re", where);
  const Json& im = field(j, "im", where);
  if (!re.is_number() || !im.is_number()) fail(where, "re and im must be numbers");
  return {re.get<double>(), im.get<double>()};
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ZxError(ErrorCode::Parse, std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

// A column of scalar literals; exact ones share the largest order met.
Matrix column_from_json(const Json& entries, Eigen::Index rows, Eigen::Index cols, const std::string& where,
                        bool exact) {
  if (!entries.is_array()) fail(where, "expected an array");
  if (entries.size() != static_cast<std::size_t>(rows * cols))
    fail(where, "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
  if (exact) {
    ExactMatrix m(rows, cols);
    std::int64_t order = 8;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!is_exact_literal(entries[i])) fail(at, "expected an exact scalar literal");
      const DyadicCyclotomic x = exact_from_json(entries[i], at);
      order = lcm_order(order, x.order());
      m(static_cast<Eigen::Index>(i) / cols, static_cast<Eigen::Index>(i) % cols) = x;
    }
    return Matrix(m, order);
  }
  FloatMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    m(static_cast<Eigen::Index>(i) / cols, static_cast<Eigen::Index>(i) % cols) =
        is_exact_literal(entries[i]) ? eval_complex(exact_from_json(entries[i], at)).value()
                                     : float_from_json(entries[i], at);
  }
  return Matrix(m);
}

Json entries_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.push_back(m.is_exact() ? scalar_to_json(m.exact()(i, j)) : scalar_to_json(m.floating()(i, j)));
  return out;
}

Eigen::Index dimension(const Json& j, const std::string& where) {
  const std::int64_t n = integer(j, where);
  if (n < 1 || n > (std::int64_t(1) << 24) || (n & (n - 1)) != 0) fail(where, "must be a power of two");
  return static_cast<Eigen::Index>(n);
}

bool backend_exact(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected \"exact\" or \"float\"");
  const std::string s = j.get<std::string>();
  if (s == "exact") return true;
  if (s == "float") return false;
  fail(where, "unknown backend \"" + s + "\"");
}

Term term_at(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "H") return Term::h();
    if (s == "Id") return Term::id();
    if (s == "Swap") return Term::swap();
    if (s == "Cup") return Term::cup();
    if (s == "Cap") return Term::cap();
    if (s == "Empty") return Term::empty();
    fail(where, "unknown generator \"" + s + "\"");
  }
  if (!j.is_object() || j.size() != 1) fail(where, "expected a generator or a single-key object");
  const auto& [key, body] = *j.items().begin();
  const std::string at = where + "." + key;
  if (key == "Z" || key == "X") {
    const int in = count(field(body, "in", at), at + ".in");
    const int out = count(field(body, "out", at), at + ".out");
    const Angle phase = body.contains("phase") ? angle_from_json(body.at("phase"), at + ".phase") : Angle{};
    return key == "Z" ? Term::z(in, out, phase) : Term::x(in, out, phase);
  }
  if (key == "tensor" || key == "compose") {
    if (!body.is_array() || body.empty()) fail(at, "expected a non-empty array");
    Term acc = term_at(body[0], at + "[0]");
    for (std::size_t i = 1; i < body.size(); ++i) {
      const Term next = term_at(body[i], at + "[" + std::to_string(i) + "]");
      if (key == "tensor") {
        acc = tensor(acc, next);
      } else {
        try {
          acc = compose(acc, next);
        } catch (const ZxError& e) {
          throw ZxError(ErrorCode::Composition, at + "[" + std::to_string(i) + "]: " + e.what());
        }
      }
    }
    return acc;
  }
  fail(where, "unknown constructor \"" + key + "\"");
}

}  // namespace

Json scalar_to_json(const DyadicCyclotomic& x) {
  const DyadicCyclotomic v = x.order() == 0 ? embed_order(x, 8) : x;
  Json poly = Json::array();
  for (const BigInt& c : v.poly().coeffs()) poly.push_back(big_to_json(c));
  return Json{{"order", v.order()}, {"p", v.p()}, {"poly", poly}};
}

Json scalar_to_json(std::complex<double> x) { return Json{{"re", x.real()}, {"im", x.imag()}}; }

Json term_to_json(const Term& d) {
  switch (d.node()) {
    case Term::Node::Tensor: return Json{{"tensor", {term_to_json(d.left()), term_to_json(d.right())}}};
    case Term::Node::Compose: return Json{{"compose", {term_to_json(d.left()), term_to_json(d.right())}}};
    case Term::Node::Generator: break;
  }
  switch (d.kind()) {
    case GeneratorKind::Z:
    case GeneratorKind::X:
      return Json{{d.kind() == GeneratorKind::Z ? "Z" : "X",
                   {{"in", d.inputs()}, {"out", d.outputs()}, {"phase", angle_to_json(d.phase())}}}};
    case GeneratorKind::H: return "H";
    case GeneratorKind::Id: return "Id";
    case GeneratorKind::Swap: return "Swap";
    case GeneratorKind::Cup: return "Cup";
    case GeneratorKind::Cap: return "Cap";
    case GeneratorKind::Empty: return "Empty";
  }
  return "Empty";
}

Term term_from_json(const Json& j) { return term_at(j, "$"); }

Json matrix_to_json(const Matrix& m) {
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"backend", m.is_exact() ? "exact" : "float"},
              {"entries", entries_to_json(m)}};
}

Matrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = dimension(field(j, "rows", "$"), "$.rows");
  const Eigen::Index cols = dimension(field(j, "cols", "$"), "$.cols");
  const bool exact = j.contains("backend") ? backend_exact(j.at("backend"), "$.backend") : true;
  return column_from_json(field(j, "entries", "$"), rows, cols, "$.entries", exact);
}

Json normal_form_to_json(const NormalForm& nf) {
  return Json{{"inputs", nf.inputs}, {"outputs", nf.outputs}, {"leaves", entries_to_json(nf.tree.leaves())}};
}

NormalForm normal_form_from_json(const Json& j) {
  const int n = count(field(j, "inputs", "$"), "$.inputs");
  const int m = count(field(j, "outputs", "$"), "$.outputs");
  if (n + m > 24) fail("$", "normal form too large");
  const Json& leaves = field(j, "leaves", "$");
  const bool exact = leaves.is_array() && !leaves.empty() && is_exact_literal(leaves[0]);
  const Matrix v = column_from_json(leaves, Eigen::Index(1) << (n + m), 1, "$.leaves", exact);
  return NormalForm{CnfTree::from_leaves(v), n, m};
}

Json equation_to_json(const Equation& e) {
  Json params = Json::object();
  for (const auto& [name, a] : e.params) params[name] = angle_to_json(a);
  return Json{{"label", e.label}, {"lhs", term_to_json(e.lhs)}, {"rhs", term_to_json(e.rhs)}, {"params", params}};
}

Equation equation_from_json(const Json& j) {
  const Json& label = field(j, "label", "$");
  if (!label.is_string()) fail("$.label", "expected a string");
  const Term lhs = term_at(field(j, "lhs", "$"), "$.lhs");
  const Term rhs = term_at(field(j, "rhs", "$"), "$.rhs");
  std::vector<std::pair<std::string, Angle>> params;
  if (j.contains("params")) {
    if (!j.at("params").is_object()) fail("$.params", "expected an object");
    for (const auto& [k, v] : j.at("params").items()) params.emplace_back(k, angle_from_json(v, "$.params." + k));
  }
  return Equation(lhs, rhs, label.get<std::string>(), std::move(params));
}

Term parse_diagram(const std::string& text) { return term_from_json(parse_text(text)); }
Matrix parse_matrix(const std::string& text) { return matrix_from_json(parse_text(text)); }
NormalForm parse_normal_form(const std::string& text) { return normal_form_from_json(parse_text(text)); }
Equation parse_equation(const std::string& text) { return equation_from_json(parse_text(text)); }

}  // namespace zx
