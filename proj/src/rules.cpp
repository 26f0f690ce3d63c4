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


#include "zx/rules.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "zx/errors.hpp"
#include "zx/gadgets.hpp"

namespace zx {

namespace {

constexpr double kAngleTol = 1e-9;

bool angle_close(const Angle& a, const Angle& b) {
  if (a.is_exact() && b.is_exact()) return a == b;
  double d = std::remainder(a.value() - b.value(), 2 * M_PI);
  return std::abs(d) < kAngleTol;
}

// All x with c * x = target.
std::vector<Angle> divide_angle(const Angle& target, std::int64_t c) {
  std::vector<Angle> out;
  const std::int64_t m = c < 0 ? -c : c;
  const Angle t = c < 0 ? -target : target;
  for (std::int64_t j = 0; j < m; ++j) {
    if (t.is_exact())
      out.push_back(Angle::pi(t.num(), t.den() * m) + Angle::pi(2 * j, m));
    else
      out.push_back(Angle::radians((t.value() + 2 * M_PI * static_cast<double>(j)) / static_cast<double>(m)));
  }
  return out;
}

VertexKind swap_colour(VertexKind k) {
  if (k == VertexKind::Z) return VertexKind::X;
  if (k == VertexKind::X) return VertexKind::Z;
  return k;
}

bool same_shape(const Rule& a, const Rule& b) {
  return a.params == b.params && a.slots == b.slots && a.groups == b.groups && a.edge_groups == b.edge_groups &&
         a.lhs == b.lhs && a.rhs == b.rhs;
}

// Small builder for rule sides.
struct SideBuilder {
  Template t;

  explicit SideBuilder(int slots, int groups = 0) : t{{}, {}, std::vector<int>(slots, -1), std::vector<int>(groups, -1)} {}

  int node(VertexKind k, PhaseExpr p = {}) {
    t.nodes.push_back({k, std::move(p)});
    return static_cast<int>(t.nodes.size()) - 1;
  }
  int z(PhaseExpr p = {}) { return node(VertexKind::Z, std::move(p)); }
  int x(PhaseExpr p = {}) { return node(VertexKind::X, std::move(p)); }
  int h() { return node(VertexKind::H); }
  void link(int a, int b, int group = -1) { t.links.push_back({a, b, group}); }
  void chain(std::initializer_list<int> vs) {
    const std::vector<int> v(vs);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) link(v[i], v[i + 1]);
  }
  void slot(int s, int v) { t.slot_vertex[static_cast<std::size_t>(s)] = v; }
  void wire(int s, int u) {
    t.slot_vertex[static_cast<std::size_t>(s)] = -(1 + u);
    t.slot_vertex[static_cast<std::size_t>(u)] = -(1 + s);
  }
  void group(int g, int v) { t.group_vertex[static_cast<std::size_t>(g)] = v; }
  // sqrt(2) as Z(1,0) after X(0,1).
  void sqrt2() { link(z(), x()); }
  // sqrt(2) e^{i theta} as Z(1,0,theta) after X(0,1,pi).
  void sqrt2_phase(PhaseExpr theta) { link(z(std::move(theta)), x(PhaseExpr::constant_angle(Angle::pi(1)))); }
};

PhaseExpr k(Angle a) { return PhaseExpr::constant_angle(a); }
PhaseExpr p(int i, std::int64_t c = 1, Angle offset = {}) { return PhaseExpr::param(i, c, offset); }
PhaseExpr p2(int i, std::int64_t ci, int j, std::int64_t cj, Angle offset = {}) { return {{{i, ci}, {j, cj}}, offset}; }

Rule make(std::string name, int params, std::vector<Side> slots, SideBuilder l, SideBuilder r,
          std::vector<Rule::Group> groups = {}, std::vector<int> edge_groups = {}) {
  Rule rule;
  rule.name = std::move(name);
  rule.params = params;
  rule.slots = std::move(slots);
  rule.groups = std::move(groups);
  rule.edge_groups = std::move(edge_groups);
  rule.lhs = std::move(l.t);
  rule.rhs = std::move(r.t);
  return rule;
}

const Side In = Side::Input;
const Side Out = Side::Output;

Rule spider_fusion() {
  SideBuilder l(0, 2), r(0, 2);
  const int a = l.z(p(0)), b = l.z(p(1));
  l.link(a, b, 0);
  l.group(0, a);
  l.group(1, b);
  const int c = r.z(p2(0, 1, 1, 1));
  r.group(0, c);
  r.group(1, c);
  return make("S1", 2, {}, l, r, {{In, 0}, {Out, 0}}, {1});
}

Rule identity_rule() {
  SideBuilder l(2), r(2);
  const int v = l.z();
  l.slot(0, v);
  l.slot(1, v);
  r.wire(0, 1);
  return make("S2", 0, {In, Out}, l, r);
}

Rule empty_rule() {
  SideBuilder l(0), r(0);
  l.link(l.z(k(Angle::pi(1, 4))), l.x(k(Angle::pi(-1, 4))));
  return make("E", 0, {}, l, r);
}

Rule copy_rule() {
  SideBuilder l(2), r(2);
  const int s = l.x(), c = l.z();
  l.link(s, c);
  l.slot(0, c);
  l.slot(1, c);
  l.sqrt2();
  r.slot(0, r.x());
  r.slot(1, r.x());
  return make("B1", 0, {Out, Out}, l, r);
}

Rule bialgebra_rule() {
  SideBuilder l(4), r(4);
  const int m = l.z(), d = l.x();
  l.link(m, d);
  l.slot(0, m);
  l.slot(1, m);
  l.slot(2, d);
  l.slot(3, d);
  const int a = r.x(), b = r.x(), c = r.z(), e = r.z();
  r.link(a, c);
  r.link(a, e);
  r.link(b, c);
  r.link(b, e);
  r.slot(0, a);
  r.slot(1, b);
  r.slot(2, c);
  r.slot(3, e);
  r.sqrt2();
  return make("B2", 0, {In, In, Out, Out}, l, r);
}

Rule pi_commutation_rule() {
  SideBuilder l(3), r(3);
  const int n = l.x(k(Angle::pi(1))), s = l.z(p(0));
  l.link(n, s);
  l.slot(0, n);
  l.slot(1, s);
  l.slot(2, s);
  l.sqrt2();
  const int t = r.z(p(0, -1)), n1 = r.x(k(Angle::pi(1))), n2 = r.x(k(Angle::pi(1)));
  r.link(t, n1);
  r.link(t, n2);
  r.slot(0, t);
  r.slot(1, n1);
  r.slot(2, n2);
  r.sqrt2_phase(p(0));
  return make("K", 1, {In, Out, Out}, l, r);
}

Rule euler_rule() {
  SideBuilder l(2), r(2);
  const int a = l.z(k(Angle::pi(1, 2))), b = l.x(k(Angle::pi(1, 2))), c = l.z(k(Angle::pi(1, 2)));
  l.chain({a, b, c});
  l.slot(0, a);
  l.slot(1, c);
  l.z(k(Angle::pi(-1, 2)));
  const int h = r.h();
  r.slot(0, h);
  r.slot(1, h);
  r.sqrt2();
  return make("EU", 0, {In, Out}, l, r);
}

Rule hadamard_rule() {
  SideBuilder l(2), r(2);
  const int a = l.h(), b = l.h();
  l.link(a, b);
  l.slot(0, a);
  l.slot(1, b);
  r.wire(0, 1);
  return make("H", 0, {In, Out}, l, r);
}

Rule supplementarity_rule() {
  SideBuilder l(1), r(1);
  const int a = l.z(p(0)), b = l.z(p(0, 1, Angle::pi(1))), m = l.x();
  l.link(a, m);
  l.link(b, m);
  l.slot(0, m);
  l.z();
  r.slot(0, r.x());
  r.z(p(0, 2, Angle::pi(1)));
  return make("SUP", 1, {Out}, l, r);
}

// A pi on the control of a controlled-Z passes through as pi on both wires;
// a phase on the target commutes with the control.
Rule control_commutation_rule() {
  SideBuilder l(4), r(4);
  {
    const int n = l.x(k(Angle::pi(1))), ca = l.z(), h = l.h(), cb = l.z(), ph = l.z(p(0));
    l.chain({n, ca, h, cb});
    l.link(ph, cb);
    l.slot(0, n);
    l.slot(2, ca);
    l.slot(1, ph);
    l.slot(3, cb);
  }
  {
    const int ca = r.z(), h = r.h(), cb = r.z(), n = r.x(k(Angle::pi(1))), ph = r.z(p(0, 1, Angle::pi(1)));
    r.chain({ca, h, cb});
    r.link(ca, n);
    r.link(cb, ph);
    r.slot(0, ca);
    r.slot(2, n);
    r.slot(1, cb);
    r.slot(3, ph);
  }
  return make("C", 1, {In, In, Out, Out}, l, r);
}

// Two phase gadgets on the same pair of wires merge into one.
Rule gadget_merge_rule() {
  SideBuilder l(4), r(4);
  {
    const int a = l.z(), b = l.z(), g1 = l.x(), g2 = l.x(), p1 = l.z(p(0)), p2 = l.z(p(1));
    l.link(a, g1);
    l.link(b, g1);
    l.link(g1, p1);
    l.link(a, g2);
    l.link(b, g2);
    l.link(g2, p2);
    l.slot(0, a);
    l.slot(2, a);
    l.slot(1, b);
    l.slot(3, b);
    l.sqrt2();
  }
  {
    const int a = r.z(), b = r.z(), g = r.x(), ph = r.z(p2(0, 1, 1, 1));
    r.link(a, g);
    r.link(b, g);
    r.link(g, ph);
    r.slot(0, a);
    r.slot(2, a);
    r.slot(1, b);
    r.slot(3, b);
  }
  return make("BW", 2, {In, In, Out, Out}, l, r);
}

// e^{i(g+d)} + e^{i(g-d)} = 2 e^{ig} cos d, as controlled scalars:
// c -> sqrt2 e^{ig} (cos g, cos d) on both sides.
Rule addition_rule() {
  SideBuilder l(1), r(1);
  {
    const int m = l.x(), u = l.z(p2(0, 1, 1, 1)), v = l.z(p2(0, 1, 1, -1));
    l.link(m, u);
    l.link(m, v);
    l.slot(0, m);
    l.sqrt2();
    l.sqrt2();
  }
  {
    const int c = r.z();
    r.slot(0, c);
    const int m1 = r.x(), a1 = r.z(p(1, -1)), b1 = r.z(p(1));
    r.link(c, m1);
    r.link(m1, a1);
    r.link(m1, b1);
    const int n = r.x(k(Angle::pi(1))), m2 = r.x(), a2 = r.z(p(0, -1)), b2 = r.z(p(0));
    r.chain({c, n, m2});
    r.link(m2, a2);
    r.link(m2, b2);
    r.sqrt2_phase(p(0));
  }
  return make("A", 2, {In}, l, r);
}

// ---- matching ----

struct Matcher {
  const OpenGraph& g;
  const Rule& rule;
  const Template& t;
  std::vector<int> order;
  std::vector<int> assign;
  std::vector<std::optional<Angle>> params;
  std::set<int> used;
  std::vector<Match> out;
  std::set<std::vector<int>> seen;

  Matcher(const OpenGraph& graph, const Rule& r, const Template& side)
      : g(graph), rule(r), t(side), assign(side.nodes.size(), -1), params(static_cast<std::size_t>(r.params)) {
    // Visit template nodes so that each one after the first of its component
    // is adjacent to an earlier one.
    std::vector<bool> done(t.nodes.size());
    for (std::size_t s = 0; s < t.nodes.size(); ++s) {
      if (done[s]) continue;
      std::vector<int> queue = {static_cast<int>(s)};
      done[s] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        order.push_back(queue[q]);
        for (const auto& l : t.links) {
          int other = l.a == queue[q] ? l.b : l.b == queue[q] ? l.a : -1;
          if (other >= 0 && !done[static_cast<std::size_t>(other)]) {
            done[static_cast<std::size_t>(other)] = true;
            queue.push_back(other);
          }
        }
      }
    }
  }

  int fixed_links(int a, int b) const {
    int n = 0;
    for (const auto& l : t.links)
      if (l.group < 0 && ((l.a == a && l.b == b) || (l.a == b && l.b == a))) ++n;
    return n;
  }

  int group_link(int a, int b) const {
    for (const auto& l : t.links)
      if (l.group >= 0 && ((l.a == a && l.b == b) || (l.a == b && l.b == a))) return l.group;
    return -1;
  }

  int host_links(int u, int v) const {
    int n = 0;
    for (int e : g.incident(Endpoint::vertex(u))) {
      const Edge& ed = g.edge(e);
      if (ed.other(Endpoint::vertex(u)) == Endpoint::vertex(v)) ++n;
    }
    return n;
  }

  // Bind parameters so that node i's phase equals `target`; returns every
  // consistent extension of the current bindings.
  std::vector<std::vector<std::optional<Angle>>> unify(const PhaseExpr& e, const Angle& target) const {
    Angle known = e.constant;
    std::vector<std::pair<int, std::int64_t>> free;
    for (const auto& [i, c] : e.terms) {
      if (params[static_cast<std::size_t>(i)]) known = known + params[static_cast<std::size_t>(i)]->times(c);
      else free.emplace_back(i, c);
    }
    if (free.empty()) {
      if (angle_close(known, target)) return {params};
      return {};
    }
    std::vector<std::optional<Angle>> base = params;
    for (std::size_t f = 0; f + 1 < free.size(); ++f) base[static_cast<std::size_t>(free[f].first)] = Angle{};
    std::vector<std::vector<std::optional<Angle>>> r;
    for (const Angle& a : divide_angle(target - known, free.back().second)) {
      auto b = base;
      b[static_cast<std::size_t>(free.back().first)] = a;
      r.push_back(std::move(b));
    }
    return r;
  }

  void search(std::size_t depth) {
    if (depth == order.size()) {
      finish();
      return;
    }
    const int i = order[depth];
    const Template::Node& node = t.nodes[static_cast<std::size_t>(i)];
    for (const auto& [v, vert] : g.vertices()) {
      if (used.count(v) || vert.kind != node.kind) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int j = order[d];
        const int have = host_links(v, assign[static_cast<std::size_t>(j)]);
        const int fixed = fixed_links(i, j);
        const int grp = group_link(i, j);
        if (grp < 0) ok = have == fixed;
        else ok = have >= fixed + rule.edge_groups[static_cast<std::size_t>(grp)];
      }
      if (!ok || host_links(v, v) > 0) continue;
      for (auto& bound : unify(node.phase, vert.phase)) {
        auto saved = params;
        params = std::move(bound);
        assign[static_cast<std::size_t>(i)] = v;
        used.insert(v);
        search(depth + 1);
        used.erase(v);
        assign[static_cast<std::size_t>(i)] = -1;
        params = std::move(saved);
      }
    }
  }

  void finish() {
    std::vector<int> key = assign;
    std::sort(key.begin(), key.end());
    if (seen.count(key)) return;
    Match m;
    m.vertices = assign;
    m.slot_edges.assign(rule.slots.size(), -1);
    m.group_edges.assign(rule.groups.size(), {});
    m.instance.group_sizes.assign(rule.groups.size(), 0);
    m.instance.edge_group_sizes = rule.edge_groups;
    std::set<int> internal;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const int v = assign[i];
      std::vector<int> external;
      for (int e : g.incident(Endpoint::vertex(v))) {
        const Endpoint far = g.edge(e).other(Endpoint::vertex(v));
        const auto it = far.is_vertex() ? std::find(assign.begin(), assign.end(), far.index) : assign.end();
        if (it != assign.end()) internal.insert(e);
        else external.push_back(e);
      }
      std::size_t next = 0;
      for (std::size_t s = 0; s < rule.slots.size(); ++s) {
        if (t.slot_vertex[s] != static_cast<int>(i)) continue;
        if (next >= external.size()) return;
        m.slot_edges[s] = external[next++];
      }
      int last_group = -1;
      for (std::size_t gi = 0; gi < rule.groups.size(); ++gi)
        if (t.group_vertex[gi] == static_cast<int>(i)) last_group = static_cast<int>(gi);
      if (last_group < 0) {
        if (next != external.size()) return;
        continue;
      }
      // Legs beyond the minima all go to the last group at this vertex.
      for (std::size_t gi = 0; gi < rule.groups.size(); ++gi) {
        if (t.group_vertex[gi] != static_cast<int>(i)) continue;
        const int want = static_cast<int>(gi) == last_group
                             ? static_cast<int>(external.size() - next)
                             : rule.groups[gi].min;
        if (want < rule.groups[gi].min || next + static_cast<std::size_t>(want) > external.size()) return;
        for (int c = 0; c < want; ++c) m.group_edges[gi].push_back(external[next++]);
        m.instance.group_sizes[gi] = want;
      }
    }
    // Multiplicities of variadic internal links.
    for (const auto& l : t.links) {
      if (l.group < 0) continue;
      const int have = host_links(assign[static_cast<std::size_t>(l.a)], assign[static_cast<std::size_t>(l.b)]);
      m.instance.edge_group_sizes[static_cast<std::size_t>(l.group)] = have - fixed_links(l.a, l.b);
    }
    for (std::size_t gi = 0; gi < rule.groups.size(); ++gi)
      if (t.group_vertex[gi] < 0) m.instance.group_sizes[gi] = rule.groups[gi].min;
    m.internal_edges.assign(internal.begin(), internal.end());
    for (const auto& a : params) m.instance.params.push_back(a.value_or(Angle{}));
    seen.insert(key);
    out.push_back(std::move(m));
  }
};

Instance default_instance(const Rule& r) {
  Instance inst;
  inst.params.assign(static_cast<std::size_t>(r.params), Angle{});
  for (const auto& gr : r.groups) inst.group_sizes.push_back(gr.min);
  inst.edge_group_sizes = r.edge_groups;
  return inst;
}

}  // namespace

Angle PhaseExpr::evaluate(const std::vector<Angle>& params) const {
  Angle a = constant;
  for (const auto& [i, c] : terms) {
    if (i < 0 || i >= static_cast<int>(params.size())) throw ZxError(ErrorCode::Index, "phase parameter out of range");
    a = a + params[static_cast<std::size_t>(i)].times(c);
  }
  return a;
}

std::string Instance::to_string() const {
  std::ostringstream os;
  os << "params [";
  for (std::size_t i = 0; i < params.size(); ++i) os << (i ? ", " : "") << params[i].to_string();
  os << "] legs [";
  for (std::size_t i = 0; i < group_sizes.size(); ++i) os << (i ? ", " : "") << group_sizes[i];
  os << "] links [";
  for (std::size_t i = 0; i < edge_group_sizes.size(); ++i) os << (i ? ", " : "") << edge_group_sizes[i];
  os << "]";
  return os.str();
}

OpenGraph instantiate(const Rule& r, const Template& side, const Instance& inst) {
  if (inst.params.size() != static_cast<std::size_t>(r.params) || inst.group_sizes.size() != r.groups.size() ||
      inst.edge_group_sizes.size() != r.edge_groups.size())
    throw ZxError(ErrorCode::Arity, "instance does not fit rule " + r.name);
  int inputs = 0;
  int outputs = 0;
  for (Side s : r.slots) (s == Side::Input ? inputs : outputs)++;
  for (std::size_t gi = 0; gi < r.groups.size(); ++gi)
    (r.groups[gi].side == Side::Input ? inputs : outputs) += inst.group_sizes[gi];
  OpenGraph g(inputs, outputs);
  std::vector<int> ids;
  for (const auto& n : side.nodes) ids.push_back(g.add_vertex(n.kind, n.phase.evaluate(inst.params)));
  auto vid = [&](int i) { return Endpoint::vertex(ids[static_cast<std::size_t>(i)]); };
  for (const auto& l : side.links) {
    const int count = l.group < 0 ? 1 : inst.edge_group_sizes[static_cast<std::size_t>(l.group)];
    for (int c = 0; c < count; ++c) g.add_edge(vid(l.a), vid(l.b));
  }
  int in = 0;
  int out = 0;
  std::vector<Endpoint> slot_ends;
  for (Side s : r.slots) slot_ends.push_back(s == Side::Input ? Endpoint::input(in++) : Endpoint::output(out++));
  for (std::size_t s = 0; s < r.slots.size(); ++s) {
    const int v = side.slot_vertex[s];
    if (v >= 0) {
      g.add_edge(slot_ends[s], vid(v));
    } else {
      const auto partner = static_cast<std::size_t>(-(v + 1));
      if (s < partner) g.add_edge(slot_ends[s], slot_ends[partner]);
    }
  }
  for (std::size_t gi = 0; gi < r.groups.size(); ++gi)
    for (int c = 0; c < inst.group_sizes[gi]; ++c) {
      const Endpoint b = r.groups[gi].side == Side::Input ? Endpoint::input(in++) : Endpoint::output(out++);
      g.add_edge(b, vid(side.group_vertex[gi]));
    }
  return g;
}

std::pair<Term, Term> instantiate_terms(const Rule& r, const Instance& inst) {
  return {from_graph(instantiate(r, r.lhs, inst)), from_graph(instantiate(r, r.rhs, inst))};
}

Rule reversed(const Rule& r) {
  Rule o = r;
  std::swap(o.lhs, o.rhs);
  return o;
}

Rule flipped(const Rule& r) {
  Rule o = r;
  o.name += ".flip";
  for (Side& s : o.slots) s = s == Side::Input ? Side::Output : Side::Input;
  for (auto& gr : o.groups) gr.side = gr.side == Side::Input ? Side::Output : Side::Input;
  return o;
}

Rule colour_swapped(const Rule& r) {
  Rule o = r;
  o.name += ".colour";
  for (Template* t : {&o.lhs, &o.rhs})
    for (auto& n : t->nodes) n.kind = swap_colour(n.kind);
  return o;
}

std::vector<Rule> base_rules() {
  return {spider_fusion(),  identity_rule(),         empty_rule(),
          copy_rule(),      bialgebra_rule(),        pi_commutation_rule(),
          euler_rule(),     hadamard_rule(),         supplementarity_rule(),
          control_commutation_rule(), gadget_merge_rule(), addition_rule()};
}

std::vector<Rule> builtin_rules() {
  std::vector<Rule> out;
  for (const Rule& base : base_rules()) {
    std::vector<Rule> variants = {base, flipped(base), colour_swapped(base), colour_swapped(flipped(base))};
    for (const Rule& v : variants) {
      const bool dup = std::any_of(out.begin(), out.end(), [&](const Rule& o) { return same_shape(o, v); });
      if (!dup) out.push_back(v);
    }
  }
  return out;
}

const Rule& find_rule(const std::vector<Rule>& rules, const std::string& name) {
  for (const Rule& r : rules)
    if (r.name == name) return r;
  throw ZxError(ErrorCode::Match, "no rule named " + name);
}

Instance random_instance(const Rule& r, const Fragment& fragment, std::mt19937_64& rng) {
  Instance inst;
  std::uniform_real_distribution<double> real(-M_PI, M_PI);
  std::uniform_int_distribution<std::int64_t> step(0, 8 * fragment.n - 1);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int i = 0; i < r.params; ++i)
    inst.params.push_back(fragment.unrestricted ? Angle::radians(real(rng)) : Angle::pi(step(rng), 4 * fragment.n));
  for (const auto& gr : r.groups) inst.group_sizes.push_back(gr.min + extra(rng));
  for (int m : r.edge_groups) inst.edge_group_sizes.push_back(m + extra(rng));
  return inst;
}

SoundnessReport check_soundness(const Rule& r, int samples, const Fragment& fragment, std::uint64_t seed, double tol) {
  if (samples < 1) throw ZxError(ErrorCode::Precondition, "check_soundness needs at least one sample");
  SoundnessReport rep;
  rep.rule = r.name;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  InterpOptions o;
  o.backend = fragment.unrestricted ? Backend::floating() : Backend::exact(fragment.order());
  for (int s = 0; s < samples; ++s) {
    const Instance inst = random_instance(r, fragment, rng);
    const auto [lhs, rhs] = instantiate_terms(r, inst);
    if (mat_equal(interp(lhs, o), interp(rhs, o), tol)) {
      ++rep.passed;
    } else if (!rep.counterexample) {
      rep.counterexample = inst;
    }
  }
  return rep;
}

Term angle_multiplier(const Term& d, std::int64_t k) {
  return map_phases(d, [k](const Angle& a) {
    if (!a.is_exact()) throw ZxError(ErrorCode::ExactAngle, "angle multiplier needs exact angles, got " + a.to_string());
    return a.times(k);
  });
}

std::vector<Match> find_matches(const OpenGraph& g, const Rule& r, Direction dir) {
  const Template& t = dir == Direction::Forward ? r.lhs : r.rhs;
  if (t.nodes.size() > 12) throw ZxError(ErrorCode::SizeLimit, "rule side has more than 12 vertices");
  if (!t.nodes.empty()) {
    Matcher m(g, r, t);
    m.search(0);
    return std::move(m.out);
  }
  // Only bare wires (or nothing) on this side.
  std::vector<std::pair<std::size_t, std::size_t>> wires;
  for (std::size_t s = 0; s < r.slots.size(); ++s) {
    const auto partner = static_cast<std::size_t>(-(t.slot_vertex[s] + 1));
    if (s < partner) wires.emplace_back(s, partner);
  }
  if (!r.groups.empty() || wires.size() > 1) return {};
  Match base;
  base.instance = default_instance(r);
  base.slot_edges.assign(r.slots.size(), -1);
  base.group_edges.assign(r.groups.size(), {});
  if (wires.empty()) return {base};
  std::vector<Match> out;
  for (const auto& [e, edge] : g.edges()) {
    if (edge.is_self_loop()) continue;
    Match m = base;
    m.slot_edges[wires[0].first] = e;
    m.slot_edges[wires[0].second] = e;
    out.push_back(std::move(m));
  }
  return out;
}

OpenGraph apply_rule(const OpenGraph& g, const Rule& r, const Match& m, Direction dir) {
  const Template& from = dir == Direction::Forward ? r.lhs : r.rhs;
  const Template& to = dir == Direction::Forward ? r.rhs : r.lhs;
  if (m.vertices.size() != from.nodes.size() || m.slot_edges.size() != r.slots.size() ||
      m.group_edges.size() != r.groups.size())
    throw ZxError(ErrorCode::Match, "match does not fit rule " + r.name);
  std::set<int> matched(m.vertices.begin(), m.vertices.end());
  for (int v : m.vertices)
    if (!g.has_vertex(v)) throw ZxError(ErrorCode::Match, "matched vertex " + std::to_string(v) + " is missing");
  auto far_end = [&](int e, int v) {
    if (!g.has_edge(e)) throw ZxError(ErrorCode::Match, "matched edge " + std::to_string(e) + " is missing");
    const Edge& ed = g.edge(e);
    const Endpoint here = Endpoint::vertex(v);
    if (ed.a != here && ed.b != here) throw ZxError(ErrorCode::Match, "edge does not touch its vertex");
    const Endpoint far = ed.other(here);
    if (far.is_vertex() && matched.count(far.index)) throw ZxError(ErrorCode::Match, "boundary edge is internal");
    return far;
  };
  std::vector<Endpoint> slot_far(r.slots.size());
  for (std::size_t s = 0; s < r.slots.size(); ++s) {
    const int v = from.slot_vertex[s];
    if (v >= 0) {
      slot_far[s] = far_end(m.slot_edges[s], m.vertices[static_cast<std::size_t>(v)]);
    } else {
      const auto partner = static_cast<std::size_t>(-(v + 1));
      if (!g.has_edge(m.slot_edges[s])) throw ZxError(ErrorCode::Match, "matched wire is missing");
      const Edge& ed = g.edge(m.slot_edges[s]);
      slot_far[s] = s < partner ? ed.a : ed.b;
    }
  }
  std::vector<std::vector<Endpoint>> group_far(r.groups.size());
  for (std::size_t gi = 0; gi < r.groups.size(); ++gi) {
    const int v = m.vertices[static_cast<std::size_t>(from.group_vertex[gi])];
    for (int e : m.group_edges[gi]) group_far[gi].push_back(far_end(e, v));
  }
  OpenGraph h = g;
  for (int v : m.vertices) h.remove_vertex(v);
  for (std::size_t s = 0; s < r.slots.size(); ++s)
    if (from.slot_vertex[s] < 0 && h.has_edge(m.slot_edges[s])) h.remove_edge(m.slot_edges[s]);
  std::vector<int> ids;
  for (const auto& n : to.nodes) ids.push_back(h.add_vertex(n.kind, n.phase.evaluate(m.instance.params)));
  auto vid = [&](int i) { return Endpoint::vertex(ids[static_cast<std::size_t>(i)]); };
  for (const auto& l : to.links) {
    const int count = l.group < 0 ? 1 : m.instance.edge_group_sizes[static_cast<std::size_t>(l.group)];
    for (int c = 0; c < count; ++c) h.add_edge(vid(l.a), vid(l.b));
  }
  for (std::size_t s = 0; s < r.slots.size(); ++s) {
    const int v = to.slot_vertex[s];
    if (v >= 0) {
      h.add_edge(slot_far[s], vid(v));
    } else {
      const auto partner = static_cast<std::size_t>(-(v + 1));
      if (s < partner) h.add_edge(slot_far[s], slot_far[partner]);
    }
  }
  for (std::size_t gi = 0; gi < r.groups.size(); ++gi)
    for (const Endpoint& far : group_far[gi]) h.add_edge(far, vid(to.group_vertex[gi]));
  h.validate();
  return h;
}

std::pair<Term, Term> cancel_scalar(const Term& lhs, const Term& rhs, const Angle& alpha) {
  if (angle_close(alpha, Angle::pi(1)))
    throw ZxError(ErrorCode::ZeroScalar, "cannot cancel Z(0,0,pi): its value 1 + e^{i pi} is zero");
  if (alpha.is_exact()) {
    const std::int64_t order = fragment_of(alpha).order();
    invert_one_plus_root(order, alpha.root_exponent(order));
  }
  auto split = [&](const Term& t, const char* side) {
    const bool shaped = t.node() == Term::Node::Tensor && t.right().node() == Term::Node::Generator &&
                        t.right().kind() == GeneratorKind::Z && t.right().inputs() == 0 &&
                        t.right().outputs() == 0 && angle_close(t.right().phase(), alpha);
    if (!shaped)
      throw ZxError(ErrorCode::Shape, std::string(side) + " is not of the form D (x) Z(0,0," + alpha.to_string() + ")");
    return t.left();
  };
  return {split(lhs, "left-hand side"), split(rhs, "right-hand side")};
}

Equation::Equation(Term l, Term r, std::string name, std::vector<std::pair<std::string, Angle>> bindings)
    : lhs(std::move(l)), rhs(std::move(r)), label(std::move(name)), params(std::move(bindings)) {
  if (lhs.inputs() != rhs.inputs() || lhs.outputs() != rhs.outputs())
    throw ZxError(ErrorCode::Arity, "equation " + label + " relates a " + std::to_string(lhs.inputs()) + "->" +
                                        std::to_string(lhs.outputs()) + " diagram to a " +
                                        std::to_string(rhs.inputs()) + "->" + std::to_string(rhs.outputs()) + " one");
}

bool verify_equation(const Equation& e, const InterpOptions& options, double tol) {
  InterpOptions o = options;
  const Fragment f = fragment_of(e.lhs).join(fragment_of(e.rhs));
  if (o.backend.kind == BackendKind::Auto)
    o.backend = f.unrestricted ? Backend::floating() : Backend::exact(f.order());
  else if (o.backend.kind == BackendKind::Exact && o.backend.order == 0)
    o.backend = Backend::exact(f.order());
  return mat_equal(interp(e.lhs, o), interp(e.rhs, o), tol);
}

IncompletenessReport incompleteness_witness(std::int64_t p, int samples_per_rule, std::uint64_t seed) {
  bool prime = p > 2 && p % 2 == 1;
  for (std::int64_t d = 3; prime && d * d <= p; d += 2)
    if (p % d == 0) prime = false;
  if (!prime) throw ZxError(ErrorCode::Precondition, std::to_string(p) + " is not an odd prime");
  IncompletenessReport rep;
  rep.p = p;
  std::int64_t k = 1;
  while ((k * p) % 8 != 1) ++k;
  rep.multiplier = k * p;
  const std::int64_t order = 8 * p;
  InterpOptions o;
  o.backend = Backend::exact(order);
  const Term g = gamma(Angle::pi(1, 4 * p), cyclotomic_poly(order)).diagram();
  rep.original = column(interp(g, o), 1).exact()(0, 0);
  rep.multiplied = column(interp(angle_multiplier(g, rep.multiplier), o), 1).exact()(0, 0);
  std::mt19937_64 rng(seed);
  const Fragment f = Fragment::rational(p);
  for (const Rule& r : builtin_rules()) {
    bool failed = false;
    for (int s = 0; s < samples_per_rule; ++s) {
      const auto [lhs, rhs] = instantiate_terms(r, random_instance(r, f, rng));
      ++rep.rule_samples;
      if (!mat_equal(interp(angle_multiplier(lhs, rep.multiplier), o), interp(angle_multiplier(rhs, rep.multiplier), o))) {
        ++rep.rule_failures;
        failed = true;
      }
    }
    if (failed) rep.failing_rules.push_back(r.name);
  }
  return rep;
}

}  // namespace zx
