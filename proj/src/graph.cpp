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


#include "zx/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "zx/errors.hpp"

namespace zx {

OpenGraph::OpenGraph(int inputs, int outputs) : inputs_(inputs), outputs_(outputs) {
  if (inputs < 0 || outputs < 0) throw ZxError(ErrorCode::Arity, "negative boundary count");
}

int OpenGraph::add_vertex(VertexKind kind, Angle phase) {
  const int v = next_vertex_++;
  vertices_.emplace(v, Vertex{kind, kind == VertexKind::H ? Angle{} : phase});
  incidence_[Endpoint::vertex(v)];
  return v;
}

int OpenGraph::add_edge(Endpoint a, Endpoint b) {
  for (const Endpoint& p : {a, b}) {
    if (p.is_vertex() && !has_vertex(p.index)) throw ZxError(ErrorCode::Index, "edge to unknown vertex");
    if (p.kind == Endpoint::Kind::Input && (p.index < 0 || p.index >= inputs_))
      throw ZxError(ErrorCode::Index, "input index out of range");
    if (p.kind == Endpoint::Kind::Output && (p.index < 0 || p.index >= outputs_))
      throw ZxError(ErrorCode::Index, "output index out of range");
  }
  const int e = next_edge_++;
  edges_.emplace(e, Edge{a, b});
  incidence_[a].push_back(e);
  incidence_[b].push_back(e);
  return e;
}

void OpenGraph::remove_edge(int e) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw ZxError(ErrorCode::Index, "unknown edge " + std::to_string(e));
  for (const Endpoint& p : {it->second.a, it->second.b}) {
    auto& list = incidence_[p];
    list.erase(std::find(list.begin(), list.end(), e));
  }
  edges_.erase(it);
}

void OpenGraph::remove_vertex(int v) {
  if (!has_vertex(v)) throw ZxError(ErrorCode::Index, "unknown vertex " + std::to_string(v));
  std::vector<int> inc = incidence_[Endpoint::vertex(v)];
  std::sort(inc.begin(), inc.end());
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  for (int e : inc) remove_edge(e);
  vertices_.erase(v);
  incidence_.erase(Endpoint::vertex(v));
}

void OpenGraph::set_phase(int v, Angle phase) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw ZxError(ErrorCode::Index, "unknown vertex " + std::to_string(v));
  it->second.phase = phase;
}

const Vertex& OpenGraph::vertex(int v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw ZxError(ErrorCode::Index, "unknown vertex " + std::to_string(v));
  return it->second;
}

const Edge& OpenGraph::edge(int e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw ZxError(ErrorCode::Index, "unknown edge " + std::to_string(e));
  return it->second;
}

std::vector<int> OpenGraph::incident(const Endpoint& p) const {
  auto it = incidence_.find(p);
  if (it == incidence_.end()) return {};
  std::vector<int> r = it->second;
  std::sort(r.begin(), r.end());
  return r;
}

int OpenGraph::boundary_edge(const Endpoint& p) const {
  auto it = incidence_.find(p);
  if (it == incidence_.end() || it->second.empty()) return -1;
  return it->second.front();
}

void OpenGraph::validate() const {
  for (const auto& [v, vert] : vertices_)
    if (vert.kind == VertexKind::H && degree(v) != 2)
      throw ZxError(ErrorCode::Shape, "H-box " + std::to_string(v) + " must have degree 2");
  for (int i = 0; i < inputs_; ++i)
    if (incident(Endpoint::input(i)).size() != 1)
      throw ZxError(ErrorCode::Shape, "input " + std::to_string(i) + " must be attached exactly once");
  for (int j = 0; j < outputs_; ++j)
    if (incident(Endpoint::output(j)).size() != 1)
      throw ZxError(ErrorCode::Shape, "output " + std::to_string(j) + " must be attached exactly once");
}

namespace {

std::string endpoint_string(const Endpoint& p) {
  switch (p.kind) {
    case Endpoint::Kind::Input: return "in" + std::to_string(p.index);
    case Endpoint::Kind::Output: return "out" + std::to_string(p.index);
    default: return "v" + std::to_string(p.index);
  }
}

}  // namespace

std::string OpenGraph::to_string() const {
  std::ostringstream os;
  os << "graph " << inputs_ << "->" << outputs_ << '\n';
  for (const auto& [v, vert] : vertices_) {
    const char* kind = vert.kind == VertexKind::Z ? "Z" : vert.kind == VertexKind::X ? "X" : "H";
    os << "  v" << v << ' ' << kind;
    if (vert.kind != VertexKind::H) os << '(' << vert.phase.to_string() << ')';
    os << '\n';
  }
  for (const auto& [e, edge] : edges_) os << "  e" << e << ' ' << endpoint_string(edge.a) << " -- " << endpoint_string(edge.b) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Term -> graph

namespace {

struct PortForest {
  std::vector<int> parent;
  std::vector<std::vector<Endpoint>> attached;

  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    attached.emplace_back();
    return parent.back();
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[static_cast<std::size_t>(b)] = a;
    auto& into = attached[static_cast<std::size_t>(a)];
    auto& from = attached[static_cast<std::size_t>(b)];
    into.insert(into.end(), from.begin(), from.end());
    from.clear();
  }
};

struct Ports {
  std::vector<int> in;
  std::vector<int> out;
};

Ports build_ports(const Term& d, OpenGraph& g, PortForest& f) {
  Ports r;
  switch (d.node()) {
    case Term::Node::Tensor: {
      Ports a = build_ports(d.left(), g, f);
      Ports b = build_ports(d.right(), g, f);
      r.in = a.in;
      r.in.insert(r.in.end(), b.in.begin(), b.in.end());
      r.out = a.out;
      r.out.insert(r.out.end(), b.out.begin(), b.out.end());
      return r;
    }
    case Term::Node::Compose: {
      Ports a = build_ports(d.left(), g, f);
      Ports b = build_ports(d.right(), g, f);
      for (std::size_t i = 0; i < a.out.size(); ++i) f.join(a.out[i], b.in[i]);
      return {a.in, b.out};
    }
    case Term::Node::Generator:
      break;
  }
  auto leg = [&](int v) {
    const int p = f.make();
    f.attached[static_cast<std::size_t>(p)].push_back(Endpoint::vertex(v));
    return p;
  };
  switch (d.kind()) {
    case GeneratorKind::Z:
    case GeneratorKind::X:
    case GeneratorKind::H: {
      const VertexKind kind = d.kind() == GeneratorKind::Z ? VertexKind::Z
                              : d.kind() == GeneratorKind::X ? VertexKind::X
                                                             : VertexKind::H;
      const int v = g.add_vertex(kind, d.kind() == GeneratorKind::H ? Angle{} : d.phase());
      for (int i = 0; i < d.inputs(); ++i) r.in.push_back(leg(v));
      for (int j = 0; j < d.outputs(); ++j) r.out.push_back(leg(v));
      break;
    }
    case GeneratorKind::Id: {
      const int p = f.make();
      r.in = {p};
      r.out = {p};
      break;
    }
    case GeneratorKind::Swap: {
      const int p = f.make();
      const int q = f.make();
      r.in = {p, q};
      r.out = {q, p};
      break;
    }
    case GeneratorKind::Cup: {
      const int p = f.make();
      r.in = {p, p};
      break;
    }
    case GeneratorKind::Cap: {
      const int p = f.make();
      r.out = {p, p};
      break;
    }
    case GeneratorKind::Empty:
      break;
  }
  return r;
}

}  // namespace

OpenGraph to_graph(const Term& d) {
  OpenGraph g(d.inputs(), d.outputs());
  PortForest f;
  Ports ports = build_ports(d, g, f);
  for (int i = 0; i < d.inputs(); ++i)
    f.attached[static_cast<std::size_t>(f.find(ports.in[static_cast<std::size_t>(i)]))].push_back(Endpoint::input(i));
  for (int j = 0; j < d.outputs(); ++j)
    f.attached[static_cast<std::size_t>(f.find(ports.out[static_cast<std::size_t>(j)]))].push_back(Endpoint::output(j));
  for (std::size_t p = 0; p < f.parent.size(); ++p) {
    if (f.find(static_cast<int>(p)) != static_cast<int>(p)) continue;
    const auto& at = f.attached[p];
    if (at.empty()) {
      // A closed wire loop is the scalar 2, i.e. a bare phase-free spider.
      g.add_vertex(VertexKind::Z);
    } else if (at.size() == 2) {
      g.add_edge(at[0], at[1]);
    } else {
      throw ZxError(ErrorCode::Shape, "wire with " + std::to_string(at.size()) + " attachments");
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Graph -> term

namespace {

Term node_term(const Vertex& v, int in, int out) {
  switch (v.kind) {
    case VertexKind::Z: return Term::z(in, out, v.phase);
    case VertexKind::X: return Term::x(in, out, v.phase);
    case VertexKind::H: break;
  }
  if (in == 1 && out == 1) return Term::h();
  if (in == 2 && out == 0) return compose(tensor(Term::h(), Term::id()), Term::cup());
  if (in == 0 && out == 2) return compose(Term::cap(), tensor(Term::h(), Term::id()));
  throw ZxError(ErrorCode::Shape, "H-box must have exactly two legs");
}

}  // namespace

Term from_graph(const OpenGraph& g) {
  g.validate();
  CircuitBuilder builder(g.inputs());
  // Each open wire waits to be consumed at one endpoint.
  std::map<int, Endpoint> consumer;
  std::set<int> opened_edges;
  std::set<int> done;

  for (int i = 0; i < g.inputs(); ++i) {
    const int e = g.boundary_edge(Endpoint::input(i));
    consumer[i] = g.edge(e).other(Endpoint::input(i));
    opened_edges.insert(e);
  }
  for (int i = 0; i < g.inputs(); ++i) {
    if (!consumer.count(i)) continue;
    const Endpoint c = consumer.at(i);
    if (c.kind == Endpoint::Kind::Input && c.index > i) {
      builder.apply(Term::cup(), {i, c.index});
      consumer.erase(i);
      consumer.erase(c.index);
    }
  }

  auto waiting_for = [&](int v) {
    std::vector<int> labels;
    for (int label : builder.wires()) {
      auto it = consumer.find(label);
      if (it != consumer.end() && it->second == Endpoint::vertex(v)) labels.push_back(label);
    }
    return labels;
  };

  while (done.size() < g.vertices().size()) {
    int best = -1;
    std::size_t best_count = 0;
    for (const auto& [v, vert] : g.vertices()) {
      if (done.count(v)) continue;
      const std::size_t count = waiting_for(v).size();
      if (best < 0 || count > best_count) {
        best = v;
        best_count = count;
      }
    }
    const int v = best;
    const Endpoint here = Endpoint::vertex(v);
    std::vector<int> in_labels = waiting_for(v);

    std::vector<Endpoint> out_consumers;
    int loops = 0;
    std::vector<int> inc = g.incident(here);
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    for (int e : inc) {
      if (opened_edges.count(e)) continue;
      opened_edges.insert(e);
      const Edge& edge = g.edge(e);
      if (edge.is_self_loop()) {
        ++loops;
      } else {
        out_consumers.push_back(edge.other(here));
      }
    }
    const int outs = static_cast<int>(out_consumers.size()) + 2 * loops;
    std::vector<int> out_labels =
        builder.apply(node_term(g.vertex(v), static_cast<int>(in_labels.size()), outs), in_labels);
    for (int label : in_labels) consumer.erase(label);
    for (std::size_t k = 0; k < out_consumers.size(); ++k) consumer[out_labels[k]] = out_consumers[k];
    for (int l = 0; l < loops; ++l) {
      const std::size_t base = out_consumers.size() + 2 * static_cast<std::size_t>(l);
      builder.apply(Term::cup(), {out_labels[base], out_labels[base + 1]});
    }
    done.insert(v);
  }

  for (const auto& [e, edge] : g.edges()) {
    if (opened_edges.count(e)) continue;
    if (edge.a.kind != Endpoint::Kind::Output || edge.b.kind != Endpoint::Kind::Output)
      throw ZxError(ErrorCode::Shape, "unreached edge in graph extraction");
    std::vector<int> pair = builder.add(Term::cap());
    consumer[pair[0]] = edge.a;
    consumer[pair[1]] = edge.b;
  }

  std::vector<int> order(static_cast<std::size_t>(g.outputs()), -1);
  for (int label : builder.wires()) {
    const Endpoint c = consumer.at(label);
    if (c.kind != Endpoint::Kind::Output) throw ZxError(ErrorCode::Shape, "dangling wire in graph extraction");
    order[static_cast<std::size_t>(c.index)] = label;
  }
  return builder.finish(order);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct Indexed {
  std::vector<int> ids;  // local index -> vertex id
  std::vector<Vertex> verts;
  std::vector<int> degree;
  int boundary_base = 0;  // nodes >= base are boundaries: inputs then outputs
  std::map<std::pair<int, int>, int> mult;

  int count(int a, int b) const {
    auto it = mult.find({std::min(a, b), std::max(a, b)});
    return it == mult.end() ? 0 : it->second;
  }
};

Indexed index_graph(const OpenGraph& g) {
  Indexed x;
  std::map<int, int> local;
  for (const auto& [v, vert] : g.vertices()) {
    local[v] = static_cast<int>(x.ids.size());
    x.ids.push_back(v);
    x.verts.push_back(vert);
    x.degree.push_back(g.degree(v));
  }
  x.boundary_base = static_cast<int>(x.ids.size());
  auto node = [&](const Endpoint& p) {
    switch (p.kind) {
      case Endpoint::Kind::Vertex: return local.at(p.index);
      case Endpoint::Kind::Input: return x.boundary_base + p.index;
      default: return x.boundary_base + g.inputs() + p.index;
    }
  };
  for (const auto& [e, edge] : g.edges()) {
    const int a = node(edge.a);
    const int b = node(edge.b);
    ++x.mult[{std::min(a, b), std::max(a, b)}];
  }
  return x;
}

}  // namespace

bool graph_equal(const OpenGraph& a, const OpenGraph& b, int vertex_budget) {
  if (static_cast<int>(a.vertices().size()) > vertex_budget || static_cast<int>(b.vertices().size()) > vertex_budget)
    throw ZxError(ErrorCode::SizeLimit, "graph exceeds the isomorphism vertex budget of " + std::to_string(vertex_budget));
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) return false;
  if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size()) return false;

  const Indexed ga = index_graph(a);
  const Indexed gb = index_graph(b);
  const int n = ga.boundary_base;
  const int boundaries = a.inputs() + a.outputs();
  for (int i = 0; i < boundaries; ++i)
    for (int j = i; j < boundaries; ++j)
      if (ga.count(n + i, n + j) != gb.count(n + i, n + j)) return false;

  // Visit vertices of `a` breadth-first from the boundary so that each new
  // vertex is constrained by already mapped neighbours.
  std::vector<int> order;
  std::vector<bool> queued(static_cast<std::size_t>(n));
  auto expand = [&](int from) {
    for (int v = 0; v < n; ++v)
      if (!queued[static_cast<std::size_t>(v)] && ga.count(from, v) > 0) {
        queued[static_cast<std::size_t>(v)] = true;
        order.push_back(v);
      }
  };
  for (int i = 0; i < boundaries; ++i) expand(n + i);
  for (std::size_t k = 0; static_cast<int>(order.size()) < n || k < order.size(); ++k) {
    if (k == order.size()) {
      int v = 0;
      while (queued[static_cast<std::size_t>(v)]) ++v;
      queued[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
    }
    expand(order[k]);
  }

  std::vector<int> map_ab(static_cast<std::size_t>(n + boundaries), -1);
  std::vector<bool> used(static_cast<std::size_t>(n));
  for (int i = 0; i < boundaries; ++i) map_ab[static_cast<std::size_t>(n + i)] = n + i;

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (!(ga.verts[static_cast<std::size_t>(v)] == gb.verts[static_cast<std::size_t>(w)])) continue;
      if (ga.degree[static_cast<std::size_t>(v)] != gb.degree[static_cast<std::size_t>(w)]) continue;
      if (ga.count(v, v) != gb.count(w, w)) continue;
      bool ok = true;
      for (int u = 0; u < n + boundaries && ok; ++u) {
        const int mu = map_ab[static_cast<std::size_t>(u)];
        if (mu < 0) continue;
        ok = ga.count(v, u) == gb.count(w, mu);
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(w)] = true;
      map_ab[static_cast<std::size_t>(v)] = w;
      if (search(k + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
      map_ab[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return search(0);
}

}  // namespace zx
