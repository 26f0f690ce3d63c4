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

#include <map>
#include <string>
#include <vector>

#include "zx/angle.hpp"
#include "zx/term.hpp"

namespace zx {

enum class VertexKind { Z, X, H };

struct Vertex {
  VertexKind kind = VertexKind::Z;
  Angle phase;

  bool operator==(const Vertex& o) const { return kind == o.kind && phase == o.phase; }
};

/// One end of an edge: a vertex, or a numbered input/output boundary.
struct Endpoint {
  enum class Kind { Vertex, Input, Output };
  Kind kind = Kind::Vertex;
  int index = 0;

  static Endpoint vertex(int v) { return {Kind::Vertex, v}; }
  static Endpoint input(int i) { return {Kind::Input, i}; }
  static Endpoint output(int j) { return {Kind::Output, j}; }
  bool is_vertex() const { return kind == Kind::Vertex; }
  bool operator==(const Endpoint& o) const { return kind == o.kind && index == o.index; }
  bool operator!=(const Endpoint& o) const { return !(*this == o); }
  bool operator<(const Endpoint& o) const { return kind != o.kind ? kind < o.kind : index < o.index; }
};

struct Edge {
  Endpoint a;
  Endpoint b;

  bool is_self_loop() const { return a == b; }
  Endpoint other(const Endpoint& from) const { return a == from ? b : a; }
};

/// Undirected multigraph view of a diagram: spiders and H-boxes joined by
/// wires, with each input and output boundary attached to exactly one edge.
/// Vertex and edge ids are stable across edits.
class OpenGraph {
 public:
  OpenGraph(int inputs = 0, int outputs = 0);

  int inputs() const { return inputs_; }
  int outputs() const { return outputs_; }

  int add_vertex(VertexKind kind, Angle phase = {});
  int add_edge(Endpoint a, Endpoint b);
  void remove_edge(int e);
  /// Removes the vertex and every incident edge.
  void remove_vertex(int v);
  void set_phase(int v, Angle phase);

  const std::map<int, Vertex>& vertices() const { return vertices_; }
  const std::map<int, Edge>& edges() const { return edges_; }
  const Vertex& vertex(int v) const;
  const Edge& edge(int e) const;
  bool has_vertex(int v) const { return vertices_.count(v) != 0; }
  bool has_edge(int e) const { return edges_.count(e) != 0; }

  /// Edge ids at an endpoint in ascending order; a self-loop appears twice.
  std::vector<int> incident(const Endpoint& p) const;
  int degree(int v) const { return static_cast<int>(incident(Endpoint::vertex(v)).size()); }
  /// The edge attached to an input/output boundary, or -1.
  int boundary_edge(const Endpoint& p) const;

  /// Throws on H-boxes of degree other than 2 or boundaries not attached exactly once.
  void validate() const;

  std::string to_string() const;

 private:
  int inputs_;
  int outputs_;
  int next_vertex_ = 0;
  int next_edge_ = 0;
  std::map<int, Vertex> vertices_;
  std::map<int, Edge> edges_;
  std::map<Endpoint, std::vector<int>> incidence_;
};

OpenGraph to_graph(const Term& d);
/// Rebuilds a term whose interpretation equals the graph's; feedback and
/// boundary-to-boundary wires are realized with Cup and Cap.
Term from_graph(const OpenGraph& g);

/// Isomorphism of boundary-labelled multigraphs (topology only, not semantics).
bool graph_equal(const OpenGraph& a, const OpenGraph& b, int vertex_budget = 64);

}  // namespace zx
