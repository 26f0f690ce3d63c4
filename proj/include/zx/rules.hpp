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

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zx/angle.hpp"
#include "zx/graph.hpp"
#include "zx/interp.hpp"
#include "zx/term.hpp"

namespace zx {

/// Linear phase expression sum_i coeff_i * param_i + constant.
struct PhaseExpr {
  std::vector<std::pair<int, std::int64_t>> terms;
  Angle constant;

  static PhaseExpr constant_angle(Angle a) { return {{}, a}; }
  static PhaseExpr param(int i, std::int64_t coeff = 1, Angle offset = {}) { return {{{i, coeff}}, offset}; }

  Angle evaluate(const std::vector<Angle>& params) const;
  bool operator==(const PhaseExpr& o) const { return terms == o.terms && constant == o.constant; }
};

enum class Side { Input, Output };

/// One side of a rule: a small graph whose boundary is a list of slots shared
/// with the other side, plus variadic leg groups.
struct Template {
  struct Node {
    VertexKind kind = VertexKind::Z;
    PhaseExpr phase;
    bool operator==(const Node& o) const { return kind == o.kind && phase == o.phase; }
  };
  /// Connection between two template vertices; `group` >= 0 makes the
  /// multiplicity a variable (see Rule::edge_groups).
  struct Link {
    int a = 0;
    int b = 0;
    int group = -1;
    bool operator==(const Link& o) const { return a == o.a && b == o.b && group == o.group; }
  };

  std::vector<Node> nodes;
  std::vector<Link> links;
  /// Vertex holding each slot, or -(1 + s) when slot s is wired straight to slot s.
  std::vector<int> slot_vertex;
  /// Vertex holding each leg group.
  std::vector<int> group_vertex;

  bool operator==(const Template& o) const {
    return nodes == o.nodes && links == o.links && slot_vertex == o.slot_vertex && group_vertex == o.group_vertex;
  }
};

/// A rewrite rule lhs = rhs with angle parameters and variadic legs.
struct Rule {
  struct Group {
    Side side = Side::Input;
    int min = 0;
    bool operator==(const Group& o) const { return side == o.side && min == o.min; }
  };

  std::string name;
  int params = 0;
  std::vector<Side> slots;
  /// Variadic boundary legs: "(...)" has min 0, one-or-more has min 1.
  std::vector<Group> groups;
  /// Minimum multiplicity of each variadic internal connection.
  std::vector<int> edge_groups;
  Template lhs;
  Template rhs;
};

/// Values for a rule's parameters and variadic multiplicities.
struct Instance {
  std::vector<Angle> params;
  std::vector<int> group_sizes;
  std::vector<int> edge_group_sizes;

  std::string to_string() const;
};

/// The graph of one side under an instance. Inputs are the input slots in
/// order followed by input groups; outputs likewise.
OpenGraph instantiate(const Rule& r, const Template& side, const Instance& inst);
std::pair<Term, Term> instantiate_terms(const Rule& r, const Instance& inst);

/// Rules with both sides exchanged, flipped upside down, or with colours swapped.
Rule reversed(const Rule& r);
Rule flipped(const Rule& r);
Rule colour_swapped(const Rule& r);

/// The twelve base rules S1 S2 E B1 B2 K EU H SUP C BW A.
std::vector<Rule> base_rules();
/// Base rules plus their distinct flip and colour-swap variants.
std::vector<Rule> builtin_rules();
const Rule& find_rule(const std::vector<Rule>& rules, const std::string& name);

struct SoundnessReport {
  std::string rule;
  int samples = 0;
  int passed = 0;
  std::optional<Instance> counterexample;

  bool ok() const { return passed == samples; }
};

Instance random_instance(const Rule& r, const Fragment& fragment, std::mt19937_64& rng);

/// Compares interpretations of both sides on random instances: exactly for
/// rational fragments, within `tol` otherwise.
SoundnessReport check_soundness(const Rule& r, int samples, const Fragment& fragment, std::uint64_t seed = 1,
                                double tol = 1e-9);

/// Multiplies every phase by k.
Term angle_multiplier(const Term& d, std::int64_t k);

enum class Direction { Forward, Backward };

/// An embedding of one side of a rule into a graph.
struct Match {
  Instance instance;
  std::vector<int> vertices;
  /// Host edge carrying each slot; a straight slot-to-slot wire uses one edge for both.
  std::vector<int> slot_edges;
  std::vector<std::vector<int>> group_edges;
  std::vector<int> internal_edges;
};

/// All embeddings of the chosen side, one per choice of host vertices.
std::vector<Match> find_matches(const OpenGraph& g, const Rule& r, Direction dir = Direction::Forward);

/// Replaces a matched side by the other one.
OpenGraph apply_rule(const OpenGraph& g, const Rule& r, const Match& m, Direction dir = Direction::Forward);

/// (D1 (x) Z(0,0,alpha), D2 (x) Z(0,0,alpha)) -> (D1, D2); alpha must not be pi.
std::pair<Term, Term> cancel_scalar(const Term& lhs, const Term& rhs, const Angle& alpha);

struct Equation {
  Term lhs;
  Term rhs;
  std::string label;
  std::vector<std::pair<std::string, Angle>> params;

  Equation() = default;
  Equation(Term l, Term r, std::string name, std::vector<std::pair<std::string, Angle>> bindings = {});
};

bool verify_equation(const Equation& e, const InterpOptions& options = {}, double tol = 1e-9);

struct IncompletenessReport {
  std::int64_t p = 0;
  std::int64_t multiplier = 0;
  /// Gamma_{pi/4p}(Phi_8p) on |1>, and the same after multiplying every angle.
  DyadicCyclotomic original;
  DyadicCyclotomic multiplied;
  int rule_samples = 0;
  int rule_failures = 0;
  std::vector<std::string> failing_rules;

  bool ok() const { return original.is_zero() && !multiplied.is_zero() && rule_failures == 0; }
};

/// The cyclotomic witness for prime p: an equation that holds semantically
/// but breaks under an angle multiplier that preserves every axiom.
IncompletenessReport incompleteness_witness(std::int64_t p, int samples_per_rule = 50, std::uint64_t seed = 1);

}  // namespace zx
