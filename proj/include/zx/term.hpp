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

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "zx/angle.hpp"

namespace zx {

enum class GeneratorKind { Z, X, H, Id, Swap, Cup, Cap, Empty };

/// An immutable ZX term: a generator, a tensor product, or a sequential
/// composition. Subterms are shared, so copying a Term is cheap and the same
/// gadget used many times occupies memory once.
class Term {
 public:
  enum class Node { Generator, Tensor, Compose };

  Term();  // the empty diagram

  static Term z(int inputs, int outputs, Angle phase = {});
  static Term x(int inputs, int outputs, Angle phase = {});
  static Term h();
  static Term id();
  static Term swap();
  /// Effect 2 -> 0, |00> + |11> read as a bra.
  static Term cup();
  /// State 0 -> 2, |00> + |11>.
  static Term cap();
  static Term empty();

  Node node() const;
  GeneratorKind kind() const;  // Generator nodes only
  const Angle& phase() const;  // Z and X only
  const Term& left() const;    // Tensor: left factor; Compose: first
  const Term& right() const;   // Tensor: right factor; Compose: then

  int inputs() const;
  int outputs() const;
  /// Number of generators in the tree, counting shared subterms every time.
  std::size_t size() const;
  /// Largest number of wires alive at once when the term is evaluated left to right.
  int width() const;

  /// Address of the shared node; equal for copies of the same Term.
  const void* identity() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  std::string to_string() const;

 struct Impl;

 private:
  explicit Term(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend Term tensor(const Term& a, const Term& b);
  friend Term compose(const Term& a, const Term& b);
};

Term tensor(const Term& a, const Term& b);
/// Apply `a`, then `b`; requires a.outputs() == b.inputs().
Term compose(const Term& a, const Term& b);

Term tensor_all(const std::vector<Term>& parts);
Term compose_all(const std::vector<Term>& steps);
/// n parallel wires; the empty diagram for n = 0.
Term identity(int n);
/// Wire reordering: the wire entering at position i leaves at position perm[i].
Term permutation(const std::vector<int>& perm);

Term adjoint(const Term& d);
Term transpose(const Term& d);
/// Rewrite every spider phase through `f`, keeping the shape of the tree.
Term map_phases(const Term& d, const std::function<Angle(const Angle&)>& f);

/// Smallest fragment containing every phase of `d`.
Fragment fragment_of(const Term& d);

/// Builds a term step by step on labelled wires; each apply() routes the
/// named wires next to each other, runs the gate on them and labels its
/// outputs with fresh numbers.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int inputs);

  /// Labels of the current open wires in their current order.
  const std::vector<int>& wires() const { return order_; }

  std::vector<int> apply(const Term& gate, const std::vector<int>& on);
  /// Append a 0 -> k gate without touching existing wires.
  std::vector<int> add(const Term& gate) { return apply(gate, {}); }

  /// Finish with the open wires arranged in `output_order` (must list all of them).
  Term finish(const std::vector<int>& output_order) const;
  Term term() const { return term_; }

 private:
  void then(const Term& step);

  Term term_;
  bool trivial_ = true;  // term_ is still a bare identity
  std::vector<int> order_;
  int next_label_ = 0;
};

}  // namespace zx
