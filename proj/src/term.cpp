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


#include "zx/term.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "zx/errors.hpp"

namespace zx {

struct Term::Impl {
  Node node = Node::Generator;
  GeneratorKind kind = GeneratorKind::Empty;
  Angle phase;
  std::optional<Term> left_term;
  std::optional<Term> right_term;
  int inputs = 0;
  int outputs = 0;
  std::size_t size = 1;
  int width = 0;
};

namespace {

std::shared_ptr<Term::Impl> make_generator(GeneratorKind kind, int in, int out, Angle phase = {}) {
  auto impl = std::make_shared<Term::Impl>();
  impl->node = Term::Node::Generator;
  impl->kind = kind;
  impl->phase = phase;
  impl->inputs = in;
  impl->outputs = out;
  impl->width = std::max(in, out);
  return impl;
}

}  // namespace

Term::Term() : Term(Term::empty()) {}

Term::Term(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Term Term::z(int inputs, int outputs, Angle phase) {
  if (inputs < 0 || outputs < 0) throw ZxError(ErrorCode::Arity, "spider legs must be non-negative");
  return Term(make_generator(GeneratorKind::Z, inputs, outputs, phase));
}

Term Term::x(int inputs, int outputs, Angle phase) {
  if (inputs < 0 || outputs < 0) throw ZxError(ErrorCode::Arity, "spider legs must be non-negative");
  return Term(make_generator(GeneratorKind::X, inputs, outputs, phase));
}

Term Term::h() {
  static const Term t(make_generator(GeneratorKind::H, 1, 1));
  return t;
}

Term Term::id() {
  static const Term t(make_generator(GeneratorKind::Id, 1, 1));
  return t;
}

Term Term::swap() {
  static const Term t(make_generator(GeneratorKind::Swap, 2, 2));
  return t;
}

Term Term::cup() {
  static const Term t(make_generator(GeneratorKind::Cup, 2, 0));
  return t;
}

Term Term::cap() {
  static const Term t(make_generator(GeneratorKind::Cap, 0, 2));
  return t;
}

Term Term::empty() {
  static const Term t(make_generator(GeneratorKind::Empty, 0, 0));
  return t;
}

Term::Node Term::node() const { return impl_->node; }

GeneratorKind Term::kind() const {
  if (impl_->node != Node::Generator) throw ZxError(ErrorCode::Precondition, "not a generator");
  return impl_->kind;
}

const Angle& Term::phase() const { return impl_->phase; }
const Term& Term::left() const {
  if (!impl_->left_term) throw ZxError(ErrorCode::Precondition, "generator has no subterms");
  return *impl_->left_term;
}

const Term& Term::right() const {
  if (!impl_->right_term) throw ZxError(ErrorCode::Precondition, "generator has no subterms");
  return *impl_->right_term;
}
int Term::inputs() const { return impl_->inputs; }
int Term::outputs() const { return impl_->outputs; }
std::size_t Term::size() const { return impl_->size; }
int Term::width() const { return impl_->width; }
const void* Term::identity() const { return impl_.get(); }

bool Term::operator==(const Term& o) const {
  if (impl_ == o.impl_) return true;
  const Impl& a = *impl_;
  const Impl& b = *o.impl_;
  if (a.node != b.node || a.inputs != b.inputs || a.outputs != b.outputs || a.size != b.size) return false;
  if (a.node == Node::Generator) return a.kind == b.kind && a.phase == b.phase;
  return *a.left_term == *b.left_term && *a.right_term == *b.right_term;
}

std::string Term::to_string() const {
  std::ostringstream os;
  switch (impl_->node) {
    case Node::Tensor:
      os << '(' << left().to_string() << " (x) " << right().to_string() << ')';
      break;
    case Node::Compose:
      os << '(' << left().to_string() << " ; " << right().to_string() << ')';
      break;
    case Node::Generator:
      switch (impl_->kind) {
        case GeneratorKind::Z:
        case GeneratorKind::X:
          os << (impl_->kind == GeneratorKind::Z ? 'Z' : 'X') << '(' << inputs() << ',' << outputs() << ','
             << phase().to_string() << ')';
          break;
        case GeneratorKind::H: os << 'H'; break;
        case GeneratorKind::Id: os << "Id"; break;
        case GeneratorKind::Swap: os << "Swap"; break;
        case GeneratorKind::Cup: os << "Cup"; break;
        case GeneratorKind::Cap: os << "Cap"; break;
        case GeneratorKind::Empty: os << "Empty"; break;
      }
  }
  return os.str();
}

Term tensor(const Term& a, const Term& b) {
  auto impl = std::make_shared<Term::Impl>();
  impl->node = Term::Node::Tensor;
  impl->left_term = a;
  impl->right_term = b;
  impl->inputs = a.inputs() + b.inputs();
  impl->outputs = a.outputs() + b.outputs();
  impl->size = a.size() + b.size();
  impl->width = std::max(a.width() + b.inputs(), a.outputs() + b.width());
  return Term(std::move(impl));
}

Term compose(const Term& a, const Term& b) {
  if (a.outputs() != b.inputs())
    throw ZxError(ErrorCode::Composition, "cannot compose: first term has " + std::to_string(a.outputs()) +
                                              " outputs, second has " + std::to_string(b.inputs()) + " inputs");
  auto impl = std::make_shared<Term::Impl>();
  impl->node = Term::Node::Compose;
  impl->left_term = a;
  impl->right_term = b;
  impl->inputs = a.inputs();
  impl->outputs = b.outputs();
  impl->size = a.size() + b.size();
  impl->width = std::max(a.width(), b.width());
  return Term(std::move(impl));
}

Term tensor_all(const std::vector<Term>& parts) {
  if (parts.empty()) return Term::empty();
  Term acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = tensor(parts[i], acc);
  return acc;
}

Term compose_all(const std::vector<Term>& steps) {
  if (steps.empty()) throw ZxError(ErrorCode::Precondition, "compose_all needs at least one term");
  Term acc = steps.front();
  for (std::size_t i = 1; i < steps.size(); ++i) acc = compose(acc, steps[i]);
  return acc;
}

Term identity(int n) {
  if (n < 0) throw ZxError(ErrorCode::Arity, "negative wire count");
  if (n == 0) return Term::empty();
  return tensor_all(std::vector<Term>(static_cast<std::size_t>(n), Term::id()));
}

Term permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size());
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      throw ZxError(ErrorCode::Index, "not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<int> cur = perm;
  std::vector<Term> layers;
  bool sorted = std::is_sorted(cur.begin(), cur.end());
  for (int round = 0; !sorted; ++round) {
    std::vector<Term> parts;
    bool any = false;
    int i = 0;
    if (round % 2 == 1) {
      parts.push_back(Term::id());
      i = 1;
    }
    for (; i < n; i += 2) {
      if (i + 1 < n && cur[static_cast<std::size_t>(i)] > cur[static_cast<std::size_t>(i + 1)]) {
        std::swap(cur[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(i + 1)]);
        parts.push_back(Term::swap());
        any = true;
      } else {
        parts.push_back(Term::id());
        if (i + 1 < n) parts.push_back(Term::id());
      }
    }
    if (any) layers.push_back(tensor_all(parts));
    sorted = std::is_sorted(cur.begin(), cur.end());
  }
  if (layers.empty()) return identity(n);
  return compose_all(layers);
}

namespace {

Term flip(const Term& d, bool negate, std::unordered_map<const void*, Term>& memo) {
  auto it = memo.find(d.identity());
  if (it != memo.end()) return it->second;
  Term r;
  switch (d.node()) {
    case Term::Node::Tensor:
      r = tensor(flip(d.left(), negate, memo), flip(d.right(), negate, memo));
      break;
    case Term::Node::Compose:
      r = compose(flip(d.right(), negate, memo), flip(d.left(), negate, memo));
      break;
    case Term::Node::Generator:
      switch (d.kind()) {
        case GeneratorKind::Z:
          r = Term::z(d.outputs(), d.inputs(), negate ? -d.phase() : d.phase());
          break;
        case GeneratorKind::X:
          r = Term::x(d.outputs(), d.inputs(), negate ? -d.phase() : d.phase());
          break;
        case GeneratorKind::Cup: r = Term::cap(); break;
        case GeneratorKind::Cap: r = Term::cup(); break;
        default: r = d;
      }
  }
  memo.emplace(d.identity(), r);
  return r;
}

Term map_phases_rec(const Term& d, const std::function<Angle(const Angle&)>& f,
                    std::unordered_map<const void*, Term>& memo) {
  auto it = memo.find(d.identity());
  if (it != memo.end()) return it->second;
  Term r = d;
  switch (d.node()) {
    case Term::Node::Tensor:
      r = tensor(map_phases_rec(d.left(), f, memo), map_phases_rec(d.right(), f, memo));
      break;
    case Term::Node::Compose:
      r = compose(map_phases_rec(d.left(), f, memo), map_phases_rec(d.right(), f, memo));
      break;
    case Term::Node::Generator:
      if (d.kind() == GeneratorKind::Z) r = Term::z(d.inputs(), d.outputs(), f(d.phase()));
      if (d.kind() == GeneratorKind::X) r = Term::x(d.inputs(), d.outputs(), f(d.phase()));
  }
  memo.emplace(d.identity(), r);
  return r;
}

void collect_fragment(const Term& d, Fragment& acc, std::unordered_map<const void*, bool>& seen) {
  if (!seen.emplace(d.identity(), true).second) return;
  if (d.node() == Term::Node::Generator) {
    if (d.kind() == GeneratorKind::Z || d.kind() == GeneratorKind::X) acc = acc.join(fragment_of(d.phase()));
    return;
  }
  collect_fragment(d.left(), acc, seen);
  collect_fragment(d.right(), acc, seen);
}

}  // namespace

Term adjoint(const Term& d) {
  std::unordered_map<const void*, Term> memo;
  return flip(d, true, memo);
}

Term transpose(const Term& d) {
  std::unordered_map<const void*, Term> memo;
  return flip(d, false, memo);
}

Term map_phases(const Term& d, const std::function<Angle(const Angle&)>& f) {
  std::unordered_map<const void*, Term> memo;
  return map_phases_rec(d, f, memo);
}

Fragment fragment_of(const Term& d) {
  Fragment acc = Fragment::rational(1);
  std::unordered_map<const void*, bool> seen;
  collect_fragment(d, acc, seen);
  return acc;
}

CircuitBuilder::CircuitBuilder(int inputs) : term_(identity(inputs)), next_label_(inputs) {
  for (int i = 0; i < inputs; ++i) order_.push_back(i);
}

std::vector<int> CircuitBuilder::apply(const Term& gate, const std::vector<int>& on) {
  if (static_cast<int>(on.size()) != gate.inputs())
    throw ZxError(ErrorCode::Arity, "gate expects " + std::to_string(gate.inputs()) + " wires, got " +
                                        std::to_string(on.size()));
  std::vector<int> rest;
  for (int label : order_)
    if (std::find(on.begin(), on.end(), label) == on.end()) rest.push_back(label);
  if (rest.size() + on.size() != order_.size()) throw ZxError(ErrorCode::Index, "gate wire not open or repeated");

  std::vector<int> target = rest;
  target.insert(target.end(), on.begin(), on.end());
  if (target != order_) {
    std::vector<int> perm(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
      perm[i] = static_cast<int>(std::find(target.begin(), target.end(), order_[i]) - target.begin());
    then(permutation(perm));
  }
  then(rest.empty() ? gate : tensor(identity(static_cast<int>(rest.size())), gate));
  std::vector<int> fresh;
  for (int i = 0; i < gate.outputs(); ++i) fresh.push_back(next_label_++);
  order_ = rest;
  order_.insert(order_.end(), fresh.begin(), fresh.end());
  return fresh;
}

void CircuitBuilder::then(const Term& step) {
  term_ = trivial_ ? step : compose(term_, step);
  trivial_ = false;
}

Term CircuitBuilder::finish(const std::vector<int>& output_order) const {
  if (output_order.size() != order_.size()) throw ZxError(ErrorCode::Index, "finish must list every open wire");
  std::vector<int> perm(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    auto it = std::find(output_order.begin(), output_order.end(), order_[i]);
    if (it == output_order.end()) throw ZxError(ErrorCode::Index, "open wire missing from output order");
    perm[i] = static_cast<int>(it - output_order.begin());
  }
  if (std::is_sorted(perm.begin(), perm.end())) return term_;
  return trivial_ ? permutation(perm) : compose(term_, permutation(perm));
}

}  // namespace zx
