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


#include "zx/interp.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "zx/errors.hpp"

namespace zx {

namespace {

using Index = Eigen::Index;

constexpr int kBlockLegs = 6;

// Composite subterms small enough to be evaluated once as a dense block.
bool blockable(const Term& t) {
  return t.node() != Term::Node::Generator && t.inputs() + t.outputs() <= kBlockLegs && t.size() >= 4;
}

class PeakCounter {
 public:
  int run(const Term& t) {
    worst_ = std::max(worst_, local(t));
    return worst_;
  }

 private:
  // Wires alive while `t` runs on its own inputs; dense blocks count only
  // their legs here, their inside is measured once on its own.
  int local(const Term& t) {
    auto it = memo_.find(t.identity());
    if (it != memo_.end()) return it->second;
    int r = 0;
    switch (t.node()) {
      case Term::Node::Generator: r = std::max(t.inputs(), t.outputs()); break;
      case Term::Node::Tensor:
        r = std::max(inner(t.left()) + t.right().inputs(), t.left().outputs() + inner(t.right()));
        break;
      case Term::Node::Compose: r = std::max(inner(t.left()), inner(t.right())); break;
    }
    return memo_.emplace(t.identity(), r).first->second;
  }

  int inner(const Term& t) {
    if (!blockable(t)) return local(t);
    worst_ = std::max(worst_, local(t));
    return std::max(t.inputs(), t.outputs());
  }

  int worst_ = 0;
  std::unordered_map<const void*, int> memo_;
};

struct ExactRing {
  using Scalar = DyadicCyclotomic;
  std::int64_t order;

  Scalar phase(const Angle& a) const {
    if (!a.is_exact()) throw ZxError(ErrorCode::Backend, "real-valued phase " + a.to_string() + " under the exact backend");
    return root_power(order, a.root_exponent(order));
  }
  Scalar one_plus_phase(const Angle& a) const { return Scalar(1) + phase(a); }
  Scalar sqrt2_inv() const { return zx::sqrt2_inv(order); }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
};

struct FloatRing {
  using Scalar = std::complex<double>;

  Scalar phase(const Angle& a) const { return std::polar(1.0, a.value()); }
  Scalar one_plus_phase(const Angle& a) const { return 1.0 + phase(a); }
  Scalar sqrt2_inv() const { return std::sqrt(0.5); }
  static bool is_zero(const Scalar& s) { return s == 0.0; }
};

/// Evaluates a term by pushing a batch of states (one per column) through it,
/// acting only on the wires each generator touches. Small composite subterms
/// are turned into dense blocks once and reused wherever they occur.
template <typename Ring>
class Evaluator {
 public:
  using Scalar = typename Ring::Scalar;
  using State = Dense<Scalar>;

  explicit Evaluator(Ring ring) : ring_(std::move(ring)), s_(ring_.sqrt2_inv()) {}

  State run(const Term& d) {
    const Index dim = Index(1) << d.inputs();
    State st = State::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i) st(i, i) = Scalar(1);
    return structure(d, std::move(st), d.inputs(), 0);
  }

 private:
  const State& block(const Term& t) {
    auto it = blocks_.find(t.identity());
    if (it != blocks_.end()) return it->second;
    State b = run_structure(t);
    return blocks_.emplace(t.identity(), std::move(b)).first->second;
  }

  State run_structure(const Term& t) {
    const Index dim = Index(1) << t.inputs();
    State st = State::Zero(dim, dim);
    for (Index i = 0; i < dim; ++i) st(i, i) = Scalar(1);
    return structure(t, std::move(st), t.inputs(), 0);
  }

  // Apply `t` to wires [pos, pos + t.inputs()) of a state with `w` wires.
  State apply(const Term& t, State st, int w, int pos) {
    if (blockable(t)) return apply_dense(block(t), t.inputs(), t.outputs(), std::move(st), w, pos);
    return structure(t, std::move(st), w, pos);
  }

  State structure(const Term& t, State st, int w, int pos) {
    switch (t.node()) {
      case Term::Node::Tensor: {
        st = apply(t.left(), std::move(st), w, pos);
        w += t.left().outputs() - t.left().inputs();
        return apply(t.right(), std::move(st), w, pos + t.left().outputs());
      }
      case Term::Node::Compose: {
        st = apply(t.left(), std::move(st), w, pos);
        w += t.left().outputs() - t.left().inputs();
        return apply(t.right(), std::move(st), w, pos);
      }
      case Term::Node::Generator:
        break;
    }
    switch (t.kind()) {
      case GeneratorKind::Id:
      case GeneratorKind::Empty:
        return st;
      case GeneratorKind::Swap:
        return swap(std::move(st), w, pos);
      case GeneratorKind::H:
        return hadamard(std::move(st), w, pos);
      case GeneratorKind::Z:
        return z_spider(std::move(st), w, pos, t.inputs(), t.outputs(), t.phase());
      case GeneratorKind::X: {
        for (int i = 0; i < t.inputs(); ++i) st = hadamard(std::move(st), w, pos + i);
        st = z_spider(std::move(st), w, pos, t.inputs(), t.outputs(), t.phase());
        w += t.outputs() - t.inputs();
        for (int j = 0; j < t.outputs(); ++j) st = hadamard(std::move(st), w, pos + j);
        return st;
      }
      case GeneratorKind::Cup:
        return cup(std::move(st), w, pos);
      case GeneratorKind::Cap:
        return cap(std::move(st), w, pos);
    }
    return st;
  }

  static bool row_zero(const State& st, Index r) {
    for (Index c = 0; c < st.cols(); ++c)
      if (!Ring::is_zero(st(r, c))) return false;
    return true;
  }

  State swap(State st, int w, int pos) {
    const int hi_shift = w - pos - 1;
    const Index a = Index(1) << hi_shift;
    const Index b = Index(1) << (hi_shift - 1);
    for (Index r = 0; r < st.rows(); ++r)
      if ((r & a) && !(r & b)) st.row(r).swap(st.row(r ^ a ^ b));
    return st;
  }

  State hadamard(State st, int w, int pos) {
    const Index bit = Index(1) << (w - pos - 1);
    for (Index r = 0; r < st.rows(); ++r) {
      if (r & bit) continue;
      const Index r1 = r | bit;
      const bool z0 = row_zero(st, r);
      const bool z1 = row_zero(st, r1);
      if (z0 && z1) continue;
      for (Index c = 0; c < st.cols(); ++c) {
        const Scalar a = st(r, c);
        const Scalar b = st(r1, c);
        st(r, c) = s_ * (a + b);
        st(r1, c) = s_ * (a - b);
      }
    }
    return st;
  }

  State z_spider(const State& st, int w, int pos, int k, int l, const Angle& phase) {
    const int c = w - pos - k;
    const Index lo_mask = (Index(1) << c) - 1;
    const Index hi_count = Index(1) << pos;
    const Index k_ones = (Index(1) << k) - 1;
    const Index l_ones = (Index(1) << l) - 1;
    const Scalar e = ring_.phase(phase);
    State r = State::Zero(Index(1) << (w - k + l), st.cols());
    for (Index hi = 0; hi < hi_count; ++hi) {
      for (Index lo = 0; lo <= lo_mask; ++lo) {
        const Index src0 = (hi << (k + c)) | lo;
        const Index src1 = (hi << (k + c)) | (k_ones << c) | lo;
        const Index dst0 = (hi << (l + c)) | lo;
        const Index dst1 = (hi << (l + c)) | (l_ones << c) | lo;
        for (Index col = 0; col < st.cols(); ++col) {
          if (!Ring::is_zero(st(src0, col))) r(dst0, col) += st(src0, col);
          if (!Ring::is_zero(st(src1, col))) r(dst1, col) += e * st(src1, col);
        }
      }
    }
    return r;
  }

  State cup(const State& st, int w, int pos) {
    const int c = w - pos - 2;
    const Index lo_count = Index(1) << c;
    State r = State::Zero(Index(1) << (w - 2), st.cols());
    for (Index hi = 0; hi < (Index(1) << pos); ++hi)
      for (Index lo = 0; lo < lo_count; ++lo) {
        const Index dst = (hi << c) | lo;
        r.row(dst) = st.row((hi << (c + 2)) | lo) + st.row((hi << (c + 2)) | (Index(3) << c) | lo);
      }
    return r;
  }

  State cap(const State& st, int w, int pos) {
    const int c = w - pos;
    const Index lo_count = Index(1) << c;
    State r = State::Zero(Index(1) << (w + 2), st.cols());
    for (Index hi = 0; hi < (Index(1) << pos); ++hi)
      for (Index lo = 0; lo < lo_count; ++lo) {
        const Index src = (hi << c) | lo;
        r.row((hi << (c + 2)) | lo) = st.row(src);
        r.row((hi << (c + 2)) | (Index(3) << c) | lo) = st.row(src);
      }
    return r;
  }

  State apply_dense(const State& b, int k, int l, const State& st, int w, int pos) {
    const int c = w - pos - k;
    const Index lo_count = Index(1) << c;
    State r = State::Zero(Index(1) << (w - k + l), st.cols());
    for (Index hi = 0; hi < (Index(1) << pos); ++hi)
      for (Index mid = 0; mid < (Index(1) << k); ++mid)
        for (Index lo = 0; lo < lo_count; ++lo) {
          const Index src = (hi << (k + c)) | (mid << c) | lo;
          if (row_zero(st, src)) continue;
          for (Index out = 0; out < (Index(1) << l); ++out) {
            const Scalar& coeff = b(out, mid);
            if (Ring::is_zero(coeff)) continue;
            const Index dst = (hi << (l + c)) | (out << c) | lo;
            for (Index col = 0; col < st.cols(); ++col)
              if (!Ring::is_zero(st(src, col))) r(dst, col) += coeff * st(src, col);
          }
        }
    return r;
  }

  Ring ring_;
  Scalar s_;
  std::unordered_map<const void*, State> blocks_;
};

}  // namespace

int peak_wires(const Term& d) { return PeakCounter().run(d); }

std::int64_t exact_order(const Term& d, const Backend& backend) {
  const Fragment f = fragment_of(d);
  if (f.unrestricted) throw ZxError(ErrorCode::Backend, "diagram has real-valued phases; use the float backend");
  if (backend.order == 0) return f.order();
  if (backend.order % 8 != 0 || backend.order % f.order() != 0)
    throw ZxError(ErrorCode::Embedding, "ring order " + std::to_string(backend.order) + " cannot hold the phases of " +
                                            f.to_string());
  return backend.order;
}

Matrix interp(const Term& d, const InterpOptions& options) {
  const int wires = peak_wires(d);
  if (wires > options.max_qubits)
    throw ZxError(ErrorCode::Resource, "diagram needs " + std::to_string(wires) + " wires, cap is " +
                                           std::to_string(options.max_qubits));
  BackendKind kind = options.backend.kind;
  if (kind == BackendKind::Auto) kind = fragment_of(d).unrestricted ? BackendKind::Float : BackendKind::Exact;
  if (kind == BackendKind::Exact) {
    const std::int64_t order = exact_order(d, options.backend);
    Evaluator<ExactRing> ev(ExactRing{order});
    return Matrix(ev.run(d), order);
  }
  Evaluator<FloatRing> ev(FloatRing{});
  return Matrix(ev.run(d));
}

Term bend_inputs(const Term& d) {
  CircuitBuilder b(0);
  std::vector<int> xs;
  std::vector<int> ys;
  for (int i = 0; i < d.inputs(); ++i) {
    std::vector<int> pair = b.add(Term::cap());
    xs.push_back(pair[0]);
    ys.push_back(pair[1]);
  }
  std::vector<int> outs = b.apply(d, ys);
  xs.insert(xs.end(), outs.begin(), outs.end());
  return b.finish(xs);
}

Matrix choi(const Term& d, const InterpOptions& options) {
  const Matrix m = interp(d, options);
  const Index rows = m.rows();
  const Index cols = m.cols();
  if (m.is_exact()) {
    ExactMatrix v(rows * cols, 1);
    for (Index x = 0; x < cols; ++x)
      for (Index y = 0; y < rows; ++y) v(x * rows + y, 0) = m.exact()(y, x);
    return Matrix(std::move(v), m.order());
  }
  FloatMatrix v(rows * cols, 1);
  for (Index x = 0; x < cols; ++x)
    for (Index y = 0; y < rows; ++y) v(x * rows + y, 0) = m.floating()(y, x);
  return Matrix(std::move(v));
}

Matrix column(const Matrix& m, Eigen::Index j) {
  if (j < 0 || j >= m.cols()) throw ZxError(ErrorCode::Index, "column index out of range");
  if (m.is_exact()) return Matrix(ExactMatrix(m.exact().col(j)), m.order());
  return Matrix(FloatMatrix(m.floating().col(j)));
}

}  // namespace zx
