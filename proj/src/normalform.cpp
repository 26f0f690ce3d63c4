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


#include "zx/normalform.hpp"

#include <map>
#include <string>

#include "zx/errors.hpp"

namespace zx {

namespace {

using Index = Eigen::Index;

int log2_exact(Index n) {
  int k = 0;
  while ((Index(1) << k) < n) ++k;
  if ((Index(1) << k) != n) throw ZxError(ErrorCode::Shape, "length " + std::to_string(n) + " is not a power of two");
  return k;
}

// Leaf-level operations on a state over `bits` bits, bit 0 most significant.
template <typename S>
Dense<S> permute_bits(const Dense<S>& v, int bits, const std::vector<int>& sigma) {
  Dense<S> r(v.rows(), 1);
  for (Index i = 0; i < v.rows(); ++i) {
    Index j = 0;
    for (int b = 0; b < bits; ++b)
      if ((i >> (bits - 1 - b)) & 1) j |= Index(1) << (bits - 1 - sigma[static_cast<std::size_t>(b)]);
    r(j, 0) = v(i, 0);
  }
  return r;
}

// Keeps the coordinates where bits i and j agree and drops bit j.
template <typename S>
Dense<S> merge_bits(const Dense<S>& v, int bits, int i, int j) {
  Dense<S> r(v.rows() / 2, 1);
  for (Index x = 0; x < r.rows(); ++x) {
    Index full = 0;
    int src = 0;
    for (int b = 0; b < bits; ++b) {
      Index bit = 0;
      if (b == j) {
        bit = (x >> (bits - 2 - (i < j ? i : i - 1))) & 1;
      } else {
        bit = (x >> (bits - 2 - src)) & 1;
        ++src;
      }
      full |= bit << (bits - 1 - b);
    }
    r(x, 0) = v(full, 0);
  }
  return r;
}

// Sums over bit i.
template <typename S>
Dense<S> discard_bit(const Dense<S>& v, int bits, int i) {
  Dense<S> r(v.rows() / 2, 1);
  const int low = bits - 1 - i;
  for (Index x = 0; x < r.rows(); ++x) {
    const Index hi = (x >> low) << (low + 1);
    const Index lo = x & ((Index(1) << low) - 1);
    r(x, 0) = v(hi | lo, 0) + v(hi | (Index(1) << low) | lo, 0);
  }
  return r;
}

Matrix same_backend(const Matrix& m, const Matrix& like) {
  if (m.is_exact() && like.is_exact()) return m.with_order(lcm_order(m.order(), like.order()));
  return m.is_exact() ? Matrix(m.to_float()) : m;
}

template <typename F>
Matrix on_column(const Matrix& v, F f) {
  if (v.is_exact()) return Matrix(f(v.exact()), v.order());
  return Matrix(f(v.floating()));
}

Matrix state_permute(const Matrix& v, int bits, const std::vector<int>& sigma) {
  return on_column(v, [&](const auto& d) { return permute_bits(d, bits, sigma); });
}

Matrix state_merge(const Matrix& v, int bits, int i, int j) {
  return on_column(v, [&](const auto& d) { return merge_bits(d, bits, i, j); });
}

Matrix state_discard(const Matrix& v, int bits, int i) {
  return on_column(v, [&](const auto& d) { return discard_bit(d, bits, i); });
}

Matrix state_product(const Matrix& a, const Matrix& b) { return mat_kron(a, b); }

// Traces bits i and j of a state: merge, then sum the merged bit out.
Matrix state_trace(const Matrix& v, int bits, int i, int j) {
  Matrix r = state_merge(v, bits, i, j);
  return state_discard(r, bits - 1, i < j ? i : i - 1);
}

void check_output(const NormalForm& a, int site, const char* what) {
  if (site < 0 || site >= a.outputs)
    throw ZxError(ErrorCode::Index, std::string(what) + ": output " + std::to_string(site) + " out of range for " +
                                        std::to_string(a.outputs) + " outputs");
}

NormalForm from_state(const Matrix& v, int inputs, int outputs) {
  return NormalForm{CnfTree::from_leaves(v), inputs, outputs};
}

class Renderer {
 public:
  Term run(const CnfTree& t) {
    if (t.is_leaf()) return leaf(t);
    // Fresh bit b picks the branch: D0 sees control c AND NOT b, D1 sees
    // c AND b, and their outputs multiply pointwise.
    const Term d0 = run(t.zero_branch());
    const Term d1 = run(t.one_branch());
    const int k = t.depth() - 1;
    CircuitBuilder b(1);
    std::vector<int> c = b.apply(Term::z(1, 2), {0});
    std::vector<int> bit = b.add(Term::z(0, 3));
    const int c0 = b.apply(transistor(), {bit[0], c[0]})[0];
    std::vector<int> out0 = b.apply(d0, {c0});
    const int c1 = b.apply(and_gate(), {bit[1], c[1]})[0];
    std::vector<int> out1 = b.apply(d1, {c1});
    std::vector<int> outs = {bit[2]};
    for (int i = 0; i < k; ++i) outs.push_back(b.apply(Term::z(2, 1), {out0[i], out1[i]})[0]);
    return b.finish(outs);
  }

 private:
  Term leaf(const CnfTree& t) {
    if (!t.is_exact()) return lambda_real(t.leaves().floating()(0, 0)).diagram();
    const DyadicCyclotomic& x = t.leaves().exact()(0, 0);
    const std::string key = std::to_string(t.order()) + ":" + x.to_string();
    auto it = leaves_.find(key);
    if (it != leaves_.end()) return it->second;
    Term d = lambda_rational(t.order() / 8, x.p(), x.poly()).diagram();
    return leaves_.emplace(key, d).first->second;
  }

  std::map<std::string, Term> leaves_;
};

}  // namespace

CnfTree::CnfTree() : leaves_(ExactMatrix::Zero(1, 1), 8) {}

CnfTree CnfTree::leaf(const DyadicCyclotomic& x, std::int64_t order) {
  ExactMatrix m(1, 1);
  m(0, 0) = x;
  return CnfTree(Matrix(m, order), 0);
}

CnfTree CnfTree::leaf(std::complex<double> x) { return CnfTree(Matrix(FloatMatrix::Constant(1, 1, x)), 0); }

CnfTree CnfTree::node(const CnfTree& zero, const CnfTree& one) {
  if (zero.depth_ != one.depth_)
    throw ZxError(ErrorCode::Shape, "branches of depth " + std::to_string(zero.depth_) + " and " +
                                        std::to_string(one.depth_));
  const Matrix b = same_backend(one.leaves_, zero.leaves_);
  const Matrix a = same_backend(zero.leaves_, b);
  const Index half = a.rows();
  if (a.is_exact()) {
    ExactMatrix m(2 * half, 1);
    m << a.exact(), b.exact();
    return CnfTree(Matrix(m, a.order()), zero.depth_ + 1);
  }
  FloatMatrix m(2 * half, 1);
  m << a.floating(), b.floating();
  return CnfTree(Matrix(m), zero.depth_ + 1);
}

CnfTree CnfTree::from_leaves(const Matrix& column, std::int64_t order) {
  if (column.cols() != 1) throw ZxError(ErrorCode::Shape, "leaves must form a single column");
  const int depth = log2_exact(column.rows());
  if (column.is_exact() && order != 0) return CnfTree(column.with_order(order), depth);
  return CnfTree(column, depth);
}

Fragment CnfTree::fragment() const { return is_exact() ? Fragment::rational(order() / 8) : Fragment::any(); }

CnfTree CnfTree::branch(Index start) const {
  if (is_leaf()) throw ZxError(ErrorCode::Index, "a leaf has no branches");
  const Index half = leaves_.rows() / 2;
  if (is_exact()) return CnfTree(Matrix(ExactMatrix(leaves_.exact().middleRows(start, half)), order()), depth_ - 1);
  return CnfTree(Matrix(FloatMatrix(leaves_.floating().middleRows(start, half))), depth_ - 1);
}

CnfTree CnfTree::zero_branch() const { return branch(0); }

CnfTree CnfTree::one_branch() const { return branch(leaves_.rows() / 2); }

bool CnfTree::operator==(const CnfTree& o) const {
  if (depth_ != o.depth_ || is_exact() != o.is_exact()) return false;
  if (is_exact()) return order() == o.order() && leaves_.exact() == o.leaves_.exact();
  return leaves_.floating() == o.leaves_.floating();
}

CnfTree lambda_state(const Matrix& psi, std::int64_t order) { return CnfTree::from_leaves(psi, order); }

ControlledState render(const CnfTree& tree) { return ControlledState(Renderer().run(tree)); }

Term render(const NormalForm& nf) {
  // X(0,1,pi) is sqrt(2)|1>; the scalar restores |1>.
  const Term state = compose(basis_state(1), render(nf.tree).diagram());
  CircuitBuilder b(nf.inputs);
  std::vector<int> s = b.add(state);
  for (int i = 0; i < nf.inputs; ++i) b.apply(Term::cup(), {i, s[static_cast<std::size_t>(i)]});
  return b.finish(std::vector<int>(s.begin() + nf.inputs, s.end()));
}

Matrix to_matrix(const NormalForm& nf) {
  const Index rows = Index(1) << nf.outputs;
  const Index cols = Index(1) << nf.inputs;
  const Matrix& v = nf.tree.leaves();
  if (v.is_exact()) {
    ExactMatrix m(rows, cols);
    for (Index x = 0; x < cols; ++x)
      for (Index y = 0; y < rows; ++y) m(y, x) = v.exact()(x * rows + y, 0);
    return Matrix(m, v.order());
  }
  FloatMatrix m(rows, cols);
  for (Index x = 0; x < cols; ++x)
    for (Index y = 0; y < rows; ++y) m(y, x) = v.floating()(x * rows + y, 0);
  return Matrix(m);
}

NormalForm lambda_map(const Matrix& m, std::int64_t order) {
  const int n = log2_exact(m.cols());
  const int k = log2_exact(m.rows());
  const Index rows = m.rows();
  if (m.is_exact()) {
    ExactMatrix v(rows * m.cols(), 1);
    for (Index x = 0; x < m.cols(); ++x)
      for (Index y = 0; y < rows; ++y) v(x * rows + y, 0) = m.exact()(y, x);
    return NormalForm{CnfTree::from_leaves(Matrix(v, m.order()), order), n, k};
  }
  FloatMatrix v(rows * m.cols(), 1);
  for (Index x = 0; x < m.cols(); ++x)
    for (Index y = 0; y < rows; ++y) v(x * rows + y, 0) = m.floating()(y, x);
  return NormalForm{CnfTree::from_leaves(Matrix(v)), n, k};
}

NormalForm normalize(const Term& d, const InterpOptions& options) { return lambda_map(interp(d, options)); }

bool equal(const Term& a, const Term& b, const InterpOptions& options, double tol) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs())
    throw ZxError(ErrorCode::Arity, "cannot compare a " + std::to_string(a.inputs()) + "->" +
                                        std::to_string(a.outputs()) + " diagram with a " +
                                        std::to_string(b.inputs()) + "->" + std::to_string(b.outputs()) + " one");
  const Fragment f = fragment_of(a).join(fragment_of(b));
  BackendKind kind = options.backend.kind;
  if (kind == BackendKind::Auto) kind = f.unrestricted ? BackendKind::Float : BackendKind::Exact;
  InterpOptions o = options;
  if (kind == BackendKind::Exact) {
    o.backend = Backend::exact(options.backend.order == 0 ? f.order() : options.backend.order);
    return normalize(a, o) == normalize(b, o);
  }
  o.backend = Backend::floating();
  return mat_equal(interp(a, o), interp(b, o), tol);
}

NormalForm nf_tensor(const NormalForm& a, const NormalForm& b) {
  // Bits of the product state: xa ya xb yb; target order xa xb ya yb.
  const int na = a.inputs, ma = a.outputs, nb = b.inputs, mb = b.outputs;
  const int bits = na + ma + nb + mb;
  std::vector<int> sigma(static_cast<std::size_t>(bits));
  for (int i = 0; i < na; ++i) sigma[i] = i;
  for (int i = 0; i < ma; ++i) sigma[na + i] = na + nb + i;
  for (int i = 0; i < nb; ++i) sigma[na + ma + i] = na + i;
  for (int i = 0; i < mb; ++i) sigma[na + ma + nb + i] = na + nb + ma + i;
  const Matrix v = state_permute(state_product(a.tree.leaves(), b.tree.leaves()), bits, sigma);
  return from_state(v, na + nb, ma + mb);
}

NormalForm nf_compose(const NormalForm& a, const NormalForm& b) {
  if (a.outputs != b.inputs)
    throw ZxError(ErrorCode::Composition, "cannot compose normal forms: " + std::to_string(a.outputs) +
                                              " outputs against " + std::to_string(b.inputs) + " inputs");
  // Bits xa ya xb yb; trace ya_j with xb_j, always the first remaining pair.
  Matrix v = state_product(a.tree.leaves(), b.tree.leaves());
  int bits = a.inputs + a.outputs + b.inputs + b.outputs;
  for (int j = 0; j < a.outputs; ++j) {
    v = state_trace(v, bits, a.inputs, a.inputs + a.outputs - j);
    bits -= 2;
  }
  return from_state(v, a.inputs, b.outputs);
}

NormalForm nf_permute(const NormalForm& a, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != a.outputs)
    throw ZxError(ErrorCode::Arity, "permutation of " + std::to_string(sigma.size()) + " wires for " +
                                        std::to_string(a.outputs) + " outputs");
  std::vector<bool> seen(sigma.size());
  std::vector<int> full;
  for (int i = 0; i < a.inputs; ++i) full.push_back(i);
  for (int s : sigma) {
    if (s < 0 || s >= a.outputs || seen[static_cast<std::size_t>(s)])
      throw ZxError(ErrorCode::Index, "not a permutation of " + std::to_string(a.outputs) + " wires");
    seen[static_cast<std::size_t>(s)] = true;
    full.push_back(a.inputs + s);
  }
  return from_state(state_permute(a.tree.leaves(), a.inputs + a.outputs, full), a.inputs, a.outputs);
}

NormalForm nf_z21(const NormalForm& a, int site) {
  check_output(a, site, "nf_z21");
  check_output(a, site + 1, "nf_z21");
  const int bits = a.inputs + a.outputs;
  return from_state(state_merge(a.tree.leaves(), bits, a.inputs + site, a.inputs + site + 1), a.inputs,
                    a.outputs - 1);
}

NormalForm nf_z10(const NormalForm& a, int site) {
  check_output(a, site, "nf_z10");
  return from_state(state_discard(a.tree.leaves(), a.inputs + a.outputs, a.inputs + site), a.inputs,
                    a.outputs - 1);
}

NormalForm nf_trace(const NormalForm& a, int first, int second) {
  check_output(a, first, "nf_trace");
  check_output(a, second, "nf_trace");
  if (first == second) throw ZxError(ErrorCode::Index, "nf_trace needs two distinct outputs");
  return from_state(state_trace(a.tree.leaves(), a.inputs + a.outputs, a.inputs + first, a.inputs + second),
                    a.inputs, a.outputs - 2);
}

}  // namespace zx
