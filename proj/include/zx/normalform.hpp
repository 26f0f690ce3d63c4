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
#include <vector>

#include "zx/angle.hpp"
#include "zx/gadgets.hpp"
#include "zx/interp.hpp"
#include "zx/matrix.hpp"
#include "zx/term.hpp"

namespace zx {

/// Controlled normal form: a complete binary tree of controlled scalars.
/// Leaves are stored flat as a 2^depth x 1 column indexed by bitstrings, most
/// significant output first; exact leaves are canonical at the tree order.
class CnfTree {
 public:
  CnfTree();
  static CnfTree leaf(const DyadicCyclotomic& x, std::int64_t order);
  static CnfTree leaf(std::complex<double> x);
  static CnfTree node(const CnfTree& zero, const CnfTree& one);
  /// Tree over a column of 2^k scalars; exact leaves are re-expressed at `order`
  /// (the column's own order when 0).
  static CnfTree from_leaves(const Matrix& column, std::int64_t order = 0);

  int depth() const { return depth_; }
  bool is_leaf() const { return depth_ == 0; }
  bool is_exact() const { return leaves_.is_exact(); }
  /// Ring order of exact leaves; 0 for float trees.
  std::int64_t order() const { return is_exact() ? leaves_.order() : 0; }
  Fragment fragment() const;
  CnfTree zero_branch() const;
  CnfTree one_branch() const;
  const Matrix& leaves() const { return leaves_; }

  /// Structural identity: same depth, backend, order and leaves.
  bool operator==(const CnfTree& o) const;
  bool operator!=(const CnfTree& o) const { return !(*this == o); }

 private:
  CnfTree(Matrix leaves, int depth) : leaves_(std::move(leaves)), depth_(depth) {}
  CnfTree branch(Eigen::Index half) const;
  Matrix leaves_;
  int depth_ = 0;
};

/// Lambda on states: the tree whose rendering encodes `psi` (a 2^k x 1 column).
CnfTree lambda_state(const Matrix& psi, std::int64_t order = 0);

/// The 1 -> depth controlled state of a tree: |0> gives the all-ones vector,
/// |1> gives the leaves.
ControlledState render(const CnfTree& tree);

/// Normal form of an n -> m map: the CNF of its Choi vector (input bits first).
struct NormalForm {
  CnfTree tree;
  int inputs = 0;
  int outputs = 0;

  bool operator==(const NormalForm& o) const {
    return inputs == o.inputs && outputs == o.outputs && tree == o.tree;
  }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }
};

/// The map diagram: the tree rendered with |1> on its control and the first
/// `inputs` outputs bent into inputs.
Term render(const NormalForm& nf);

/// Interpretation of the map a normal form stands for, read off its leaves.
Matrix to_matrix(const NormalForm& nf);

NormalForm lambda_map(const Matrix& m, std::int64_t order = 0);

/// lambda(interp(d)). With an exact backend the result is canonical: two
/// diagrams denote the same map exactly when their normal forms coincide.
NormalForm normalize(const Term& d, const InterpOptions& options = {});

/// Semantic equality via normal forms at a common ring order; float
/// comparisons use `tol`.
bool equal(const Term& a, const Term& b, const InterpOptions& options = {}, double tol = 1e-9);

NormalForm nf_tensor(const NormalForm& a, const NormalForm& b);
/// a then b.
NormalForm nf_compose(const NormalForm& a, const NormalForm& b);
/// Output i of `a` becomes output sigma[i].
NormalForm nf_permute(const NormalForm& a, const std::vector<int>& sigma);
/// Z(2,1) on outputs site and site + 1.
NormalForm nf_z21(const NormalForm& a, int site);
/// Z(1,0) on output site.
NormalForm nf_z10(const NormalForm& a, int site);
/// Connects outputs first and second with a cup.
NormalForm nf_trace(const NormalForm& a, int first, int second);

}  // namespace zx
