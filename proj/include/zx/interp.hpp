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

#include "zx/matrix.hpp"
#include "zx/term.hpp"

namespace zx {

struct InterpOptions {
  Backend backend;
  /// Largest number of wires any intermediate state may carry.
  int max_qubits = 12;
};

/// Standard interpretation of a term as a 2^outputs x 2^inputs matrix.
/// Auto picks the exact backend whenever every phase is a rational multiple of pi.
Matrix interp(const Term& d, const InterpOptions& options = {});

/// Largest number of wires the evaluator holds at once for `d`. Small
/// composite subterms are evaluated separately as dense blocks, so this can
/// be far below d.width().
int peak_wires(const Term& d);

/// Ring order used by the exact backend for `d` under `backend`.
std::int64_t exact_order(const Term& d, const Backend& backend);

/// Map/state duality: the 2^(n+m) column whose entry at index x*2^m + y is
/// the (y, x) entry of interp(d).
Matrix choi(const Term& d, const InterpOptions& options = {});

/// The 0 -> n+m term obtained by bending every input of `d` into an output
/// with Cap; its interpretation is choi(d).
Term bend_inputs(const Term& d);

/// Column j of a matrix: interp(d) applied to the basis vector |j>.
Matrix column(const Matrix& m, Eigen::Index j);

}  // namespace zx
