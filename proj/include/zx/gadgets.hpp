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

#include "zx/cyclotomic.hpp"
#include "zx/interp.hpp"
#include "zx/term.hpp"

namespace zx {

/// A 1 -> n diagram whose |0>-plug is the all-ones vector; its |1>-plug is
/// the encoded state. With n = 0 it is a controlled scalar.
class ControlledState {
 public:
  explicit ControlledState(Term diagram);

  const Term& diagram() const { return diagram_; }
  int outputs() const { return diagram_.outputs(); }

 private:
  Term diagram_;
};

/// interp(d) |1>, as a 2^n x 1 column.
Matrix encoded(const ControlledState& s, const InterpOptions& options = {});
/// interp(d) |0>, the all-ones column for a genuine controlled state.
Matrix on_zero(const ControlledState& s, const InterpOptions& options = {});

/// Checks interp(d)|0> against the all-ones vector (exactly, or within 1e-9 in float).
bool is_controlled_state(const Term& d, const InterpOptions& options = {});

/// 1 -> 1, matrix [[1, 1], [0, 1]].
Term triangle();
/// 2 -> 1 on (a, b), |a b> -> |a AND b>.
Term and_gate();
/// 2 -> 1 on (control, wire): control |0> leaves the wire intact, control |1>
/// yields |0>(<0| + <1|).
Term transistor();
/// 1 -> 1 bit flip, X(1,1,pi).
Term not_gate();
/// 1 -> 2, |0> -> |00>, |1> -> |01> + |10>.
Term w_split();
/// 2n -> n, multiplies output i of the first block with output i of the second.
Term merge_outputs(int n);

/// Normalized basis states and effects: |b> and <b|.
Term basis_state(int bit);
Term basis_effect(int bit);
/// Plug |bit> into input 0 of `d`.
Term plug(const Term& d, int bit);

enum class ScalarValue { Two, Half, Sqrt2, InvSqrt2, Phase };
/// A 0 -> 0 diagram for 2, 1/2, sqrt(2), 1/sqrt(2) or e^{i theta}.
Term scalar_diagram(ScalarValue value, const Angle& theta = {});

ControlledState sum_cs(const ControlledState& a, const ControlledState& b);
ControlledState prod_cs(const ControlledState& a, const ControlledState& b);

/// The 1 -> 0 spider Z(alpha): encodes e^{i alpha}.
ControlledState lambda_unit(const Angle& alpha);
/// Encodes P(e^{i alpha}); coefficients are built as repeated sums of unit gadgets.
ControlledState gamma(const Angle& alpha, const IntPolynomial& poly);
/// Encodes 1/2.
ControlledState c_half();
/// Encodes P(e^{i pi/4n}) / 2^p; (p, P) must be canonical at order 8n.
ControlledState lambda_rational(std::int64_t n, std::int64_t p, const IntPolynomial& poly);
/// Encodes an arbitrary complex number with real-valued phases.
ControlledState lambda_real(std::complex<double> x);

}  // namespace zx
