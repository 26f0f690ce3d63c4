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

#include <string>

#include <json.hpp>

#include "zx/cyclotomic.hpp"
#include "zx/matrix.hpp"
#include "zx/normalform.hpp"
#include "zx/rules.hpp"
#include "zx/term.hpp"

namespace zx {

using Json = nlohmann::json;

/// Exact scalars as {"order", "p", "poly"}, float ones as {"re", "im"}.
Json scalar_to_json(const DyadicCyclotomic& x);
Json scalar_to_json(std::complex<double> x);

/// {"Z": {"in", "out", "phase"}}, "H", {"tensor": [A, B]}, {"compose": [A, B]}, ...
Json term_to_json(const Term& d);
Term term_from_json(const Json& j);

/// {"rows", "cols", "backend", "entries"} with entries row-major.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"inputs", "outputs", "leaves"}.
Json normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j);

/// {"lhs", "rhs", "label", "params"}.
Json equation_to_json(const Equation& e);
Equation equation_from_json(const Json& j);

/// Text front ends; malformed input raises a Parse error naming the position.
Term parse_diagram(const std::string& text);
Matrix parse_matrix(const std::string& text);
NormalForm parse_normal_form(const std::string& text);
Equation parse_equation(const std::string& text);

}  // namespace zx
