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
#include <vector>

#include "zx/rules.hpp"

namespace zx {

/// Known equations between small diagrams, each an instance of a lemma used
/// in completeness proofs. Parametrized lemmas appear once per sample angle.
std::vector<Equation> builtin_lemmas();

/// Writes one Equation JSON file per lemma into `dir`; returns the paths.
std::vector<std::string> export_lemmas(const std::vector<Equation>& lemmas, const std::string& dir);

/// Reads every *.json file of `dir` in name order.
std::vector<Equation> load_lemmas(const std::string& dir);

}  // namespace zx
