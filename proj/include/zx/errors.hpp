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

#include <stdexcept>
#include <string>

namespace zx {

enum class ErrorCode {
  MalformedOrder,
  OrderMismatch,
  Embedding,
  NonInvertible,
  Composition,
  SizeLimit,
  Backend,
  Resource,
  ExactAngle,
  Match,
  ZeroScalar,
  Shape,
  Canonicity,
  Arity,
  Index,
  Parse,
  Precondition,
};

/// Every failure raised by the library carries one of the codes above so the
/// command-line front end can map it onto an exit status.
class ZxError : public std::runtime_error {
 public:
  ZxError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zx
