// Copyright 2026 The Nomadic Authors
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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace nomadic {

enum class ErrorKind {
  kLoop,              // an edge from a vertex to itself
  kOrderMismatch,     // operands over different n
  kOpenWalk,          // length sequence does not return to its start
  kPrematureRevisit,  // walk revisits a vertex before closing
  kUnsupportedOrder,  // constructor cannot handle this n
  kArgument,
  kPrecondition,
  kFormat,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. `step()` carries the time step or
// index associated with the failure when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::int64_t> step = std::nullopt)
      : std::runtime_error(message), kind_(kind), step_(step) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> step() const noexcept { return step_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> step_;
};

}  // namespace nomadic
