// Copyright 2026 The bcmd Authors
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

namespace bcmd {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kIo,
  kDisconnected,
  kBudgetViolation,
  kNotANonEdge,
  kInfeasibleCapacity,
  kWiringBlocked,
  kOracleCapExceeded,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this exception type. The C API
// maps `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Vertex the failure is about, when there is one (the stranded center of an
  // infeasible clustering, the over-budget vertex of a plan, ...).
  std::optional<std::uint32_t> vertex() const noexcept { return vertex_; }
  Error& with_vertex(std::uint32_t v) {
    vertex_ = v;
    return *this;
  }

 private:
  ErrorCode code_;
  std::optional<std::uint32_t> vertex_;
};

}  // namespace bcmd
