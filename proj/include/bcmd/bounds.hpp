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

namespace bcmd {

// Closed-form diameter bounds. Values are unrounded; an integral diameter D
// meets a lower bound L iff D >= ceil(L).
struct BoundSet {
  // Matching shortcuts on an n-vertex path, 1 <= k <= n/2.
  std::optional<double> path_lower;  // n/(2(k+1)) + log2(k+1) - 2
  std::optional<double> path_upper;  // n/(k+1) + 4 log2(k+1) + 1
  // Unconstrained shortcuts on a path.
  std::optional<double> cg_lower;    // n/(k+1) - 1
  std::optional<double> cg_upper;    // n/(k+1) + 3
  // Any connected graph of diameter D.
  std::optional<double> general_lower;  // (D+1)/(k+1) - 1
  // Guarantees relative to the optimum D* of the instance.
  std::optional<double> log_approx_upper;    // 2(beta-1 + D* + beta log_{beta delta-1}(k+1))
  std::optional<double> const_approx_upper; // 4 D* + 2
};

struct BoundInputs {
  std::uint64_t n = 0;
  std::uint64_t k = 1;
  std::uint64_t delta = 1;
  std::uint64_t beta = 3;
  std::optional<std::uint64_t> diameter;
  std::optional<std::uint64_t> optimum;
};

// Throws kInvalidArgument unless n >= 2 and k >= 1.
BoundSet eval_bounds(const BoundInputs& in);

}  // namespace bcmd
