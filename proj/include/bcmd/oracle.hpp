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
#include <variant>

#include "bcmd/graph.hpp"
#include "bcmd/metrics.hpp"
#include "bcmd/plan.hpp"

namespace bcmd {

struct DiameterObjective {};
struct SingleSourceObjective {
  Vertex source = 0;
};
struct ColoredObjective {
  ColorPartition partition;
};
using Objective =
    std::variant<DiameterObjective, SingleSourceObjective, ColoredObjective>;

// Objective value on g + plan (plan validated first).
MaybeHop verify_plan(const Graph& g, const ShortcutPlan& plan,
                     const Objective& objective);

// Objective value on g alone.
MaybeHop evaluate(const Graph& g, const Objective& objective);

struct OracleResult {
  MaybeHop optimum;
  ShortcutPlan plan;
  std::uint64_t explored = 0;  // feasible edge sets evaluated
};

inline constexpr std::uint64_t kDefaultOracleCap = 5'000'000;

// Number of candidate sets the exhaustive search may visit:
// sum_{j <= k} C(#non-edges, j), saturating.
std::uint64_t oracle_candidate_count(const Graph& g, std::uint32_t k);

// Exhaustive BCMD-delta solver. Non-edges are ordered lexicographically and
// subsets of size 0..k are visited in lexicographic index order, skipping any
// extension that breaks the delta budget. The witness is the first subset
// reaching the optimum, i.e. the lexicographically smallest. Throws
// kOracleCapExceeded when oracle_candidate_count exceeds `cap`.
OracleResult solve_exact(const Graph& g, std::uint32_t k, std::uint32_t delta,
                         const Objective& objective,
                         std::uint64_t cap = kDefaultOracleCap);

}  // namespace bcmd
