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
#include <vector>

#include "bcmd/bfs.hpp"
#include "bcmd/graph.hpp"

namespace bcmd {

// A hop count, or nullopt for "infinite" (some pair is disconnected).
using MaybeHop = std::optional<Hop>;

struct DiameterResult {
  MaybeHop value;
  // Exact mode: a pair at distance `value` (or an unreachable pair when the
  // value is infinite). Estimate mode: the two sweep endpoints.
  Vertex u = 0;
  Vertex v = 0;
  bool exact = false;
};

// Bipartition V = V1 + V2 for the colored objective; side[v] is 1 or 2.
class ColorPartition {
 public:
  explicit ColorPartition(std::vector<std::uint8_t> side);
  // Side 1 is `first`, everything else is side 2.
  static ColorPartition from_side1(Vertex n, const std::vector<Vertex>& first);

  std::uint8_t side(Vertex v) const { return side_[v]; }
  Vertex num_vertices() const { return static_cast<Vertex>(side_.size()); }
  std::vector<Vertex> members(std::uint8_t which) const;

 private:
  std::vector<std::uint8_t> side_;
};

// Maximum eccentricity via one BFS per vertex. Parallel over sources; the
// reduction keeps the largest value and, among those, the lexicographically
// smallest (u, v), so the result is schedule independent.
DiameterResult exact_diameter(const Graph& g);

// Two BFS passes: from a seeded uniform vertex r to its farthest vertex u
// (smallest id on ties), then the eccentricity of u. A lower bound on the
// diameter; throws kDisconnected on disconnected input.
DiameterResult two_sweep(const Graph& g, std::uint64_t seed);

MaybeHop eccentricity(const Graph& g, Vertex v);

// max over u in V1, w in V2 of d(u, w). BFS runs from the smaller side.
MaybeHop colored_diameter(const Graph& g, const ColorPartition& partition);

}  // namespace bcmd
