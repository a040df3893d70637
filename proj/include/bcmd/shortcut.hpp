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
#include <span>
#include <string>
#include <vector>

#include "bcmd/graph.hpp"
#include "bcmd/plan.hpp"

namespace bcmd {

// Conditions an algorithm reports alongside a (possibly short) plan.
enum Note : std::uint32_t {
  kNoteNone = 0,
  kNoteEarlyStop = 1u << 0,     // greedy ran out of budgeted non-adjacent pairs
  kNoteExhausted = 1u << 1,     // random baseline hit its rejection limit
  kNoteEmptyFamily = 1u << 2,   // no beta-segment exists; nothing to anchor on
  kNoteShortClusters = 1u << 3, // fewer distinct centers than k + 1
  kNotePathCapped = 1u << 4,    // path construction used fewer than k edges
};

struct ShortcutResult {
  ShortcutPlan plan;
  std::uint32_t notes = kNoteNone;
  std::vector<std::string> warnings;

  bool has(Note n) const { return (notes & n) != 0; }
};

// A tree over groups of vertices (segments or clusters) realized by shortcut
// edges. wiring[i] links node i + 1 to its parent: (host in parent, endpoint
// in child). The endpoint is the child's center unless that pair was already
// an edge, in which case `substituted[i]` is set.
struct TreeEmbedding {
  std::vector<std::int64_t> parent;  // -1 for the root
  std::vector<Edge> wiring;          // unnormalized: {host, child endpoint}
  std::vector<std::uint8_t> substituted;
  std::vector<std::uint32_t> depth;

  std::uint32_t height() const;
  std::vector<std::size_t> children_count() const;
};

// A group to be embedded: its vertices (ascending) and designated center.
struct TreeNode {
  std::vector<Vertex> vertices;
  Vertex center = 0;
};

// Breadth-first full-tree embedding. Node 0 is the root; children attach in
// node order, level by level. A parent hands out links from its vertices in
// ascending id, each vertex up to its remaining delta budget, so the root
// offers |node| * delta links and every other node one fewer (its center
// already carries the link to its own parent). When (host, child center) is
// already an edge the child's other vertices are tried in ascending id, then
// the parent's later hosts; kWiringBlocked if nothing works. Edges are added
// to `plan`, which must have room for nodes.size() - 1 of them.
TreeEmbedding embed_full_tree(const Graph& g, std::span<const TreeNode> nodes,
                              ShortcutPlan& plan);

// Maximal beta-segments, the k + 1 mutually farthest ones, joined into a full
// (beta * delta)-ary tree. Segment choice does not depend on the seed.
// Requires a connected graph (kDisconnected) and 3 <= beta <= n.
ShortcutResult log_approx(const Graph& g, std::uint32_t k, std::uint32_t delta,
                          std::uint32_t beta, std::uint64_t seed);

// k + 1 farthest-first centers; every center outside the largest cluster gets
// an edge to the smallest-id vertex of the largest cluster that still has
// budget and is not already its neighbor. kInfeasibleCapacity (with the
// stranded center as vertex()) when the largest cluster runs out.
ShortcutResult constant_approx(const Graph& g, std::uint32_t k,
                               std::uint32_t delta, std::uint64_t seed);

// Multi-level variant of constant_approx: clusters sorted by size become the
// nodes of a tree built largest first, each cluster offering delta * |C|
// link slots.
ShortcutResult cluster_tree(const Graph& g, std::uint32_t k,
                            std::uint32_t delta, std::uint64_t seed);

// k rounds of: uniform budgeted u, BFS in the current augmented graph, link u
// to the farthest budgeted vertex that is not already adjacent to it.
// Requires a connected graph.
ShortcutResult greedy_two_sweep(const Graph& g, std::uint32_t k,
                                std::uint32_t delta, std::uint64_t seed);

// Uniform random non-edges subject to the budgets.
ShortcutResult random_baseline(const Graph& g, std::uint32_t k,
                               std::uint32_t delta, std::uint64_t seed);

// Shortcut plan for the path 0 - 1 - ... - n-1 (delta = 1): k' + 1 equal
// intervals, a three-vertex segment around each interval midpoint, segments
// joined into a full 3-tree. k' = min(k, floor(n / 3) - 1). Requires
// 1 <= k <= n / 2.
ShortcutResult path_construction(Vertex n, std::uint32_t k);

// Vertex order along g if g is a simple path (starting at the smaller-id end),
// nullopt otherwise.
std::optional<std::vector<Vertex>> path_order(const Graph& g);

enum class Algorithm { kLog, kConst, kTree, kGreedy2Sweep, kRandom, kPath };

std::optional<Algorithm> parse_algorithm(std::string_view name);
const char* to_string(Algorithm a);

struct AlgorithmParams {
  std::uint32_t k = 1;
  std::uint32_t delta = 1;
  std::uint32_t beta = 3;
  std::uint64_t seed = 0;
};

// Dispatch by name. k == 0 yields an empty plan for every algorithm. kPath
// requires g to be a path and maps the construction onto g's vertex order.
ShortcutResult run_algorithm(const Graph& g, Algorithm algo,
                             const AlgorithmParams& params);

}  // namespace bcmd
