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
#include <vector>

#include "bcmd/bfs.hpp"
#include "bcmd/graph.hpp"

namespace bcmd {

// Farthest-first clustering.
//
// centers[i] is the i-th selected center; assign[v] is the index (into
// centers) of v's nearest center, ties going to the earliest-selected one, or
// kNoCenter when no center shares v's component (only possible when there are
// more components than centers).
// selection_distance[i] is d(centers[i], {centers[0..i-1]}) at the moment of
// selection (kUnreachable when the center was picked from a component with no
// earlier center; entry 0 is kUnreachable by convention).
inline constexpr std::uint32_t kNoCenter = static_cast<std::uint32_t>(-1);

struct Clustering {
  std::vector<Vertex> centers;
  std::vector<std::uint32_t> assign;
  std::vector<std::vector<Vertex>> members;  // per center, ascending
  std::vector<Hop> selection_distance;
  Hop radius = 0;        // max_v d(v, centers), finite part only
  bool is_short = false;  // fewer distinct vertices than requested centers
  bool unreached = false;  // some vertex has assign == kNoCenter

  std::size_t count() const { return centers.size(); }
};

// Picks a seeded uniform first center, then repeatedly the vertex farthest
// from the chosen set (unreachable beats any finite distance; smallest id on
// ties). Never repeats a center: when all vertices are centers it stops and
// sets is_short. O(count * m).
Clustering k_center(const Graph& g, std::uint32_t count, std::uint64_t seed);
// Same, with the first center given.
Clustering k_center_from(const Graph& g, std::uint32_t count, Vertex first);

// Disjoint beta-vertex sets, each inducing a connected subgraph.
struct SegmentFamily {
  std::vector<std::vector<Vertex>> segments;  // each ascending
  std::vector<Vertex> centers;                // one per segment
  std::vector<std::uint8_t> covered;          // per vertex
  std::uint32_t beta = 0;

  std::size_t size() const { return segments.size(); }
  bool empty() const { return segments.empty(); }
};

// Greedy maximal family: vertices are scanned in ascending id; from each
// uncovered start a DFS over uncovered vertices (neighbors ascending) collects
// beta vertices in preorder, which become a segment. A start whose uncovered
// component is smaller than beta can never succeed later, so each vertex is
// tried at most once. Segment center: minimum eccentricity inside the induced
// subgraph, smallest id on ties.
SegmentFamily maximal_segments(const Graph& g, std::uint32_t beta);

// True when no connected set of beta uncovered vertices remains.
bool is_maximal(const Graph& g, const SegmentFamily& family);

// Greedy farthest-segment selection of min(count, |family|) segment indices.
// The first is segment 0; each next one maximizes the set distance (minimum
// over cross pairs) to the selected ones, unreachable beating finite and the
// smallest index winning ties. Distances are kept in a per-segment table that
// one multi-source BFS per selected segment lowers by min. O(count * m).
std::vector<std::size_t> farthest_segments(const Graph& g,
                                           const SegmentFamily& family,
                                           std::size_t count);

}  // namespace bcmd
