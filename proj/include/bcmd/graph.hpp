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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcmd {

using Vertex = std::uint32_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge normalized(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph in compressed row form. Neighbor lists
// are sorted ascending, so every traversal order is a function of the edge
// set alone.
class Graph {
 public:
  Graph() = default;

  // Builds the canonical graph on vertices 0..n-1. Duplicate pairs (in either
  // orientation) collapse to one edge; self-loops and out-of-range endpoints
  // throw kInvalidArgument.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // O(log deg) lookup.
  bool has_edge(Vertex u, Vertex v) const;

  // Every edge once, u < v, ascending.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

// A graph together with the external id of each vertex (the integer that
// appeared in the input file, or the vertex itself for generated graphs).
struct LabeledGraph {
  Graph graph;
  std::vector<std::uint64_t> labels;

  static LabeledGraph identity(Graph g);
  std::optional<Vertex> find(std::uint64_t label) const;
};

// Parses whitespace-separated "u v" lines. Lines starting with '#' or '%' and
// blank lines are skipped; columns after the second are ignored (KONECT files
// carry weights and timestamps there). Ids are compacted to 0..n-1 in order
// of first appearance. Throws kParse naming the offending line.
LabeledGraph load_edge_list(std::string_view text);
LabeledGraph load_edge_list_file(const std::string& path);

// One "label_u label_v" line per edge, in canonical edge order.
std::string to_edge_list(const LabeledGraph& g);

// {"n":int,"edges":[[u,v],...]}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view json);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace bcmd
