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
#include <limits>
#include <span>
#include <vector>

#include "bcmd/graph.hpp"

namespace bcmd {

using Hop = std::uint32_t;
inline constexpr Hop kUnreachable = std::numeric_limits<Hop>::max();

// Hop distances from a source set. Unreachable vertices hold kUnreachable,
// which is a marker and never a number: `at()` refuses to hand it out.
class Distances {
 public:
  Distances() = default;
  explicit Distances(std::vector<Hop> dist) : dist_(std::move(dist)) {}

  std::size_t size() const { return dist_.size(); }
  bool reachable(Vertex v) const { return dist_[v] != kUnreachable; }
  Hop at(Vertex v) const;  // throws kInvalidArgument when unreachable
  std::span<const Hop> raw() const { return dist_; }

 private:
  std::vector<Hop> dist_;
};

// Extra adjacency layered over a Graph: the shortcut edges of a plan that is
// still being built. Removal is LIFO per vertex, which is all the exhaustive
// search needs.
class Overlay {
 public:
  explicit Overlay(Vertex n) : extra_(n) {}

  void add(Vertex u, Vertex v) {
    extra_[u].push_back(v);
    extra_[v].push_back(u);
  }
  void pop(Vertex u, Vertex v) {
    extra_[u].pop_back();
    extra_[v].pop_back();
  }
  std::span<const Vertex> neighbors(Vertex v) const { return extra_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

 private:
  std::vector<std::vector<Vertex>> extra_;
};

// Reusable buffers for repeated traversals on one graph size.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(Vertex n) : dist_(n, kUnreachable) { queue_.reserve(n); }

  // Multi-source BFS; overlay may be null. Returns the distance buffer, valid
  // until the next run.
  std::span<const Hop> run(const Graph& g, std::span<const Vertex> sources,
                           const Overlay* overlay = nullptr);

  // Vertices in the order they were reached by the last run.
  std::span<const Vertex> order() const { return queue_; }

 private:
  std::vector<Hop> dist_;
  std::vector<Vertex> queue_;
};

// Multi-source BFS. Throws kInvalidArgument on an empty or out-of-range
// source set.
Distances bfs(const Graph& g, std::span<const Vertex> sources);
Distances bfs(const Graph& g, Vertex source);

}  // namespace bcmd
