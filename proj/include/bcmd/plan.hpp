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
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bcmd/graph.hpp"

namespace bcmd {

// A set of shortcut edges under an edge budget k and a per-vertex degree
// increase budget delta.
//
// Plans grown through `add` hold the invariants at every step: at most k
// pairs, every pair a non-edge of the base graph and distinct from the
// others, and usage(v) <= delta. Plans assembled with `from_pairs` (e.g. read
// from a file) are unchecked until `validate` is called.
class ShortcutPlan {
 public:
  ShortcutPlan(Vertex n, std::uint32_t k_budget, std::uint32_t delta_budget);

  static ShortcutPlan from_pairs(Vertex n, std::uint32_t k_budget,
                                 std::uint32_t delta_budget,
                                 std::span<const Edge> pairs);

  // True when {u, v} can be added without breaking an invariant.
  bool can_add(const Graph& g, Vertex u, Vertex v) const;
  // Adds {u, v} or throws (kBudgetViolation, kNotANonEdge, kInvalidArgument).
  void add(const Graph& g, Vertex u, Vertex v);

  // Re-derives every invariant from scratch against g.
  void validate(const Graph& g) const;

  Vertex num_vertices() const { return static_cast<Vertex>(usage_.size()); }
  std::uint32_t k_budget() const { return k_budget_; }
  std::uint32_t delta_budget() const { return delta_budget_; }
  std::size_t size() const { return added_.size(); }
  bool empty() const { return added_.empty(); }
  // Pairs in insertion order, each normalized u < v.
  std::span<const Edge> added() const { return added_; }
  std::uint32_t usage(Vertex v) const { return usage_[v]; }
  bool has_budget(Vertex v) const { return usage_[v] < delta_budget_; }
  bool contains(Vertex u, Vertex v) const;

  bool is_matching() const;

 private:
  std::uint64_t key(Edge e) const {
    return static_cast<std::uint64_t>(e.u) * usage_.size() + e.v;
  }

  std::uint32_t k_budget_;
  std::uint32_t delta_budget_;
  std::vector<Edge> added_;
  std::vector<std::uint32_t> usage_;
  std::unordered_set<std::uint64_t> index_;
};

// G' = (V, E + plan). Validates the plan first; g is left untouched.
Graph augment(const Graph& g, const ShortcutPlan& plan);

// {"k":int,"delta":int,"added":[[u,v],...]} with endpoints written as labels.
std::string plan_to_json(const ShortcutPlan& plan, const LabeledGraph& g);
// Inverse of plan_to_json; labels are mapped back through g and the result is
// validated against g.graph.
ShortcutPlan plan_from_json(std::string_view json, const LabeledGraph& g);

}  // namespace bcmd
