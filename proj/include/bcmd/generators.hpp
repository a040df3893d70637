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
#include <string>
#include <vector>

#include "bcmd/graph.hpp"

namespace bcmd {

Graph gen_path(Vertex n);
Graph gen_cycle(Vertex n);  // n >= 3
// Uniform labeled tree (Pruefer decoding).
Graph gen_random_tree(Vertex n, std::uint64_t seed);
// Uniform random spanning tree plus m - (n - 1) uniformly chosen extra
// non-edges. Requires n - 1 <= m <= n(n-1)/2.
Graph gen_random_connected(Vertex n, std::uint64_t m, std::uint64_t seed);

struct SetCoverInstance {
  std::uint32_t num_items = 0;            // items are 0..num_items-1
  std::vector<std::vector<std::uint32_t>> sets;
  std::uint32_t k = 0;                    // cover budget

  std::uint32_t num_sets() const { return static_cast<std::uint32_t>(sets.size()); }
  // Throws kInvalidArgument if a set names an unknown item or an item is in
  // no set.
  void validate() const;
  // l > k and p > k.
  bool meets_reduction_preconditions() const;
  // Exhaustive check for a cover with at most k sets.
  bool has_cover_within_budget() const;

  // Parses "1,2;2,3": sets separated by ';', items by ','. Item labels are
  // arbitrary non-negative integers, mapped to 0.. in ascending order.
  static SetCoverInstance parse(const std::string& sets, std::uint32_t k);
};

// Vertex roles of the reduction graph, numbered s-block, u-block, a, b,
// x-block.
struct GadgetRoles {
  std::vector<Vertex> s;
  std::vector<Vertex> u;
  Vertex a = 0;
  Vertex b = 0;
  std::vector<Vertex> x;

  std::string to_json() const;  // {"s":[...],"u":[...],"a":id,"b":id,"x":[...]}
};

struct Gadget {
  Graph graph;
  GadgetRoles roles;
};

// Set vertices form a clique and touch their items; a touches every set
// vertex and b; b touches the (k+1)-clique of x vertices.
Gadget gen_setcover_gadget(const SetCoverInstance& instance);

}  // namespace bcmd
