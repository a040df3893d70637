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

#include "bcmd/graph.hpp"

namespace bcmd {

// Component labels are numbered by increasing smallest member vertex.
struct Components {
  std::vector<std::uint32_t> label;
  std::vector<std::size_t> sizes;

  std::size_t count() const { return sizes.size(); }
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new id -> id in the source graph
};

// Induced subgraph on the largest component; ties go to the component that
// contains the smallest vertex id. New ids keep the relative order of the old.
Subgraph largest_component(const Graph& g);
LabeledGraph largest_component(const LabeledGraph& g);

}  // namespace bcmd
