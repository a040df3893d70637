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

#include "bcmd/components.hpp"

#include <limits>

namespace bcmd {

namespace {
constexpr std::uint32_t kUnlabeled = std::numeric_limits<std::uint32_t>::max();
}

Components connected_components(const Graph& g) {
  const Vertex n = g.num_vertices();
  Components out;
  out.label.assign(n, kUnlabeled);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex start = 0; start < n; ++start) {
    if (out.label[start] != kUnlabeled) continue;
    const auto id = static_cast<std::uint32_t>(out.sizes.size());
    queue.clear();
    queue.push_back(start);
    out.label[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (out.label[w] == kUnlabeled) {
          out.label[w] = id;
          queue.push_back(w);
        }
      }
    }
    out.sizes.push_back(queue.size());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).count() <= 1;
}

namespace {

Subgraph extract(const Graph& g, const Components& cc, std::uint32_t which) {
  Subgraph out;
  std::vector<Vertex> new_id(g.num_vertices(), std::numeric_limits<Vertex>::max());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (cc.label[v] == which) {
      new_id[v] = static_cast<Vertex>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (cc.label[e.u] == which) edges.push_back({new_id[e.u], new_id[e.v]});
  }
  out.graph = Graph::from_edges(static_cast<Vertex>(out.to_parent.size()), edges);
  return out;
}

}  // namespace

Subgraph largest_component(const Graph& g) {
  const Components cc = connected_components(g);
  if (cc.count() == 0) return {};
  // Labels follow the smallest member, so the first maximum is the tie winner.
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < cc.count(); ++c) {
    if (cc.sizes[c] > cc.sizes[best]) best = c;
  }
  return extract(g, cc, best);
}

LabeledGraph largest_component(const LabeledGraph& g) {
  const Components cc = connected_components(g.graph);
  LabeledGraph out;
  if (cc.count() == 0) return out;
  // Ties go to the component holding the smallest external id.
  std::vector<std::uint64_t> min_label(cc.count(), std::numeric_limits<std::uint64_t>::max());
  for (Vertex v = 0; v < g.graph.num_vertices(); ++v) {
    auto& m = min_label[cc.label[v]];
    if (g.labels[v] < m) m = g.labels[v];
  }
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < cc.count(); ++c) {
    if (cc.sizes[c] > cc.sizes[best] ||
        (cc.sizes[c] == cc.sizes[best] && min_label[c] < min_label[best])) {
      best = c;
    }
  }
  Subgraph sub = extract(g.graph, cc, best);
  out.labels.reserve(sub.to_parent.size());
  for (Vertex v : sub.to_parent) out.labels.push_back(g.labels[v]);
  out.graph = std::move(sub.graph);
  return out;
}

}  // namespace bcmd
