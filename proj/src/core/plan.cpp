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

#include "bcmd/plan.hpp"

#include <string>
#include <unordered_map>

#include <json.hpp>

#include "bcmd/error.hpp"

namespace bcmd {

namespace {

std::string pair_str(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

ShortcutPlan::ShortcutPlan(Vertex n, std::uint32_t k_budget,
                           std::uint32_t delta_budget)
    : k_budget_(k_budget), delta_budget_(delta_budget), usage_(n, 0) {}

ShortcutPlan ShortcutPlan::from_pairs(Vertex n, std::uint32_t k_budget,
                                      std::uint32_t delta_budget,
                                      std::span<const Edge> pairs) {
  ShortcutPlan plan(n, k_budget, delta_budget);
  for (const Edge& p : pairs) {
    if (p.u >= n || p.v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "plan pair " + pair_str(p) + " out of range");
    }
    const Edge e = Edge::normalized(p.u, p.v);
    plan.added_.push_back(e);
    ++plan.usage_[e.u];
    if (e.v != e.u) ++plan.usage_[e.v];
    plan.index_.insert(plan.key(e));
  }
  return plan;
}

bool ShortcutPlan::contains(Vertex u, Vertex v) const {
  return index_.count(key(Edge::normalized(u, v))) != 0;
}

bool ShortcutPlan::can_add(const Graph& g, Vertex u, Vertex v) const {
  return u != v && u < usage_.size() && v < usage_.size() &&
         added_.size() < k_budget_ && usage_[u] < delta_budget_ &&
         usage_[v] < delta_budget_ && !g.has_edge(u, v) && !contains(u, v);
}

void ShortcutPlan::add(const Graph& g, Vertex u, Vertex v) {
  const Edge e = Edge::normalized(u, v);
  if (u == v || e.v >= usage_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid shortcut " + pair_str(e));
  }
  if (added_.size() >= k_budget_) {
    throw Error(ErrorCode::kBudgetViolation,
                "edge budget k=" + std::to_string(k_budget_) + " exhausted");
  }
  for (Vertex w : {e.u, e.v}) {
    if (usage_[w] >= delta_budget_) {
      throw Error(ErrorCode::kBudgetViolation,
                  "budget violation at vertex " + std::to_string(w))
          .with_vertex(w);
    }
  }
  if (g.has_edge(u, v)) {
    throw Error(ErrorCode::kNotANonEdge, pair_str(e) + " is already an edge");
  }
  if (contains(u, v)) {
    throw Error(ErrorCode::kInvalidArgument, pair_str(e) + " added twice");
  }
  added_.push_back(e);
  ++usage_[e.u];
  ++usage_[e.v];
  index_.insert(key(e));
}

void ShortcutPlan::validate(const Graph& g) const {
  if (usage_.size() != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument,
                "plan is for " + std::to_string(usage_.size()) +
                    " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  if (added_.size() > k_budget_) {
    throw Error(ErrorCode::kBudgetViolation,
                std::to_string(added_.size()) + " shortcuts exceed k=" +
                    std::to_string(k_budget_));
  }
  std::vector<std::uint32_t> usage(usage_.size(), 0);
  std::unordered_set<std::uint64_t> seen;
  for (const Edge& e : added_) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument, "self-loop shortcut " + pair_str(e));
    }
    if (g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kNotANonEdge, pair_str(e) + " is already an edge");
    }
    if (!seen.insert(key(e)).second) {
      throw Error(ErrorCode::kInvalidArgument, pair_str(e) + " added twice");
    }
    ++usage[e.u];
    ++usage[e.v];
  }
  for (Vertex v = 0; v < usage.size(); ++v) {
    if (usage[v] != usage_[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "usage bookkeeping mismatch at vertex " + std::to_string(v));
    }
    if (usage[v] > delta_budget_) {
      throw Error(ErrorCode::kBudgetViolation,
                  "budget violation at vertex " + std::to_string(v))
          .with_vertex(v);
    }
  }
}

bool ShortcutPlan::is_matching() const {
  for (std::uint32_t u : usage_) {
    if (u > 1) return false;
  }
  return true;
}

Graph augment(const Graph& g, const ShortcutPlan& plan) {
  plan.validate(g);
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), plan.added().begin(), plan.added().end());
  return Graph::from_edges(g.num_vertices(), edges);
}

std::string plan_to_json(const ShortcutPlan& plan, const LabeledGraph& g) {
  nlohmann::json added = nlohmann::json::array();
  for (const Edge& e : plan.added()) {
    added.push_back({g.labels[e.u], g.labels[e.v]});
  }
  nlohmann::json j;
  j["k"] = plan.k_budget();
  j["delta"] = plan.delta_budget();
  j["added"] = std::move(added);
  return j.dump();
}

ShortcutPlan plan_from_json(std::string_view json, const LabeledGraph& g) {
  std::unordered_map<std::uint64_t, Vertex> ids;
  for (Vertex v = 0; v < g.labels.size(); ++v) ids.emplace(g.labels[v], v);
  auto lookup = [&](std::uint64_t label) {
    const auto it = ids.find(label);
    if (it == ids.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "plan names unknown vertex " + std::to_string(label));
    }
    return it->second;
  };
  try {
    const auto j = nlohmann::json::parse(json);
    std::vector<Edge> pairs;
    for (const auto& e : j.at("added")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kParse, "added entries must be [u,v] pairs");
      }
      pairs.push_back({lookup(e[0].get<std::uint64_t>()),
                       lookup(e[1].get<std::uint64_t>())});
    }
    ShortcutPlan plan = ShortcutPlan::from_pairs(
        g.graph.num_vertices(), j.at("k").get<std::uint32_t>(),
        j.at("delta").get<std::uint32_t>(), pairs);
    plan.validate(g.graph);
    return plan;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kParse, std::string("plan json: ") + ex.what());
  }
}

}  // namespace bcmd
