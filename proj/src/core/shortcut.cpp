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

#include "bcmd/shortcut.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bcmd/bfs.hpp"
#include "bcmd/clustering.hpp"
#include "bcmd/components.hpp"
#include "bcmd/error.hpp"
#include "bcmd/generators.hpp"
#include "bcmd/rng.hpp"

namespace bcmd {

std::uint32_t TreeEmbedding::height() const {
  std::uint32_t h = 0;
  for (std::uint32_t d : depth) h = std::max(h, d);
  return h;
}

std::vector<std::size_t> TreeEmbedding::children_count() const {
  std::vector<std::size_t> out(parent.size(), 0);
  for (std::int64_t p : parent) {
    if (p >= 0) ++out[static_cast<std::size_t>(p)];
  }
  return out;
}

TreeEmbedding embed_full_tree(const Graph& g, std::span<const TreeNode> nodes,
                              ShortcutPlan& plan) {
  if (nodes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tree embedding needs at least one node");
  }
  for (const TreeNode& node : nodes) {
    if (node.vertices.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "tree node without vertices");
    }
  }
  const std::size_t total = nodes.size();
  if (plan.k_budget() - plan.size() < total - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "plan has no room for " + std::to_string(total - 1) + " tree edges");
  }

  TreeEmbedding tree;
  tree.parent.assign(total, -1);
  tree.depth.assign(total, 0);

  std::vector<std::size_t> frontier{0};
  std::size_t head = 0;
  std::size_t next = 1;

  enum class Wire { kAttached, kNoSlots, kBlocked };
  auto try_attach = [&](std::size_t parent_index, const TreeNode& child) {
    const TreeNode& parent = nodes[parent_index];
    bool has_slots = false;
    for (Vertex host : parent.vertices) {
      if (!plan.has_budget(host)) continue;
      has_slots = true;
      auto try_endpoint = [&](Vertex w) {
        if (!plan.can_add(g, host, w)) return false;
        plan.add(g, host, w);
        tree.wiring.push_back({host, w});
        tree.substituted.push_back(w != child.center);
        return true;
      };
      bool attached = try_endpoint(child.center);
      for (std::size_t i = 0; !attached && i < child.vertices.size(); ++i) {
        if (child.vertices[i] != child.center) attached = try_endpoint(child.vertices[i]);
      }
      if (attached) return Wire::kAttached;
    }
    return has_slots ? Wire::kBlocked : Wire::kNoSlots;
  };

  while (next < total) {
    if (head == frontier.size()) {
      throw Error(ErrorCode::kInfeasibleCapacity,
                  "no attached node has budget left for node " + std::to_string(next));
    }
    const TreeNode& child = nodes[next];
    const Wire at_head = try_attach(frontier[head], child);
    if (at_head == Wire::kNoSlots) {
      ++head;
      continue;
    }
    std::size_t host_node = frontier[head];
    if (at_head == Wire::kBlocked) {
      // The head node keeps its slots for later children; a later node in
      // breadth-first order takes this one.
      std::size_t j = head + 1;
      while (j < frontier.size() && try_attach(frontier[j], child) != Wire::kAttached) ++j;
      if (j == frontier.size()) {
        throw Error(ErrorCode::kWiringBlocked,
                    "every budgeted vertex of the attached nodes is adjacent to node " +
                        std::to_string(next) + " (center " + std::to_string(child.center) +
                        "); first blocked parent is node " + std::to_string(frontier[head]) +
                        " (center " + std::to_string(nodes[frontier[head]].center) + ")");
      }
      host_node = frontier[j];
    }
    tree.parent[next] = static_cast<std::int64_t>(host_node);
    tree.depth[next] = tree.depth[host_node] + 1;
    frontier.push_back(next);
    ++next;
  }
  return tree;
}

namespace {

void require_budgets(std::uint32_t k, std::uint32_t delta) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (delta < 1) throw Error(ErrorCode::kInvalidArgument, "delta must be >= 1");
}

void require_connected(const Graph& g, const char* algo) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, std::string(algo) + " needs a connected graph");
  }
}

std::size_t largest_cluster(const Clustering& cl) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cl.count(); ++i) {
    if (cl.members[i].size() > cl.members[best].size()) best = i;
  }
  return best;
}

}  // namespace

ShortcutResult log_approx(const Graph& g, std::uint32_t k, std::uint32_t delta,
                          std::uint32_t beta, std::uint64_t /*seed*/) {
  require_budgets(k, delta);
  if (beta < 3) throw Error(ErrorCode::kInvalidArgument, "beta must be >= 3");
  require_connected(g, "log_approx");

  ShortcutResult out{ShortcutPlan(g.num_vertices(), k, delta)};
  const SegmentFamily family = maximal_segments(g, beta);
  if (family.empty()) {
    out.notes |= kNoteEmptyFamily;
    out.warnings.push_back("no connected set of " + std::to_string(beta) +
                           " vertices exists; no shortcuts added");
    return out;
  }
  const auto picked = farthest_segments(g, family, std::size_t{k} + 1);
  std::vector<TreeNode> nodes;
  nodes.reserve(picked.size());
  for (std::size_t s : picked) {
    nodes.push_back({family.segments[s], family.centers[s]});
  }
  embed_full_tree(g, nodes, out.plan);
  return out;
}

ShortcutResult constant_approx(const Graph& g, std::uint32_t k,
                               std::uint32_t delta, std::uint64_t seed) {
  require_budgets(k, delta);
  ShortcutResult out{ShortcutPlan(g.num_vertices(), k, delta)};
  const Clustering cl = k_center(g, k + 1, seed);
  if (cl.is_short) {
    out.notes |= kNoteShortClusters;
    out.warnings.push_back("only " + std::to_string(cl.count()) +
                           " distinct cluster centers exist");
  }
  const std::size_t big = largest_cluster(cl);
  const auto& pool = cl.members[big];
  for (std::size_t i = 0; i < cl.count(); ++i) {
    if (i == big) continue;
    const Vertex c = cl.centers[i];
    const auto it = std::find_if(pool.begin(), pool.end(),
                                 [&](Vertex v) { return out.plan.can_add(g, c, v); });
    if (it == pool.end()) {
      throw Error(ErrorCode::kInfeasibleCapacity,
                  "largest cluster (center " + std::to_string(cl.centers[big]) +
                      ", size " + std::to_string(pool.size()) +
                      ") has no budgeted non-neighbor left for center " +
                      std::to_string(c))
          .with_vertex(c);
    }
    out.plan.add(g, c, *it);
  }
  return out;
}

ShortcutResult cluster_tree(const Graph& g, std::uint32_t k,
                            std::uint32_t delta, std::uint64_t seed) {
  require_budgets(k, delta);
  ShortcutResult out{ShortcutPlan(g.num_vertices(), k, delta)};
  const Clustering cl = k_center(g, k + 1, seed);
  if (cl.is_short) {
    out.notes |= kNoteShortClusters;
    out.warnings.push_back("only " + std::to_string(cl.count()) +
                           " distinct cluster centers exist");
  }

  std::uint64_t capacity = 0;
  for (const auto& m : cl.members) capacity += std::uint64_t{delta} * m.size();
  const std::uint64_t needed = 2 * (cl.count() - 1);
  if (capacity < needed) {
    throw Error(ErrorCode::kInfeasibleCapacity,
                "clusters offer " + std::to_string(capacity) + " link slots, a tree over " +
                    std::to_string(cl.count()) + " clusters needs " +
                    std::to_string(needed));
  }

  std::vector<std::size_t> order(cl.count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cl.members[a].size() > cl.members[b].size();
  });
  std::vector<TreeNode> nodes;
  nodes.reserve(order.size());
  for (std::size_t i : order) nodes.push_back({cl.members[i], cl.centers[i]});
  embed_full_tree(g, nodes, out.plan);
  return out;
}

ShortcutResult greedy_two_sweep(const Graph& g, std::uint32_t k,
                                std::uint32_t delta, std::uint64_t seed) {
  require_budgets(k, delta);
  require_connected(g, "greedy_two_sweep");
  const Vertex n = g.num_vertices();
  ShortcutResult out{ShortcutPlan(n, k, delta)};
  Overlay overlay(n);
  BfsWorkspace ws(n);
  Rng rng(seed);
  std::vector<Vertex> pool;

  for (std::uint32_t round = 0; round < k; ++round) {
    pool.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (out.plan.has_budget(v)) pool.push_back(v);
    }
    bool added = false;
    while (pool.size() >= 2 && !added) {
      const std::size_t idx = rng.below(pool.size());
      const Vertex u = pool[idx];
      const auto dist = ws.run(g, std::span<const Vertex>(&u, 1), &overlay);
      // Distance 1 means already adjacent in the augmented graph.
      Vertex best = u;
      Hop best_dist = 1;
      for (Vertex v : pool) {
        if (dist[v] > best_dist) {
          best = v;
          best_dist = dist[v];
        }
      }
      if (best != u) {
        out.plan.add(g, u, best);
        overlay.add(u, best);
        added = true;
      } else {
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
      }
    }
    if (!added) {
      out.notes |= kNoteEarlyStop;
      out.warnings.push_back("stopped after " + std::to_string(out.plan.size()) +
                             " shortcuts: no budgeted non-adjacent pair left");
      break;
    }
  }
  return out;
}

ShortcutResult random_baseline(const Graph& g, std::uint32_t k,
                               std::uint32_t delta, std::uint64_t seed) {
  require_budgets(k, delta);
  const Vertex n = g.num_vertices();
  ShortcutResult out{ShortcutPlan(n, k, delta)};
  const std::uint64_t pairs = std::uint64_t{n} * (n > 0 ? n - 1 : 0) / 2;
  const std::uint64_t non_edges = pairs - g.num_edges();
  auto exhausted = [&] {
    out.notes |= kNoteExhausted;
    out.warnings.push_back("random sampling exhausted after " +
                           std::to_string(out.plan.size()) + " shortcuts");
  };
  if (non_edges == 0) {
    exhausted();
    return out;
  }
  const double scale = std::max(1.0, static_cast<double>(n) * n / (2.0 * non_edges));
  const auto limit = static_cast<std::uint64_t>(std::ceil(100.0 * k * scale));

  Rng rng(seed);
  std::uint64_t rejections = 0;
  while (out.plan.size() < k) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (out.plan.can_add(g, u, v)) {
      out.plan.add(g, u, v);
      rejections = 0;
    } else if (++rejections >= limit) {
      exhausted();
      break;
    }
  }
  return out;
}

ShortcutResult path_construction(Vertex n, std::uint32_t k) {
  if (k < 1 || 2ull * k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "path construction needs 1 <= k <= n/2 (n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ")");
  }
  // Every interval needs at least three vertices.
  const std::uint32_t cap = n / 3 >= 1 ? n / 3 - 1 : 0;
  const std::uint32_t used = std::min(k, cap);
  ShortcutResult out{ShortcutPlan(n, k, 1)};
  if (used < k) {
    out.notes |= kNotePathCapped;
    out.warnings.push_back("path of " + std::to_string(n) + " vertices uses only " +
                           std::to_string(used) + " shortcuts");
  }
  if (used == 0) return out;

  const Graph path = gen_path(n);
  const std::uint32_t parts = used + 1;
  const Vertex base = n / parts;
  const Vertex extra = n % parts;
  std::vector<TreeNode> nodes;
  nodes.reserve(parts);
  Vertex start = 0;
  for (std::uint32_t i = 0; i < parts; ++i) {
    const Vertex size = base + (i < extra ? 1 : 0);
    const Vertex mid = start + (size - 1) / 2;
    nodes.push_back({{mid - 1, mid, mid + 1}, mid});
    start += size;
  }
  embed_full_tree(path, nodes, out.plan);
  return out;
}

std::optional<std::vector<Vertex>> path_order(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n == 0 || g.num_edges() != n - 1) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  Vertex start = n;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 2 || g.degree(v) == 0) return std::nullopt;
    if (g.degree(v) == 1 && start == n) start = v;
  }
  if (start == n) return std::nullopt;
  std::vector<Vertex> order{start};
  Vertex prev = start;
  Vertex cur = g.neighbors(start)[0];
  while (true) {
    order.push_back(cur);
    if (g.degree(cur) == 1) break;
    const auto nb = g.neighbors(cur);
    const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
    if (order.size() > n) return std::nullopt;
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "log") return Algorithm::kLog;
  if (name == "const") return Algorithm::kConst;
  if (name == "tree") return Algorithm::kTree;
  if (name == "greedy2sweep") return Algorithm::kGreedy2Sweep;
  if (name == "random") return Algorithm::kRandom;
  if (name == "path") return Algorithm::kPath;
  return std::nullopt;
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kLog: return "log";
    case Algorithm::kConst: return "const";
    case Algorithm::kTree: return "tree";
    case Algorithm::kGreedy2Sweep: return "greedy2sweep";
    case Algorithm::kRandom: return "random";
    case Algorithm::kPath: return "path";
  }
  return "?";
}

ShortcutResult run_algorithm(const Graph& g, Algorithm algo,
                             const AlgorithmParams& p) {
  if (p.delta < 1) throw Error(ErrorCode::kInvalidArgument, "delta must be >= 1");
  if (p.k == 0) return ShortcutResult{ShortcutPlan(g.num_vertices(), 0, p.delta)};
  switch (algo) {
    case Algorithm::kLog: return log_approx(g, p.k, p.delta, p.beta, p.seed);
    case Algorithm::kConst: return constant_approx(g, p.k, p.delta, p.seed);
    case Algorithm::kTree: return cluster_tree(g, p.k, p.delta, p.seed);
    case Algorithm::kGreedy2Sweep: return greedy_two_sweep(g, p.k, p.delta, p.seed);
    case Algorithm::kRandom: return random_baseline(g, p.k, p.delta, p.seed);
    case Algorithm::kPath: {
      const auto order = path_order(g);
      if (!order) {
        throw Error(ErrorCode::kInvalidArgument, "algorithm 'path' needs a path graph");
      }
      ShortcutResult on_path = path_construction(g.num_vertices(), p.k);
      ShortcutResult out{ShortcutPlan(g.num_vertices(), p.k, p.delta)};
      out.notes = on_path.notes;
      out.warnings = on_path.warnings;
      for (const Edge& e : on_path.plan.added()) {
        out.plan.add(g, (*order)[e.u], (*order)[e.v]);
      }
      return out;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

}  // namespace bcmd
