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

#include "bcmd/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bcmd/bfs.hpp"
#include "bcmd/error.hpp"

namespace bcmd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Objective values with "infinite" mapped to kUnreachable, which orders above
// every finite hop count.
using Score = std::uint64_t;

MaybeHop to_maybe(Score s) {
  if (s == kUnreachable) return std::nullopt;
  return static_cast<Hop>(s);
}

// Largest distance from `source` to a vertex accepted by `counts`.
template <typename Pred>
Score reach(const Graph& g, const Overlay* overlay, BfsWorkspace& ws,
            Vertex source, Pred counts) {
  const auto dist = ws.run(g, std::span<const Vertex>(&source, 1), overlay);
  Score worst = 0;
  for (Vertex v = 0; v < dist.size(); ++v) {
    if (!counts(v)) continue;
    if (dist[v] == kUnreachable) return kUnreachable;
    worst = std::max<Score>(worst, dist[v]);
  }
  return worst;
}

// Objective on g + overlay. Once the running value reaches `cutoff` the exact
// result no longer matters to the caller and the scan stops early.
Score score(const Graph& g, const Overlay* overlay, BfsWorkspace& ws,
            const Objective& objective, Score cutoff) {
  return std::visit(
      Overloaded{
          [&](const DiameterObjective&) {
            Score worst = 0;
            for (Vertex s = 0; s < g.num_vertices(); ++s) {
              worst = std::max(worst, reach(g, overlay, ws, s, [](Vertex) { return true; }));
              if (worst >= cutoff) break;
            }
            return worst;
          },
          [&](const SingleSourceObjective& ss) {
            return reach(g, overlay, ws, ss.source, [](Vertex) { return true; });
          },
          [&](const ColoredObjective& col) {
            const auto& part = col.partition;
            const auto side1 = part.members(1);
            const auto side2 = part.members(2);
            const bool from1 = side1.size() <= side2.size();
            const std::uint8_t target = from1 ? 2 : 1;
            Score worst = 0;
            for (Vertex s : from1 ? side1 : side2) {
              worst = std::max(worst, reach(g, overlay, ws, s, [&](Vertex v) {
                                 return part.side(v) == target;
                               }));
              if (worst >= cutoff) break;
            }
            return worst;
          },
      },
      objective);
}

void check_objective(const Graph& g, const Objective& objective) {
  if (const auto* ss = std::get_if<SingleSourceObjective>(&objective)) {
    if (ss->source >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidArgument, "single-source vertex out of range");
    }
  }
  if (const auto* col = std::get_if<ColoredObjective>(&objective)) {
    if (col->partition.num_vertices() != g.num_vertices()) {
      throw Error(ErrorCode::kInvalidArgument, "partition size does not match graph");
    }
  }
}

}  // namespace

MaybeHop evaluate(const Graph& g, const Objective& objective) {
  check_objective(g, objective);
  BfsWorkspace ws(g.num_vertices());
  return to_maybe(score(g, nullptr, ws, objective, std::numeric_limits<Score>::max()));
}

MaybeHop verify_plan(const Graph& g, const ShortcutPlan& plan,
                     const Objective& objective) {
  return evaluate(augment(g, plan), objective);
}

std::uint64_t oracle_candidate_count(const Graph& g, std::uint32_t k) {
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t non_edges = n * (n > 0 ? n - 1 : 0) / 2 - g.num_edges();
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 binom = 1;
  unsigned __int128 total = 1;
  for (std::uint64_t j = 1; j <= k && j <= non_edges; ++j) {
    binom = binom * (non_edges - j + 1) / j;
    total += binom;
    if (total > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(total);
}

OracleResult solve_exact(const Graph& g, std::uint32_t k, std::uint32_t delta,
                         const Objective& objective, std::uint64_t cap) {
  check_objective(g, objective);
  const std::uint64_t candidates = oracle_candidate_count(g, k);
  if (candidates > cap) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "exhaustive search would visit up to " + std::to_string(candidates) +
                    " edge sets (cap " + std::to_string(cap) + ")");
  }

  const Vertex n = g.num_vertices();
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) non_edges.push_back({u, v});
    }
  }

  Overlay overlay(n);
  BfsWorkspace ws(n);
  std::vector<std::uint32_t> usage(n, 0);
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> witness;
  std::uint64_t explored = 1;
  Score best = score(g, &overlay, ws, objective, std::numeric_limits<Score>::max());

  // Depth-first over index-increasing sequences: lexicographic subset order.
  auto extend = [&](auto& self, std::size_t from) -> void {
    for (std::size_t i = from; i < non_edges.size(); ++i) {
      const Edge e = non_edges[i];
      if (usage[e.u] >= delta || usage[e.v] >= delta) continue;
      ++usage[e.u];
      ++usage[e.v];
      overlay.add(e.u, e.v);
      chosen.push_back(i);
      ++explored;
      const Score s = score(g, &overlay, ws, objective, best);
      if (s < best) {
        best = s;
        witness = chosen;
      }
      if (chosen.size() < k) self(self, i + 1);
      chosen.pop_back();
      overlay.pop(e.u, e.v);
      --usage[e.u];
      --usage[e.v];
    }
  };
  if (k > 0) extend(extend, 0);

  std::vector<Edge> pairs;
  for (std::size_t i : witness) pairs.push_back(non_edges[i]);
  OracleResult out{to_maybe(best), ShortcutPlan::from_pairs(n, k, delta, pairs), explored};
  out.plan.validate(g);
  return out;
}

}  // namespace bcmd
