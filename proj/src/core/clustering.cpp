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

#include "bcmd/clustering.hpp"

#include <algorithm>
#include <string>

#include "bcmd/error.hpp"
#include "bcmd/rng.hpp"

namespace bcmd {

namespace {

// Lowers dist[] to d(source, .) wherever that is smaller. A vertex whose
// distance does not improve cannot improve anything behind it either, so the
// search stops there.
void relax_from(const Graph& g, Vertex source, std::vector<Hop>& dist,
                std::vector<Vertex>& queue) {
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const Hop next = dist[v] + 1;
    for (Vertex w : g.neighbors(v)) {
      if (next < dist[w]) {
        dist[w] = next;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

Clustering k_center_from(const Graph& g, std::uint32_t count, Vertex first) {
  const Vertex n = g.num_vertices();
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "k_center needs count >= 1");
  if (first >= n) {
    throw Error(ErrorCode::kInvalidArgument, "first center out of range");
  }

  Clustering out;
  std::vector<Hop> dist(n, kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);

  out.centers.push_back(first);
  out.selection_distance.push_back(kUnreachable);
  relax_from(g, first, dist, queue);

  while (out.centers.size() < count) {
    Vertex pick = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (dist[v] > dist[pick]) pick = v;
    }
    if (dist[pick] == 0) break;  // every vertex is already a center
    out.centers.push_back(pick);
    out.selection_distance.push_back(dist[pick]);
    relax_from(g, pick, dist, queue);
  }
  out.is_short = out.centers.size() < count;

  // Multi-source BFS seeded in selection order. Each BFS level stays sorted
  // by assigned center index, so a vertex inherits the earliest center among
  // those at minimum distance.
  out.assign.assign(n, kNoCenter);
  std::vector<Hop> level(n, kUnreachable);
  queue.clear();
  for (std::uint32_t i = 0; i < out.centers.size(); ++i) {
    const Vertex c = out.centers[i];
    out.assign[c] = i;
    level[c] = 0;
    queue.push_back(c);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (level[w] == kUnreachable) {
        level[w] = level[v] + 1;
        out.assign[w] = out.assign[v];
        queue.push_back(w);
      }
    }
  }

  out.members.resize(out.centers.size());
  for (Vertex v = 0; v < n; ++v) {
    if (out.assign[v] == kNoCenter) {
      out.unreached = true;
      continue;
    }
    out.members[out.assign[v]].push_back(v);
    out.radius = std::max(out.radius, level[v]);
  }
  return out;
}

Clustering k_center(const Graph& g, std::uint32_t count, std::uint64_t seed) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "k_center on an empty graph");
  }
  Rng rng(seed);
  return k_center_from(g, count, static_cast<Vertex>(rng.below(g.num_vertices())));
}

namespace {

// Vertex of minimum eccentricity inside G[segment].
Vertex segment_center(const Graph& g, const std::vector<Vertex>& segment) {
  const std::size_t size = segment.size();
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(segment.begin(), segment.end(), v) - segment.begin());
  };
  auto inside = [&](Vertex v) {
    const std::size_t i = local(v);
    return i < size && segment[i] == v;
  };

  Vertex best = segment.front();
  Hop best_ecc = kUnreachable;
  std::vector<Hop> dist(size);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < size; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.assign(1, s);
    dist[s] = 0;
    Hop ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      ecc = std::max(ecc, dist[x]);
      for (Vertex w : g.neighbors(segment[x])) {
        if (!inside(w)) continue;
        const std::size_t y = local(w);
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best = segment[s];
    }
  }
  return best;
}

}  // namespace

SegmentFamily maximal_segments(const Graph& g, std::uint32_t beta) {
  if (beta < 1) throw Error(ErrorCode::kInvalidArgument, "beta must be >= 1");
  const Vertex n = g.num_vertices();
  SegmentFamily family;
  family.beta = beta;
  family.covered.assign(n, 0);

  std::vector<std::uint8_t> dead(n, 0);      // uncovered component < beta
  std::vector<std::uint32_t> stamp(n, 0);    // DFS visit marks per attempt
  std::uint32_t attempt = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack;
  std::vector<Vertex> grown;

  for (Vertex start = 0; start < n; ++start) {
    if (family.covered[start] || dead[start]) continue;
    ++attempt;
    grown.assign(1, start);
    stamp[start] = attempt;
    stack.assign(1, {start, 0});
    while (!stack.empty() && grown.size() < beta) {
      auto& [x, idx] = stack.back();
      const auto nb = g.neighbors(x);
      bool descended = false;
      while (idx < nb.size()) {
        const Vertex w = nb[idx++];
        if (!family.covered[w] && stamp[w] != attempt) {
          stamp[w] = attempt;
          grown.push_back(w);
          stack.emplace_back(w, 0);
          descended = true;
          break;
        }
      }
      if (!descended) stack.pop_back();
    }
    if (grown.size() < beta) {
      // The DFS exhausted the whole uncovered component.
      for (Vertex v : grown) dead[v] = 1;
      continue;
    }
    std::sort(grown.begin(), grown.end());
    for (Vertex v : grown) family.covered[v] = 1;
    family.centers.push_back(segment_center(g, grown));
    family.segments.push_back(grown);
  }
  return family;
}

bool is_maximal(const Graph& g, const SegmentFamily& family) {
  const Vertex n = g.num_vertices();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (family.covered[s] || seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!family.covered[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    if (queue.size() >= family.beta) return false;
  }
  return true;
}

std::vector<std::size_t> farthest_segments(const Graph& g,
                                           const SegmentFamily& family,
                                           std::size_t count) {
  if (family.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "farthest_segments on an empty family");
  }
  const std::size_t total = family.size();
  const std::size_t want = std::min(count, total);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(g.num_vertices(), kNone);
  for (std::size_t s = 0; s < total; ++s) {
    for (Vertex v : family.segments[s]) owner[v] = s;
  }

  std::vector<Hop> to_selected(total, kUnreachable);
  std::vector<std::uint8_t> selected(total, 0);
  std::vector<std::size_t> order;
  order.reserve(want);
  BfsWorkspace ws(g.num_vertices());

  std::size_t pick = 0;
  while (order.size() < want) {
    order.push_back(pick);
    selected[pick] = 1;
    to_selected[pick] = 0;
    if (order.size() == want) break;

    const auto dist = ws.run(g, family.segments[pick]);
    for (Vertex v : ws.order()) {
      const std::size_t s = owner[v];
      if (s != kNone && dist[v] < to_selected[s]) to_selected[s] = dist[v];
    }

    pick = kNone;
    for (std::size_t s = 0; s < total; ++s) {
      if (selected[s]) continue;
      if (pick == kNone || to_selected[s] > to_selected[pick]) pick = s;
    }
  }
  return order;
}

}  // namespace bcmd
