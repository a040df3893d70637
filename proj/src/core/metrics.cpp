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

#include "bcmd/metrics.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "bcmd/error.hpp"
#include "bcmd/rng.hpp"

namespace bcmd {

ColorPartition::ColorPartition(std::vector<std::uint8_t> side)
    : side_(std::move(side)) {
  bool has1 = false;
  bool has2 = false;
  for (std::uint8_t s : side_) {
    if (s == 1) {
      has1 = true;
    } else if (s == 2) {
      has2 = true;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "partition labels must be 1 or 2");
    }
  }
  if (!has1 || !has2) {
    throw Error(ErrorCode::kInvalidArgument, "both partition sides must be nonempty");
  }
}

ColorPartition ColorPartition::from_side1(Vertex n, const std::vector<Vertex>& first) {
  std::vector<std::uint8_t> side(n, 2);
  for (Vertex v : first) {
    if (v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "partition vertex " + std::to_string(v) + " out of range");
    }
    side[v] = 1;
  }
  return ColorPartition(std::move(side));
}

std::vector<Vertex> ColorPartition::members(std::uint8_t which) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < side_.size(); ++v) {
    if (side_[v] == which) out.push_back(v);
  }
  return out;
}

namespace {

// Farthest reachable vertex (smallest id on ties) and whether every vertex
// was reached.
struct Sweep {
  Vertex far = 0;
  Hop dist = 0;
  bool complete = true;
  Vertex first_unreached = 0;
};

Sweep farthest(std::span<const Hop> dist) {
  Sweep s;
  bool seen_unreached = false;
  for (Vertex v = 0; v < dist.size(); ++v) {
    if (dist[v] == kUnreachable) {
      if (!seen_unreached) {
        s.first_unreached = v;
        seen_unreached = true;
      }
      s.complete = false;
    } else if (dist[v] > s.dist) {
      s.dist = dist[v];
      s.far = v;
    }
  }
  return s;
}

// Per-source outcome folded into the diameter: an unreachable pair outranks
// any finite distance.
struct Candidate {
  bool infinite = false;
  Hop value = 0;
  Vertex u = 0;
  Vertex v = 0;
  bool valid = false;

  // Larger value wins, then the smaller (u, v).
  bool better_than(const Candidate& o) const {
    if (!o.valid) return valid;
    if (!valid) return false;
    if (infinite != o.infinite) return infinite;
    if (value != o.value) return value > o.value;
    return std::pair(u, v) < std::pair(o.u, o.v);
  }
};

Candidate scan_sources(const Graph& g, Vertex begin, Vertex end) {
  BfsWorkspace ws(g.num_vertices());
  Candidate best;
  for (Vertex s = begin; s < end; ++s) {
    const Sweep sw = farthest(ws.run(g, std::span<const Vertex>(&s, 1)));
    Candidate c;
    c.valid = true;
    c.u = s;
    if (!sw.complete) {
      c.infinite = true;
      c.v = sw.first_unreached;
    } else {
      c.value = sw.dist;
      c.v = sw.far;
    }
    if (c.better_than(best)) best = c;
    if (best.infinite) break;  // nothing later can beat (s, first unreached)
  }
  return best;
}

}  // namespace

DiameterResult exact_diameter(const Graph& g) {
  const Vertex n = g.num_vertices();
  DiameterResult out;
  out.exact = true;
  if (n == 0) {
    out.value = 0;
    return out;
  }

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (static_cast<std::uint64_t>(n) * (g.num_edges() + n) < (1u << 22)) workers = 1;
  workers = std::min<unsigned>(workers, n);

  Candidate best;
  if (workers == 1) {
    best = scan_sources(g, 0, n);
  } else {
    std::vector<Candidate> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const Vertex lo = static_cast<Vertex>(std::uint64_t{n} * w / workers);
      const Vertex hi = static_cast<Vertex>(std::uint64_t{n} * (w + 1) / workers);
      pool.emplace_back([&, w, lo, hi] { partial[w] = scan_sources(g, lo, hi); });
    }
    for (auto& t : pool) t.join();
    for (const Candidate& c : partial) {
      if (c.better_than(best)) best = c;
    }
  }

  out.u = best.u;
  out.v = best.v;
  if (!best.infinite) out.value = best.value;
  return out;
}

DiameterResult two_sweep(const Graph& g, std::uint64_t seed) {
  const Vertex n = g.num_vertices();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "two_sweep on an empty graph");
  }
  Rng rng(seed);
  const auto r = static_cast<Vertex>(rng.below(n));
  BfsWorkspace ws(n);
  const Sweep first = farthest(ws.run(g, std::span<const Vertex>(&r, 1)));
  if (!first.complete) {
    throw Error(ErrorCode::kDisconnected, "two_sweep needs a connected graph");
  }
  const Vertex u = first.far;
  const Sweep second = farthest(ws.run(g, std::span<const Vertex>(&u, 1)));
  DiameterResult out;
  out.value = second.dist;
  out.u = u;
  out.v = second.far;
  out.exact = false;
  return out;
}

MaybeHop eccentricity(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
  }
  BfsWorkspace ws(g.num_vertices());
  const Sweep s = farthest(ws.run(g, std::span<const Vertex>(&v, 1)));
  if (!s.complete) return std::nullopt;
  return s.dist;
}

MaybeHop colored_diameter(const Graph& g, const ColorPartition& partition) {
  if (partition.num_vertices() != g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "partition size does not match graph");
  }
  std::vector<Vertex> side1 = partition.members(1);
  std::vector<Vertex> side2 = partition.members(2);
  const bool from1 = side1.size() <= side2.size();
  const auto& sources = from1 ? side1 : side2;
  const std::uint8_t target = from1 ? 2 : 1;

  BfsWorkspace ws(g.num_vertices());
  Hop best = 0;
  for (Vertex s : sources) {
    const auto dist = ws.run(g, std::span<const Vertex>(&s, 1));
    for (Vertex v = 0; v < dist.size(); ++v) {
      if (partition.side(v) != target) continue;
      if (dist[v] == kUnreachable) return std::nullopt;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

}  // namespace bcmd
