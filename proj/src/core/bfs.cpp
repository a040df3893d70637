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

#include "bcmd/bfs.hpp"

#include <algorithm>
#include <string>

#include "bcmd/error.hpp"

namespace bcmd {

Hop Distances::at(Vertex v) const {
  if (dist_[v] == kUnreachable) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " is unreachable");
  }
  return dist_[v];
}

bool Overlay::has_edge(Vertex u, Vertex v) const {
  const auto& nb = extra_[u];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::span<const Hop> BfsWorkspace::run(const Graph& g,
                                       std::span<const Vertex> sources,
                                       const Overlay* overlay) {
  // Only the vertices touched last time need resetting.
  for (Vertex v : queue_) dist_[v] = kUnreachable;
  queue_.clear();
  for (Vertex s : sources) {
    if (dist_[s] == kUnreachable) {
      dist_[s] = 0;
      queue_.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex v = queue_[head];
    const Hop next = dist_[v] + 1;
    for (Vertex w : g.neighbors(v)) {
      if (dist_[w] == kUnreachable) {
        dist_[w] = next;
        queue_.push_back(w);
      }
    }
    if (overlay != nullptr) {
      for (Vertex w : overlay->neighbors(v)) {
        if (dist_[w] == kUnreachable) {
          dist_[w] = next;
          queue_.push_back(w);
        }
      }
    }
  }
  return dist_;
}

Distances bfs(const Graph& g, std::span<const Vertex> sources) {
  if (sources.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "bfs needs at least one source");
  }
  for (Vertex s : sources) {
    if (s >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bfs source " + std::to_string(s) + " out of range");
    }
  }
  BfsWorkspace ws(g.num_vertices());
  const auto dist = ws.run(g, sources);
  return Distances(std::vector<Hop>(dist.begin(), dist.end()));
}

Distances bfs(const Graph& g, Vertex source) {
  return bfs(g, std::span<const Vertex>(&source, 1));
}

}  // namespace bcmd
