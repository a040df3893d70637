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

#include "bcmd/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "bcmd/error.hpp"
#include "bcmd/rng.hpp"

namespace bcmd {

Graph gen_path(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

Graph gen_cycle(Vertex n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "a simple cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, n - 1});
  return Graph::from_edges(n, edges);
}

namespace {

std::vector<Edge> random_tree_edges(Vertex n, Rng& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<Vertex> code(n - 2);
  for (Vertex& c : code) c = static_cast<Vertex>(rng.below(n));

  // Linear-time Pruefer decoding.
  std::vector<Vertex> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex c : code) {
    edges.push_back(Edge::normalized(leaf, c));
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back(Edge::normalized(leaf, n - 1));
  return edges;
}

}  // namespace

Graph gen_random_tree(Vertex n, std::uint64_t seed) {
  Rng rng(seed);
  return Graph::from_edges(n, random_tree_edges(n, rng));
}

Graph gen_random_connected(Vertex n, std::uint64_t m, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  const std::uint64_t max_edges = std::uint64_t{n} * (n - 1) / 2;
  if (m > max_edges) {
    throw Error(ErrorCode::kInvalidArgument,
                "m=" + std::to_string(m) + " exceeds n(n-1)/2=" + std::to_string(max_edges));
  }
  if (m + 1 < n) {
    throw Error(ErrorCode::kInvalidArgument, "a connected graph needs m >= n-1");
  }
  Rng rng(seed);
  std::vector<Edge> edges = random_tree_edges(n, rng);
  const std::uint64_t extra = m - edges.size();
  const std::uint64_t available = max_edges - edges.size();

  auto key = [n](Edge e) { return std::uint64_t{e.u} * n + e.v; };
  std::unordered_set<std::uint64_t> present;
  present.reserve(static_cast<std::size_t>(m) * 2);
  for (const Edge& e : edges) present.insert(key(e));

  if (extra * 2 > available) {
    // Dense request: shuffle the full complement and take a prefix.
    std::vector<Edge> pool;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!present.count(key({u, v}))) pool.push_back({u, v});
      }
    }
    for (std::uint64_t i = 0; i < extra; ++i) {
      std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
      edges.push_back(pool[i]);
    }
  } else {
    while (edges.size() < m) {
      const auto u = static_cast<Vertex>(rng.below(n));
      const auto v = static_cast<Vertex>(rng.below(n));
      if (u == v) continue;
      const Edge e = Edge::normalized(u, v);
      if (present.insert(key(e)).second) edges.push_back(e);
    }
  }
  return Graph::from_edges(n, edges);
}

void SetCoverInstance::validate() const {
  if (sets.empty()) throw Error(ErrorCode::kInvalidArgument, "set cover instance has no sets");
  if (num_items == 0) throw Error(ErrorCode::kInvalidArgument, "set cover instance has no items");
  std::vector<std::uint8_t> hit(num_items, 0);
  for (const auto& s : sets) {
    for (std::uint32_t item : s) {
      if (item >= num_items) {
        throw Error(ErrorCode::kInvalidArgument, "item " + std::to_string(item) + " out of range");
      }
      hit[item] = 1;
    }
  }
  for (std::uint32_t j = 0; j < num_items; ++j) {
    if (!hit[j]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "item " + std::to_string(j) + " is in no set");
    }
  }
}

bool SetCoverInstance::meets_reduction_preconditions() const {
  return num_items > k && num_sets() > k;
}

bool SetCoverInstance::has_cover_within_budget() const {
  const std::uint32_t p = num_sets();
  if (p >= 32) throw Error(ErrorCode::kInvalidArgument, "too many sets to enumerate covers");
  std::vector<std::uint64_t> masks;
  for (const auto& s : sets) {
    std::uint64_t m = 0;
    for (std::uint32_t item : s) m |= std::uint64_t{1} << item;
    masks.push_back(m);
  }
  const std::uint64_t all =
      num_items >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_items) - 1;
  for (std::uint32_t choice = 0; choice < (1u << p); ++choice) {
    if (static_cast<std::uint32_t>(__builtin_popcount(choice)) > k) continue;
    std::uint64_t covered = 0;
    for (std::uint32_t i = 0; i < p; ++i) {
      if (choice & (1u << i)) covered |= masks[i];
    }
    if (covered == all) return true;
  }
  return false;
}

SetCoverInstance SetCoverInstance::parse(const std::string& text, std::uint32_t k) {
  std::vector<std::vector<std::uint64_t>> raw;
  std::map<std::uint64_t, std::uint32_t> items;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<std::uint64_t> set;
    std::stringstream members(group);
    std::string tok;
    while (std::getline(members, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok.empty()) continue;
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(ErrorCode::kParse, "bad set item '" + tok + "'");
      }
      set.push_back(value);
      items.emplace(value, 0);
    }
    raw.push_back(std::move(set));
  }
  std::uint32_t next = 0;
  for (auto& [label, id] : items) id = next++;

  SetCoverInstance inst;
  inst.num_items = next;
  inst.k = k;
  for (const auto& set : raw) {
    std::vector<std::uint32_t> mapped;
    for (std::uint64_t label : set) mapped.push_back(items.at(label));
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    inst.sets.push_back(std::move(mapped));
  }
  inst.validate();
  return inst;
}

std::string GadgetRoles::to_json() const {
  nlohmann::json j;
  j["s"] = s;
  j["u"] = u;
  j["a"] = a;
  j["b"] = b;
  j["x"] = x;
  return j.dump();
}

Gadget gen_setcover_gadget(const SetCoverInstance& inst) {
  inst.validate();
  const std::uint32_t p = inst.num_sets();
  const std::uint32_t l = inst.num_items;
  const std::uint32_t xs = inst.k + 1;

  Gadget out;
  auto& r = out.roles;
  for (std::uint32_t i = 0; i < p; ++i) r.s.push_back(i);
  for (std::uint32_t j = 0; j < l; ++j) r.u.push_back(p + j);
  r.a = p + l;
  r.b = p + l + 1;
  for (std::uint32_t t = 0; t < xs; ++t) r.x.push_back(p + l + 2 + t);

  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t i2 = i + 1; i2 < p; ++i2) edges.push_back({r.s[i], r.s[i2]});
    for (std::uint32_t item : inst.sets[i]) edges.push_back({r.s[i], r.u[item]});
    edges.push_back({r.s[i], r.a});
  }
  edges.push_back({r.a, r.b});
  for (std::uint32_t t = 0; t < xs; ++t) {
    edges.push_back({r.b, r.x[t]});
    for (std::uint32_t t2 = t + 1; t2 < xs; ++t2) edges.push_back({r.x[t], r.x[t2]});
  }
  out.graph = Graph::from_edges(p + l + 2 + xs, edges);
  return out;
}

}  // namespace bcmd
