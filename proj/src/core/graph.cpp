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

#include "bcmd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "bcmd/error.hpp"

namespace bcmd {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kDisconnected: return "graph is disconnected";
    case ErrorCode::kBudgetViolation: return "budget violation";
    case ErrorCode::kNotANonEdge: return "pair is already an edge";
    case ErrorCode::kInfeasibleCapacity: return "infeasible capacity";
    case ErrorCode::kWiringBlocked: return "wiring blocked";
    case ErrorCode::kOracleCapExceeded: return "oracle cap exceeded";
  }
  return "unknown error";
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge endpoint out of range for n=" + std::to_string(n));
    }
    list.push_back(Edge::normalized(e.u, e.v));
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());

  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : list) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(2 * list.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Scanning edges sorted by (u, v) fills every list in ascending order: for a
  // fixed w, pairs (x, w) with x < w come first (sorted by x), then (w, y).
  for (const Edge& e : list) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

LabeledGraph LabeledGraph::identity(Graph g) {
  LabeledGraph out;
  out.labels.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.labels[v] = v;
  out.graph = std::move(g);
  return out;
}

std::optional<Vertex> LabeledGraph::find(std::uint64_t label) const {
  // Labels are usually the identity or first-seen order; a linear scan keeps
  // LabeledGraph a plain aggregate.
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (labels[v] == label) return v;
  }
  return std::nullopt;
}

namespace {

std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  return s.substr(i);
}

// Splits off the next whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim_left(rest);
  std::size_t i = 0;
  while (i < rest.size() && rest[i] != ' ' && rest[i] != '\t' && rest[i] != '\r') ++i;
  std::string_view tok = rest.substr(0, i);
  rest = rest.substr(i);
  return tok;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::kParse, "non-integer token '" + std::string(tok) +
                                       "' at line " + std::to_string(line));
  }
  return value;
}

}  // namespace

LabeledGraph load_edge_list(std::string_view text) {
  std::unordered_map<std::uint64_t, Vertex> ids;
  std::vector<std::uint64_t> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::uint64_t label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) {
      if (labels.size() == std::numeric_limits<Vertex>::max()) {
        throw Error(ErrorCode::kParse, "too many vertices");
      }
      labels.push_back(label);
    }
    return it->second;
  };

  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::string_view rest = trim_left(line);
    if (rest.empty() || rest.front() == '#' || rest.front() == '%') continue;
    const std::string_view a = next_token(rest);
    const std::string_view b = next_token(rest);
    if (b.empty()) {
      throw Error(ErrorCode::kParse,
                  "expected two vertex ids at line " + std::to_string(line_no));
    }
    const std::uint64_t la = parse_id(a, line_no);
    const std::uint64_t lb = parse_id(b, line_no);
    if (la == lb) {
      throw Error(ErrorCode::kParse, "self-loop at line " + std::to_string(line_no));
    }
    const Vertex u = intern(la);
    const Vertex v = intern(lb);
    edges.push_back({u, v});
  }

  LabeledGraph out;
  out.graph = Graph::from_edges(static_cast<Vertex>(labels.size()), edges);
  out.labels = std::move(labels);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, "short write to '" + path + "'");
}

LabeledGraph load_edge_list_file(const std::string& path) {
  return load_edge_list(read_file(path));
}

std::string to_edge_list(const LabeledGraph& g) {
  const Graph& graph = g.graph;
  const Vertex n = graph.num_vertices();
  std::string out;
  auto emit = [&](Vertex a, Vertex b) {
    out += std::to_string(g.labels[a]);
    out += ' ';
    out += std::to_string(g.labels[b]);
    out += '\n';
  };

  // Lines that introduce vertices in id order come first, so reloading the
  // text assigns every vertex its current id.
  std::vector<std::uint8_t> seen(n, 0);
  std::unordered_set<std::uint64_t> written;
  auto mark = [&](Vertex a, Vertex b) {
    emit(a, b);
    seen[a] = seen[b] = 1;
    const Edge e = Edge::normalized(a, b);
    written.insert(std::uint64_t{e.u} * n + e.v);
  };
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = graph.neighbors(v);
    if (seen[v] || nb.empty()) continue;
    if (nb.front() < v) {
      mark(nb.front(), v);
    } else {
      mark(v, nb.front());
    }
  }
  for (const Edge& e : graph.edges()) {
    if (!written.count(std::uint64_t{e.u} * n + e.v)) emit(e.u, e.v);
  }
  return out;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  nlohmann::json j;
  j["n"] = g.num_vertices();
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph graph_from_json(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    const auto n = j.at("n").get<Vertex>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::kParse, "edge entries must be [u,v] pairs");
      }
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Graph::from_edges(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kParse, std::string("graph json: ") + ex.what());
  }
}

}  // namespace bcmd
