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

#include "bcmd/bcmd.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <optional>
#include <string>

#include "bcmd/bounds.hpp"
#include "bcmd/components.hpp"
#include "bcmd/error.hpp"
#include "bcmd/generators.hpp"
#include "bcmd/graph.hpp"
#include "bcmd/metrics.hpp"
#include "bcmd/oracle.hpp"
#include "bcmd/plan.hpp"
#include "bcmd/shortcut.hpp"

struct bcmd_graph {
  bcmd::LabeledGraph g;
};

struct bcmd_plan {
  bcmd::ShortcutResult result;
};

namespace {

struct LastError {
  std::string message;
  std::optional<std::uint32_t> vertex;
};

thread_local LastError last_error;

bcmd_status status_of(bcmd::ErrorCode code) {
  using bcmd::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return BCMD_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return BCMD_ERR_PARSE;
    case ErrorCode::kIo: return BCMD_ERR_IO;
    case ErrorCode::kDisconnected: return BCMD_ERR_DISCONNECTED;
    case ErrorCode::kBudgetViolation: return BCMD_ERR_BUDGET_VIOLATION;
    case ErrorCode::kNotANonEdge: return BCMD_ERR_NOT_A_NON_EDGE;
    case ErrorCode::kInfeasibleCapacity: return BCMD_ERR_INFEASIBLE_CAPACITY;
    case ErrorCode::kWiringBlocked: return BCMD_ERR_WIRING_BLOCKED;
    case ErrorCode::kOracleCapExceeded: return BCMD_ERR_ORACLE_CAP_EXCEEDED;
  }
  return BCMD_ERR_INTERNAL;
}

bcmd_status fail(bcmd_status status, std::string message,
                 std::optional<std::uint32_t> vertex = std::nullopt) {
  last_error.message = std::move(message);
  last_error.vertex = vertex;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
bcmd_status guarded(F&& body) {
  try {
    body();
    last_error = {};
    return BCMD_OK;
  } catch (const bcmd::Error& e) {
    return fail(status_of(e.code()), e.what(), e.vertex());
  } catch (const std::bad_alloc&) {
    return fail(BCMD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BCMD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BCMD_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw bcmd::Error(bcmd::ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void check_vertex(const bcmd_graph* g, std::uint32_t v) {
  if (v >= g->g.graph.num_vertices()) {
    throw bcmd::Error(bcmd::ErrorCode::kInvalidArgument,
                      "vertex " + std::to_string(v) + " out of range");
  }
}

std::uint32_t hop_out(const bcmd::MaybeHop& h) { return h ? *h : BCMD_INFINITE; }

bcmd_graph* wrap(bcmd::Graph g) {
  return new bcmd_graph{bcmd::LabeledGraph::identity(std::move(g))};
}

std::vector<bcmd::Vertex> side_list(const bcmd_graph* g, const std::uint32_t* side1,
                                    std::size_t count) {
  if (count > 0) require(side1, "side1");
  std::vector<bcmd::Vertex> out(side1, side1 + count);
  for (auto v : out) check_vertex(g, v);
  return out;
}

bcmd::Objective to_objective(const bcmd_graph* g, const bcmd_objective* obj) {
  if (obj == nullptr) return bcmd::DiameterObjective{};
  switch (obj->kind) {
    case BCMD_OBJECTIVE_DIAMETER: return bcmd::DiameterObjective{};
    case BCMD_OBJECTIVE_SINGLE_SOURCE:
      check_vertex(g, obj->source);
      return bcmd::SingleSourceObjective{obj->source};
    case BCMD_OBJECTIVE_COLORED:
      return bcmd::ColoredObjective{bcmd::ColorPartition::from_side1(
          g->g.graph.num_vertices(), side_list(g, obj->side1, obj->side1_count))};
  }
  throw bcmd::Error(bcmd::ErrorCode::kInvalidArgument, "unknown objective kind");
}

bcmd::Algorithm to_algorithm(bcmd_algorithm a) {
  switch (a) {
    case BCMD_ALGO_LOG: return bcmd::Algorithm::kLog;
    case BCMD_ALGO_CONST: return bcmd::Algorithm::kConst;
    case BCMD_ALGO_TREE: return bcmd::Algorithm::kTree;
    case BCMD_ALGO_GREEDY_2SWEEP: return bcmd::Algorithm::kGreedy2Sweep;
    case BCMD_ALGO_RANDOM: return bcmd::Algorithm::kRandom;
    case BCMD_ALGO_PATH: return bcmd::Algorithm::kPath;
  }
  throw bcmd::Error(bcmd::ErrorCode::kInvalidArgument, "unknown algorithm");
}

double or_nan(const std::optional<double>& d) {
  return d ? *d : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

extern "C" {

const char* bcmd_last_error(void) { return last_error.message.c_str(); }

int bcmd_last_error_vertex(uint32_t* vertex) {
  if (!last_error.vertex) return 0;
  if (vertex != nullptr) *vertex = *last_error.vertex;
  return 1;
}

const char* bcmd_status_name(bcmd_status status) {
  switch (status) {
    case BCMD_OK: return "Ok";
    case BCMD_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case BCMD_ERR_PARSE: return "Parse";
    case BCMD_ERR_IO: return "Io";
    case BCMD_ERR_DISCONNECTED: return "Disconnected";
    case BCMD_ERR_BUDGET_VIOLATION: return "BudgetViolation";
    case BCMD_ERR_NOT_A_NON_EDGE: return "NotANonEdge";
    case BCMD_ERR_INFEASIBLE_CAPACITY: return "InfeasibleCapacity";
    case BCMD_ERR_WIRING_BLOCKED: return "WiringBlocked";
    case BCMD_ERR_ORACLE_CAP_EXCEEDED: return "OracleCapExceeded";
    case BCMD_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void bcmd_string_free(char* s) { std::free(s); }

const char* bcmd_version(void) { return "0.1.0"; }

bcmd_status bcmd_graph_load_file(const char* path, bcmd_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new bcmd_graph{bcmd::load_edge_list_file(path)};
  });
}

bcmd_status bcmd_graph_load_text(const char* text, bcmd_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new bcmd_graph{bcmd::load_edge_list(text)};
  });
}

bcmd_status bcmd_graph_from_edges(uint32_t n, const uint32_t* endpoints,
                                  size_t num_edges, bcmd_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (num_edges > 0) require(endpoints, "endpoints");
    std::vector<bcmd::Edge> edges;
    edges.reserve(num_edges);
    for (std::size_t i = 0; i < num_edges; ++i) {
      edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    }
    *out = wrap(bcmd::Graph::from_edges(n, edges));
  });
}

void bcmd_graph_free(bcmd_graph* g) { delete g; }

uint32_t bcmd_graph_num_vertices(const bcmd_graph* g) {
  return g ? g->g.graph.num_vertices() : 0;
}

uint64_t bcmd_graph_num_edges(const bcmd_graph* g) { return g ? g->g.graph.num_edges() : 0; }

int bcmd_graph_has_edge(const bcmd_graph* g, uint32_t u, uint32_t v) {
  if (g == nullptr) return 0;
  const auto n = g->g.graph.num_vertices();
  if (u >= n || v >= n) return 0;
  return g->g.graph.has_edge(u, v) ? 1 : 0;
}

uint64_t bcmd_graph_label(const bcmd_graph* g, uint32_t v) {
  if (g == nullptr || v >= g->g.labels.size()) return 0;
  return g->g.labels[v];
}

bcmd_status bcmd_graph_find_label(const bcmd_graph* g, uint64_t label, uint32_t* vertex) {
  return guarded([&] {
    require(g, "graph");
    require(vertex, "vertex");
    const auto v = g->g.find(label);
    if (!v) {
      throw bcmd::Error(bcmd::ErrorCode::kInvalidArgument,
                        "no vertex labeled " + std::to_string(label));
    }
    *vertex = *v;
  });
}

int bcmd_graph_is_connected(const bcmd_graph* g) {
  return g != nullptr && bcmd::is_connected(g->g.graph) ? 1 : 0;
}

uint32_t bcmd_graph_num_components(const bcmd_graph* g) {
  if (g == nullptr) return 0;
  return static_cast<uint32_t>(bcmd::connected_components(g->g.graph).count());
}

bcmd_status bcmd_graph_largest_component(const bcmd_graph* g, bcmd_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new bcmd_graph{bcmd::largest_component(g->g)};
  });
}

bcmd_status bcmd_graph_to_edge_list(const bcmd_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(bcmd::to_edge_list(g->g));
  });
}

bcmd_status bcmd_graph_write_edge_list(const bcmd_graph* g, const char* path) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    bcmd::write_file(path, bcmd::to_edge_list(g->g));
  });
}

bcmd_status bcmd_exact_diameter(const bcmd_graph* g, bcmd_diameter* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto d = bcmd::exact_diameter(g->g.graph);
    *out = {hop_out(d.value), d.u, d.v, 1};
  });
}

bcmd_status bcmd_two_sweep(const bcmd_graph* g, uint64_t seed, bcmd_diameter* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto d = bcmd::two_sweep(g->g.graph, seed);
    *out = {hop_out(d.value), d.u, d.v, 0};
  });
}

bcmd_status bcmd_eccentricity(const bcmd_graph* g, uint32_t v, uint32_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    check_vertex(g, v);
    *out = hop_out(bcmd::eccentricity(g->g.graph, v));
  });
}

bcmd_status bcmd_colored_diameter(const bcmd_graph* g, const uint32_t* side1,
                                  size_t count, uint32_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto part = bcmd::ColorPartition::from_side1(g->g.graph.num_vertices(),
                                                       side_list(g, side1, count));
    *out = hop_out(bcmd::colored_diameter(g->g.graph, part));
  });
}

bcmd_status bcmd_gen_path(uint32_t n, bcmd_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(bcmd::gen_path(n));
  });
}

bcmd_status bcmd_gen_cycle(uint32_t n, bcmd_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(bcmd::gen_cycle(n));
  });
}

bcmd_status bcmd_gen_random_tree(uint32_t n, uint64_t seed, bcmd_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(bcmd::gen_random_tree(n, seed));
  });
}

bcmd_status bcmd_gen_random_connected(uint32_t n, uint64_t m, uint64_t seed,
                                      bcmd_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(bcmd::gen_random_connected(n, m, seed));
  });
}

bcmd_status bcmd_gen_setcover_gadget(const char* sets, uint32_t k, bcmd_graph** out,
                                     char** roles_json) {
  return guarded([&] {
    require(sets, "sets");
    require(out, "out");
    const auto gadget = bcmd::gen_setcover_gadget(bcmd::SetCoverInstance::parse(sets, k));
    char* roles = roles_json ? copy_string(gadget.roles.to_json()) : nullptr;
    *out = wrap(gadget.graph);
    if (roles_json) *roles_json = roles;
  });
}

bcmd_params bcmd_params_default(void) {
  const bcmd::AlgorithmParams p;
  return {p.k, p.delta, p.beta, p.seed};
}

bcmd_status bcmd_algorithm_parse(const char* name, bcmd_algorithm* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto a = bcmd::parse_algorithm(name);
    if (!a) {
      throw bcmd::Error(bcmd::ErrorCode::kInvalidArgument,
                        std::string("unknown algorithm '") + name + "'");
    }
    *out = static_cast<bcmd_algorithm>(*a);
  });
}

const char* bcmd_algorithm_name(bcmd_algorithm algo) {
  try {
    return bcmd::to_string(to_algorithm(algo));
  } catch (...) {
    return "unknown";
  }
}

bcmd_status bcmd_shortcut(const bcmd_graph* g, bcmd_algorithm algo,
                          const bcmd_params* params, bcmd_plan** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const bcmd_params p = params ? *params : bcmd_params_default();
    bcmd::AlgorithmParams ap;
    ap.k = p.k;
    ap.delta = p.delta;
    ap.beta = p.beta;
    ap.seed = p.seed;
    *out = new bcmd_plan{bcmd::run_algorithm(g->g.graph, to_algorithm(algo), ap)};
  });
}

void bcmd_plan_free(bcmd_plan* p) { delete p; }

size_t bcmd_plan_size(const bcmd_plan* p) { return p ? p->result.plan.size() : 0; }

uint32_t bcmd_plan_k(const bcmd_plan* p) { return p ? p->result.plan.k_budget() : 0; }

uint32_t bcmd_plan_delta(const bcmd_plan* p) { return p ? p->result.plan.delta_budget() : 0; }

bcmd_status bcmd_plan_edge(const bcmd_plan* p, size_t i, uint32_t* u, uint32_t* v) {
  return guarded([&] {
    require(p, "plan");
    require(u, "u");
    require(v, "v");
    if (i >= p->result.plan.size()) {
      throw bcmd::Error(bcmd::ErrorCode::kInvalidArgument, "plan index out of range");
    }
    *u = p->result.plan.added()[i].u;
    *v = p->result.plan.added()[i].v;
  });
}

int bcmd_plan_is_matching(const bcmd_plan* p) {
  return p != nullptr && p->result.plan.is_matching() ? 1 : 0;
}

uint32_t bcmd_plan_notes(const bcmd_plan* p) { return p ? p->result.notes : 0; }

size_t bcmd_plan_warning_count(const bcmd_plan* p) {
  return p ? p->result.warnings.size() : 0;
}

const char* bcmd_plan_warning(const bcmd_plan* p, size_t i) {
  if (p == nullptr || i >= p->result.warnings.size()) return nullptr;
  return p->result.warnings[i].c_str();
}

bcmd_status bcmd_plan_validate(const bcmd_graph* g, const bcmd_plan* p) {
  return guarded([&] {
    require(g, "graph");
    require(p, "plan");
    p->result.plan.validate(g->g.graph);
  });
}

bcmd_status bcmd_plan_to_json(const bcmd_graph* g, const bcmd_plan* p, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(p, "plan");
    require(out, "out");
    *out = copy_string(bcmd::plan_to_json(p->result.plan, g->g));
  });
}

bcmd_status bcmd_plan_from_json(const bcmd_graph* g, const char* json, bcmd_plan** out) {
  return guarded([&] {
    require(g, "graph");
    require(json, "json");
    require(out, "out");
    *out = new bcmd_plan{bcmd::ShortcutResult{bcmd::plan_from_json(json, g->g)}};
  });
}

bcmd_status bcmd_augment(const bcmd_graph* g, const bcmd_plan* p, bcmd_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(p, "plan");
    require(out, "out");
    *out = new bcmd_graph{{bcmd::augment(g->g.graph, p->result.plan), g->g.labels}};
  });
}

bcmd_status bcmd_eval_bounds(const bcmd_bound_inputs* in, bcmd_bounds* out) {
  return guarded([&] {
    require(in, "inputs");
    require(out, "out");
    bcmd::BoundInputs bi;
    bi.n = in->n;
    bi.k = in->k;
    bi.delta = in->delta;
    bi.beta = in->beta;
    if (in->diameter >= 0) bi.diameter = static_cast<std::uint64_t>(in->diameter);
    if (in->optimum >= 0) bi.optimum = static_cast<std::uint64_t>(in->optimum);
    const auto b = bcmd::eval_bounds(bi);
    *out = {or_nan(b.path_lower),    or_nan(b.path_upper), or_nan(b.cg_lower),
            or_nan(b.cg_upper),      or_nan(b.general_lower),
            or_nan(b.log_approx_upper), or_nan(b.const_approx_upper)};
  });
}

bcmd_status bcmd_objective_value(const bcmd_graph* g, const bcmd_objective* objective,
                                 uint32_t* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = hop_out(bcmd::evaluate(g->g.graph, to_objective(g, objective)));
  });
}

uint64_t bcmd_oracle_candidate_count(const bcmd_graph* g, uint32_t k) {
  return g ? bcmd::oracle_candidate_count(g->g.graph, k) : 0;
}

bcmd_status bcmd_oracle_solve(const bcmd_graph* g, uint32_t k, uint32_t delta,
                              const bcmd_objective* objective, uint64_t cap,
                              uint32_t* optimum, uint64_t* explored, bcmd_plan** plan) {
  return guarded([&] {
    require(g, "graph");
    require(optimum, "optimum");
    if (delta < 1) throw bcmd::Error(bcmd::ErrorCode::kInvalidArgument, "delta must be >= 1");
    auto r = bcmd::solve_exact(g->g.graph, k, delta, to_objective(g, objective), cap);
    *optimum = hop_out(r.optimum);
    if (explored) *explored = r.explored;
    if (plan) *plan = new bcmd_plan{bcmd::ShortcutResult{std::move(r.plan)}};
  });
}

}  // extern "C"
