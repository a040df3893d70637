/*
 * Copyright 2026 The bcmd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the bcmd library: bounded-degree shortcut edges that shrink
 * the diameter of an undirected graph.
 *
 * Every fallible call returns a bcmd_status. On failure the message of the
 * most recent error on the calling thread is available from
 * bcmd_last_error(). Output handles are written only on success. Strings
 * returned through char** are owned by the caller and released with
 * bcmd_string_free().
 *
 * Vertex ids in this interface are the dense ids 0..n-1 of a graph handle.
 * Each vertex also carries a label: the integer id it had in the input file.
 * Serialized output (edge lists, plan JSON) is written in labels.
 */
#ifndef BCMD_BCMD_H_
#define BCMD_BCMD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BCMD_BUILDING_LIBRARY)
#    define BCMD_API __declspec(dllexport)
#  else
#    define BCMD_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define BCMD_API __attribute__((visibility("default")))
#else
#  define BCMD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bcmd_status {
  BCMD_OK = 0,
  BCMD_ERR_INVALID_ARGUMENT = 1,
  BCMD_ERR_PARSE = 2,
  BCMD_ERR_IO = 3,
  BCMD_ERR_DISCONNECTED = 4,
  BCMD_ERR_BUDGET_VIOLATION = 5,
  BCMD_ERR_NOT_A_NON_EDGE = 6,
  BCMD_ERR_INFEASIBLE_CAPACITY = 7,
  BCMD_ERR_WIRING_BLOCKED = 8,
  BCMD_ERR_ORACLE_CAP_EXCEEDED = 9,
  BCMD_ERR_INTERNAL = 10
} bcmd_status;

/* Hop count standing for "infinite" (some pair is disconnected). */
#define BCMD_INFINITE UINT32_MAX

typedef struct bcmd_graph bcmd_graph;
typedef struct bcmd_plan bcmd_plan;

/* Errors and strings */
BCMD_API const char* bcmd_last_error(void);
/* 1 and the vertex id when the last error concerns a specific vertex. */
BCMD_API int bcmd_last_error_vertex(uint32_t* vertex);
/* CamelCase name such as "InfeasibleCapacity". */
BCMD_API const char* bcmd_status_name(bcmd_status status);
BCMD_API void bcmd_string_free(char* s);
BCMD_API const char* bcmd_version(void);

/* Graphs */
BCMD_API bcmd_status bcmd_graph_load_file(const char* path, bcmd_graph** out);
BCMD_API bcmd_status bcmd_graph_load_text(const char* text, bcmd_graph** out);
/* Vertices 0..n-1 labeled by their own id. */
BCMD_API bcmd_status bcmd_graph_from_edges(uint32_t n, const uint32_t* endpoints,
                                           size_t num_edges, bcmd_graph** out);
BCMD_API void bcmd_graph_free(bcmd_graph* g);

BCMD_API uint32_t bcmd_graph_num_vertices(const bcmd_graph* g);
BCMD_API uint64_t bcmd_graph_num_edges(const bcmd_graph* g);
BCMD_API int bcmd_graph_has_edge(const bcmd_graph* g, uint32_t u, uint32_t v);
BCMD_API uint64_t bcmd_graph_label(const bcmd_graph* g, uint32_t v);
BCMD_API bcmd_status bcmd_graph_find_label(const bcmd_graph* g, uint64_t label,
                                           uint32_t* vertex);
BCMD_API int bcmd_graph_is_connected(const bcmd_graph* g);
BCMD_API uint32_t bcmd_graph_num_components(const bcmd_graph* g);
/* Induced subgraph on the largest component, labels kept. */
BCMD_API bcmd_status bcmd_graph_largest_component(const bcmd_graph* g,
                                                  bcmd_graph** out);
BCMD_API bcmd_status bcmd_graph_to_edge_list(const bcmd_graph* g, char** out);
BCMD_API bcmd_status bcmd_graph_write_edge_list(const bcmd_graph* g,
                                                const char* path);

/* Metrics */
typedef struct bcmd_diameter {
  uint32_t value; /* BCMD_INFINITE when disconnected */
  uint32_t u;
  uint32_t v;
  int exact;
} bcmd_diameter;

BCMD_API bcmd_status bcmd_exact_diameter(const bcmd_graph* g, bcmd_diameter* out);
BCMD_API bcmd_status bcmd_two_sweep(const bcmd_graph* g, uint64_t seed,
                                    bcmd_diameter* out);
BCMD_API bcmd_status bcmd_eccentricity(const bcmd_graph* g, uint32_t v,
                                       uint32_t* out);
/* side1 lists the vertices of V1; every other vertex is in V2. */
BCMD_API bcmd_status bcmd_colored_diameter(const bcmd_graph* g,
                                           const uint32_t* side1, size_t count,
                                           uint32_t* out);

/* Generators */
BCMD_API bcmd_status bcmd_gen_path(uint32_t n, bcmd_graph** out);
BCMD_API bcmd_status bcmd_gen_cycle(uint32_t n, bcmd_graph** out);
BCMD_API bcmd_status bcmd_gen_random_tree(uint32_t n, uint64_t seed,
                                          bcmd_graph** out);
BCMD_API bcmd_status bcmd_gen_random_connected(uint32_t n, uint64_t m,
                                               uint64_t seed, bcmd_graph** out);
/* SetCover reduction graph for sets written as "1,2;2,3". roles_json may be
 * NULL. */
BCMD_API bcmd_status bcmd_gen_setcover_gadget(const char* sets, uint32_t k,
                                              bcmd_graph** out,
                                              char** roles_json);

/* Shortcut algorithms */
typedef enum bcmd_algorithm {
  BCMD_ALGO_LOG = 0,
  BCMD_ALGO_CONST = 1,
  BCMD_ALGO_TREE = 2,
  BCMD_ALGO_GREEDY_2SWEEP = 3,
  BCMD_ALGO_RANDOM = 4,
  BCMD_ALGO_PATH = 5
} bcmd_algorithm;

/* Plan notes, see bcmd_plan_notes. */
#define BCMD_NOTE_EARLY_STOP 0x1u
#define BCMD_NOTE_EXHAUSTED 0x2u
#define BCMD_NOTE_EMPTY_FAMILY 0x4u
#define BCMD_NOTE_SHORT_CLUSTERS 0x8u
#define BCMD_NOTE_PATH_CAPPED 0x10u

typedef struct bcmd_params {
  uint32_t k;
  uint32_t delta;
  uint32_t beta;
  uint64_t seed;
} bcmd_params;

BCMD_API bcmd_params bcmd_params_default(void);
/* Accepts log, const, tree, greedy2sweep, random, path. */
BCMD_API bcmd_status bcmd_algorithm_parse(const char* name, bcmd_algorithm* out);
BCMD_API const char* bcmd_algorithm_name(bcmd_algorithm algo);
BCMD_API bcmd_status bcmd_shortcut(const bcmd_graph* g, bcmd_algorithm algo,
                                   const bcmd_params* params, bcmd_plan** out);

/* Plans */
BCMD_API void bcmd_plan_free(bcmd_plan* p);
BCMD_API size_t bcmd_plan_size(const bcmd_plan* p);
BCMD_API uint32_t bcmd_plan_k(const bcmd_plan* p);
BCMD_API uint32_t bcmd_plan_delta(const bcmd_plan* p);
BCMD_API bcmd_status bcmd_plan_edge(const bcmd_plan* p, size_t i, uint32_t* u,
                                    uint32_t* v);
BCMD_API int bcmd_plan_is_matching(const bcmd_plan* p);
BCMD_API uint32_t bcmd_plan_notes(const bcmd_plan* p);
BCMD_API size_t bcmd_plan_warning_count(const bcmd_plan* p);
BCMD_API const char* bcmd_plan_warning(const bcmd_plan* p, size_t i);
BCMD_API bcmd_status bcmd_plan_validate(const bcmd_graph* g, const bcmd_plan* p);
/* {"k":int,"delta":int,"added":[[u,v],...]} in labels of g. */
BCMD_API bcmd_status bcmd_plan_to_json(const bcmd_graph* g, const bcmd_plan* p,
                                       char** out);
BCMD_API bcmd_status bcmd_plan_from_json(const bcmd_graph* g, const char* json,
                                         bcmd_plan** out);
/* g plus the plan's edges; labels kept. */
BCMD_API bcmd_status bcmd_augment(const bcmd_graph* g, const bcmd_plan* p,
                                  bcmd_graph** out);

/* Bounds. Absent values are NaN. */
typedef struct bcmd_bound_inputs {
  uint64_t n;
  uint64_t k;
  uint64_t delta;
  uint64_t beta;
  int64_t diameter; /* -1 when unknown */
  int64_t optimum;  /* -1 when unknown */
} bcmd_bound_inputs;

typedef struct bcmd_bounds {
  double path_lower;
  double path_upper;
  double cg_lower;
  double cg_upper;
  double general_lower;
  double log_approx_upper;
  double const_approx_upper;
} bcmd_bounds;

BCMD_API bcmd_status bcmd_eval_bounds(const bcmd_bound_inputs* in,
                                      bcmd_bounds* out);

/* Exact oracle */
typedef enum bcmd_objective_kind {
  BCMD_OBJECTIVE_DIAMETER = 0,
  BCMD_OBJECTIVE_SINGLE_SOURCE = 1,
  BCMD_OBJECTIVE_COLORED = 2
} bcmd_objective_kind;

typedef struct bcmd_objective {
  bcmd_objective_kind kind;
  uint32_t source;       /* single source */
  const uint32_t* side1; /* colored: vertices of V1 */
  size_t side1_count;
} bcmd_objective;

#define BCMD_DEFAULT_ORACLE_CAP 5000000u

BCMD_API bcmd_status bcmd_objective_value(const bcmd_graph* g,
                                          const bcmd_objective* objective,
                                          uint32_t* out);
BCMD_API uint64_t bcmd_oracle_candidate_count(const bcmd_graph* g, uint32_t k);
/* optimum is BCMD_INFINITE when no admissible set connects the objective. */
BCMD_API bcmd_status bcmd_oracle_solve(const bcmd_graph* g, uint32_t k,
                                       uint32_t delta,
                                       const bcmd_objective* objective,
                                       uint64_t cap, uint32_t* optimum,
                                       uint64_t* explored, bcmd_plan** plan);

#ifdef __cplusplus
}
#endif

#endif /* BCMD_BCMD_H_ */
