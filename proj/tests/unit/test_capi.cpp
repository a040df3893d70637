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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "bcmd/bcmd.h"

namespace {

struct GraphHandle {
  bcmd_graph* g = nullptr;
  ~GraphHandle() { bcmd_graph_free(g); }
};

struct PlanHandle {
  bcmd_plan* p = nullptr;
  ~PlanHandle() { bcmd_plan_free(p); }
};

std::string take(char* s) {
  std::string out(s);
  bcmd_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(bcmd_status_name(BCMD_OK)) == "Ok");
  CHECK(std::string(bcmd_status_name(BCMD_ERR_INFEASIBLE_CAPACITY)) == "InfeasibleCapacity");
  CHECK(std::string(bcmd_status_name(BCMD_ERR_ORACLE_CAP_EXCEEDED)) == "OracleCapExceeded");
  CHECK(std::string(bcmd_version()) == "0.1.0");
}

TEST_CASE("loading text keeps labels and reports parse errors") {
  GraphHandle h;
  REQUIRE(bcmd_graph_load_text("# comment\n10 40\n40 20\n", &h.g) == BCMD_OK);
  CHECK(bcmd_graph_num_vertices(h.g) == 3);
  CHECK(bcmd_graph_num_edges(h.g) == 2);
  CHECK(bcmd_graph_label(h.g, 0) == 10);
  CHECK(bcmd_graph_label(h.g, 1) == 40);
  CHECK(bcmd_graph_label(h.g, 2) == 20);
  std::uint32_t v = 0;
  CHECK(bcmd_graph_find_label(h.g, 20, &v) == BCMD_OK);
  CHECK(v == 2);
  CHECK(bcmd_graph_find_label(h.g, 99, &v) == BCMD_ERR_INVALID_ARGUMENT);
  CHECK(bcmd_graph_has_edge(h.g, 0, 1) == 1);
  CHECK(bcmd_graph_has_edge(h.g, 0, 2) == 0);
  CHECK(take([&] {
          char* s = nullptr;
          REQUIRE(bcmd_graph_to_edge_list(h.g, &s) == BCMD_OK);
          return s;
        }()) == "10 40\n40 20\n");

  bcmd_graph* bad = nullptr;
  CHECK(bcmd_graph_load_text("1 2\n3\n", &bad) == BCMD_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(bcmd_last_error()).find("line 2") != std::string::npos);
  CHECK(bcmd_graph_load_text("5 5\n", &bad) == BCMD_ERR_PARSE);
  CHECK(bcmd_graph_load_file("/nonexistent/graph.txt", &bad) == BCMD_ERR_IO);
  CHECK(bcmd_graph_load_text(nullptr, &bad) == BCMD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("file round trip") {
  GraphHandle h;
  REQUIRE(bcmd_gen_random_connected(30, 45, 2, &h.g) == BCMD_OK);
  const auto path = std::filesystem::temp_directory_path() / "bcmd_capi_roundtrip.txt";
  REQUIRE(bcmd_graph_write_edge_list(h.g, path.c_str()) == BCMD_OK);
  GraphHandle back;
  REQUIRE(bcmd_graph_load_file(path.c_str(), &back.g) == BCMD_OK);
  CHECK(bcmd_graph_num_edges(back.g) == 45);
  bcmd_diameter a{}, b{};
  REQUIRE(bcmd_exact_diameter(h.g, &a) == BCMD_OK);
  REQUIRE(bcmd_exact_diameter(back.g, &b) == BCMD_OK);
  CHECK(a.value == b.value);
  std::filesystem::remove(path);
}

TEST_CASE("metrics through the C API") {
  GraphHandle p5;
  REQUIRE(bcmd_gen_path(5, &p5.g) == BCMD_OK);
  bcmd_diameter d{};
  REQUIRE(bcmd_exact_diameter(p5.g, &d) == BCMD_OK);
  CHECK(d.value == 4);
  CHECK(d.u == 0);
  CHECK(d.v == 4);
  CHECK(d.exact == 1);
  REQUIRE(bcmd_two_sweep(p5.g, 3, &d) == BCMD_OK);
  CHECK(d.value == 4);
  CHECK(d.exact == 0);
  std::uint32_t e = 0;
  REQUIRE(bcmd_eccentricity(p5.g, 2, &e) == BCMD_OK);
  CHECK(e == 2);
  CHECK(bcmd_eccentricity(p5.g, 5, &e) == BCMD_ERR_INVALID_ARGUMENT);
  const std::uint32_t side1[] = {0};
  REQUIRE(bcmd_colored_diameter(p5.g, side1, 1, &e) == BCMD_OK);
  CHECK(e == 4);

  const std::uint32_t ends[] = {0, 1, 2, 3};
  GraphHandle split;
  REQUIRE(bcmd_graph_from_edges(4, ends, 2, &split.g) == BCMD_OK);
  CHECK(bcmd_graph_is_connected(split.g) == 0);
  CHECK(bcmd_graph_num_components(split.g) == 2);
  REQUIRE(bcmd_exact_diameter(split.g, &d) == BCMD_OK);
  CHECK(d.value == BCMD_INFINITE);
  CHECK(bcmd_two_sweep(split.g, 0, &d) == BCMD_ERR_DISCONNECTED);
  GraphHandle lcc;
  REQUIRE(bcmd_graph_largest_component(split.g, &lcc.g) == BCMD_OK);
  CHECK(bcmd_graph_num_vertices(lcc.g) == 2);

  const std::uint32_t loop[] = {1, 1};
  bcmd_graph* bad = nullptr;
  CHECK(bcmd_graph_from_edges(3, loop, 1, &bad) == BCMD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("running algorithms") {
  bcmd_algorithm algo{};
  REQUIRE(bcmd_algorithm_parse("greedy2sweep", &algo) == BCMD_OK);
  CHECK(algo == BCMD_ALGO_GREEDY_2SWEEP);
  CHECK(std::string(bcmd_algorithm_name(BCMD_ALGO_TREE)) == "tree");
  CHECK(bcmd_algorithm_parse("fast", &algo) == BCMD_ERR_INVALID_ARGUMENT);

  GraphHandle p100;
  REQUIRE(bcmd_gen_path(100, &p100.g) == BCMD_OK);
  bcmd_params params = bcmd_params_default();
  CHECK(params.k == 1);
  CHECK(params.delta == 1);
  CHECK(params.beta == 3);
  params.k = 3;
  PlanHandle plan;
  REQUIRE(bcmd_shortcut(p100.g, BCMD_ALGO_PATH, &params, &plan.p) == BCMD_OK);
  CHECK(bcmd_plan_size(plan.p) == 3);
  CHECK(bcmd_plan_k(plan.p) == 3);
  CHECK(bcmd_plan_delta(plan.p) == 1);
  CHECK(bcmd_plan_is_matching(plan.p) == 1);
  CHECK(bcmd_plan_validate(p100.g, plan.p) == BCMD_OK);
  std::uint32_t u = 0, v = 0;
  REQUIRE(bcmd_plan_edge(plan.p, 0, &u, &v) == BCMD_OK);
  CHECK(u < v);
  CHECK(bcmd_plan_edge(plan.p, 3, &u, &v) == BCMD_ERR_INVALID_ARGUMENT);

  GraphHandle after;
  REQUIRE(bcmd_augment(p100.g, plan.p, &after.g) == BCMD_OK);
  bcmd_diameter d{};
  REQUIRE(bcmd_exact_diameter(after.g, &d) == BCMD_OK);
  CHECK(d.value >= 13);
  CHECK(d.value <= 34);

  char* json = nullptr;
  REQUIRE(bcmd_plan_to_json(p100.g, plan.p, &json) == BCMD_OK);
  const std::string text = take(json);
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["k"] == 3);
  CHECK(parsed["added"].size() == 3);
  PlanHandle back;
  REQUIRE(bcmd_plan_from_json(p100.g, text.c_str(), &back.p) == BCMD_OK);
  CHECK(bcmd_plan_size(back.p) == 3);
  PlanHandle rejected;
  CHECK(bcmd_plan_from_json(p100.g, "{\"k\":1,\"delta\":1,\"added\":[[0,1]]}",
                            &rejected.p) == BCMD_ERR_NOT_A_NON_EDGE);
  CHECK(bcmd_plan_from_json(p100.g, "{\"k\":1,\"delta\":1,\"added\":[[0,2],[0,3]]}",
                            &rejected.p) == BCMD_ERR_BUDGET_VIOLATION);
  CHECK(bcmd_plan_from_json(p100.g, "not json", &rejected.p) == BCMD_ERR_PARSE);
  CHECK(rejected.p == nullptr);

  GraphHandle k4;
  const std::uint32_t k4_edges[] = {0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3};
  REQUIRE(bcmd_graph_from_edges(4, k4_edges, 6, &k4.g) == BCMD_OK);
  params.k = 2;
  PlanHandle greedy;
  REQUIRE(bcmd_shortcut(k4.g, BCMD_ALGO_GREEDY_2SWEEP, &params, &greedy.p) == BCMD_OK);
  CHECK(bcmd_plan_size(greedy.p) == 0);
  CHECK((bcmd_plan_notes(greedy.p) & BCMD_NOTE_EARLY_STOP) != 0);
  CHECK(bcmd_plan_warning_count(greedy.p) == 1);
  CHECK(std::string(bcmd_plan_warning(greedy.p, 0)).size() > 0);
  CHECK(bcmd_plan_warning(greedy.p, 1) == nullptr);
}

TEST_CASE("infeasible capacity carries a vertex") {
  GraphHandle s;
  const std::uint32_t star_edges[] = {0, 1, 0, 2, 0, 3, 0, 4, 0, 5};
  REQUIRE(bcmd_graph_from_edges(6, star_edges, 5, &s.g) == BCMD_OK);
  bcmd_params params = bcmd_params_default();
  params.k = 5;
  bcmd_plan* plan = nullptr;
  CHECK(bcmd_shortcut(s.g, BCMD_ALGO_CONST, &params, &plan) == BCMD_ERR_INFEASIBLE_CAPACITY);
  CHECK(plan == nullptr);
  std::uint32_t v = 99;
  CHECK(bcmd_last_error_vertex(&v) == 1);
  CHECK(v < 6);
  CHECK(std::string(bcmd_last_error()).size() > 0);

  // A later success clears the error state.
  std::uint32_t e = 0;
  REQUIRE(bcmd_eccentricity(s.g, 0, &e) == BCMD_OK);
  CHECK(bcmd_last_error_vertex(&v) == 0);
  CHECK(std::string(bcmd_last_error()).empty());

  CHECK(bcmd_shortcut(s.g, BCMD_ALGO_TREE, &params, &plan) == BCMD_ERR_INFEASIBLE_CAPACITY);
  params.delta = 0;
  CHECK(bcmd_shortcut(s.g, BCMD_ALGO_LOG, &params, &plan) == BCMD_ERR_INVALID_ARGUMENT);
  // Null parameters mean the defaults.
  PlanHandle defaults;
  CHECK(bcmd_shortcut(s.g, BCMD_ALGO_LOG, nullptr, &defaults.p) == BCMD_OK);
  CHECK(bcmd_plan_k(defaults.p) == 1);
  CHECK(bcmd_shortcut(s.g, BCMD_ALGO_LOG, nullptr, nullptr) == BCMD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bounds through the C API") {
  bcmd_bound_inputs in{100, 3, 1, 3, -1, -1};
  bcmd_bounds b{};
  REQUIRE(bcmd_eval_bounds(&in, &b) == BCMD_OK);
  CHECK(b.path_lower == doctest::Approx(12.5));
  CHECK(b.path_upper == doctest::Approx(34.0));
  CHECK(std::isnan(b.general_lower));
  CHECK(std::isnan(b.log_approx_upper));
  in.optimum = 1;
  in.diameter = 99;
  REQUIRE(bcmd_eval_bounds(&in, &b) == BCMD_OK);
  CHECK(b.log_approx_upper == doctest::Approx(18.0));
  CHECK(b.const_approx_upper == doctest::Approx(6.0));
  CHECK(b.general_lower == doctest::Approx(24.0));
  in.n = 1;
  CHECK(bcmd_eval_bounds(&in, &b) == BCMD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("exact oracle through the C API") {
  GraphHandle p5;
  REQUIRE(bcmd_gen_path(5, &p5.g) == BCMD_OK);
  bcmd_objective obj{BCMD_OBJECTIVE_DIAMETER, 0, nullptr, 0};
  std::uint32_t value = 0;
  REQUIRE(bcmd_objective_value(p5.g, &obj, &value) == BCMD_OK);
  CHECK(value == 4);
  CHECK(bcmd_oracle_candidate_count(p5.g, 1) == 7);

  std::uint32_t opt = 0;
  std::uint64_t explored = 0;
  PlanHandle plan;
  REQUIRE(bcmd_oracle_solve(p5.g, 1, 1, &obj, BCMD_DEFAULT_ORACLE_CAP, &opt, &explored,
                            &plan.p) == BCMD_OK);
  CHECK(opt == 2);
  CHECK(explored == 7);
  std::uint32_t u = 0, v = 0;
  REQUIRE(bcmd_plan_edge(plan.p, 0, &u, &v) == BCMD_OK);
  CHECK(u == 0);
  CHECK(v == 4);

  bcmd_plan* none = nullptr;
  CHECK(bcmd_oracle_solve(p5.g, 2, 1, &obj, 10, &opt, &explored, &none) ==
        BCMD_ERR_ORACLE_CAP_EXCEEDED);
  CHECK(bcmd_oracle_solve(p5.g, 1, 0, &obj, 10, &opt, &explored, &none) ==
        BCMD_ERR_INVALID_ARGUMENT);

  const std::uint32_t side1[] = {0};
  bcmd_objective col{BCMD_OBJECTIVE_COLORED, 0, side1, 1};
  REQUIRE(bcmd_oracle_solve(p5.g, 1, 1, &col, BCMD_DEFAULT_ORACLE_CAP, &opt, nullptr,
                            nullptr) == BCMD_OK);
  CHECK(opt == 2);
  bcmd_objective ss{BCMD_OBJECTIVE_SINGLE_SOURCE, 9, nullptr, 0};
  CHECK(bcmd_objective_value(p5.g, &ss, &value) == BCMD_ERR_INVALID_ARGUMENT);

  GraphHandle gadget;
  char* roles = nullptr;
  REQUIRE(bcmd_gen_setcover_gadget("1;2", 2, &gadget.g, &roles) == BCMD_OK);
  const auto r = nlohmann::json::parse(take(roles));
  CHECK(r["x"].size() == 3);
  REQUIRE(bcmd_oracle_solve(gadget.g, 2, 1, &obj, BCMD_DEFAULT_ORACLE_CAP, &opt, nullptr,
                            nullptr) == BCMD_OK);
  CHECK(opt == 3);
  CHECK(bcmd_gen_setcover_gadget("1,y", 1, &gadget.g, nullptr) == BCMD_ERR_PARSE);
}
