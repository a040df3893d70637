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

#include <limits>

#include "bcmd/error.hpp"
#include "bcmd/generators.hpp"
#include "bcmd/oracle.hpp"
#include "bcmd/rng.hpp"
#include "support/oracles.hpp"

using namespace bcmd;
using testing_support::make_graph;

namespace {

Hop gadget_optimum(const std::string& sets, std::uint32_t k) {
  const auto gad = gen_setcover_gadget(SetCoverInstance::parse(sets, k));
  return *solve_exact(gad.graph, k, 1, DiameterObjective{}).optimum;
}

ColorPartition random_partition(Vertex n, Rng& rng) {
  std::vector<std::uint8_t> sides(n);
  for (auto& s : sides) s = static_cast<std::uint8_t>(1 + rng.below(2));
  sides[0] = 1;
  sides[n - 1] = 2;
  return ColorPartition(sides);
}

}  // namespace

TEST_CASE("path of five") {
  const Graph p5 = gen_path(5);
  const auto r = solve_exact(p5, 1, 1, DiameterObjective{});
  CHECK(r.optimum == Hop{2});
  REQUIRE(r.plan.size() == 1);
  CHECK(r.plan.added()[0] == Edge{0, 4});
  CHECK(r.explored == 7);

  const auto none = solve_exact(p5, 0, 1, DiameterObjective{});
  CHECK(none.optimum == Hop{4});
  CHECK(none.plan.empty());
  CHECK(none.explored == 1);

  CHECK(solve_exact(p5, 1, 1, SingleSourceObjective{2}).optimum == Hop{2});
  CHECK(solve_exact(p5, 1, 1, SingleSourceObjective{0}).optimum == Hop{2});
}

TEST_CASE("set cover gadgets") {
  CHECK(gadget_optimum("1,2;2,3", 1) == 4);
  CHECK(gadget_optimum("1,2;2,3;1,3", 1) == 4);
  CHECK(gadget_optimum("1;2", 2) == 3);
  CHECK(gadget_optimum("1,2,3;1;2", 1) == 3);
  CHECK(gadget_optimum("1,2;3,4;1,3", 2) == 3);
  CHECK(gadget_optimum("1,2;3,4;1,3;2,4", 1) == 4);
}

TEST_CASE("candidate counts and the cap") {
  CHECK(oracle_candidate_count(gen_path(5), 1) == 7);
  CHECK(oracle_candidate_count(gen_path(5), 2) == 22);
  CHECK(oracle_candidate_count(gen_path(5), 0) == 1);
  CHECK(oracle_candidate_count(testing_support::complete(5), 3) == 1);
  CHECK(oracle_candidate_count(Graph::from_edges(100000, {}), 12) ==
        std::numeric_limits<std::uint64_t>::max());
  try {
    solve_exact(gen_path(5), 2, 1, DiameterObjective{}, 21);
    FAIL("expected the cap to trip");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOracleCapExceeded);
  }
  CHECK(solve_exact(gen_path(5), 2, 2, DiameterObjective{}, 22).explored <= 22);
}

TEST_CASE("exhaustive search agrees with brute force") {
  using testing_support::Objective;
  using testing_support::ObjectiveSpec;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Vertex n = 4 + static_cast<Vertex>(seed % 4);
    const Graph g = seed % 2 ? gen_random_tree(n, seed)
                             : gen_random_connected(n, n + seed % 3, seed);
    Rng rng(seed);
    const ColorPartition part = random_partition(n, rng);
    const Vertex src = static_cast<Vertex>(rng.below(n));
    for (std::uint32_t k = 0; k <= 2; ++k) {
      for (std::uint32_t delta = 1; delta <= 2; ++delta) {
        const auto d = solve_exact(g, k, delta, DiameterObjective{});
        CHECK(d.optimum == testing_support::brute_optimum(g, k, delta, {Objective::kDiameter}));
        CHECK(verify_plan(g, d.plan, DiameterObjective{}) == d.optimum);
        d.plan.validate(g);

        const auto s = solve_exact(g, k, delta, SingleSourceObjective{src});
        ObjectiveSpec ss{Objective::kSingleSource, src, {}, {}};
        CHECK(s.optimum == testing_support::brute_optimum(g, k, delta, ss));
        CHECK(verify_plan(g, s.plan, SingleSourceObjective{src}) == s.optimum);

        const auto c = solve_exact(g, k, delta, ColoredObjective{part});
        ObjectiveSpec cs{Objective::kColored, 0, part.members(1), part.members(2)};
        CHECK(c.optimum == testing_support::brute_optimum(g, k, delta, cs));
        CHECK(verify_plan(g, c.plan, ColoredObjective{part}) == c.optimum);

        // Eccentricity and colored distance never exceed the diameter.
        CHECK(*s.optimum <= *d.optimum);
        CHECK(*c.optimum <= *d.optimum);
      }
    }
  }
}

TEST_CASE("optimum is monotone in both budgets") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Vertex n = 6 + static_cast<Vertex>(seed % 3);
    const Graph g = gen_random_connected(n, n - 1 + seed % 3, seed);
    Hop prev_k = *solve_exact(g, 0, 1, DiameterObjective{}).optimum;
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const Hop cur = *solve_exact(g, k, 1, DiameterObjective{}).optimum;
      CHECK(cur <= prev_k);
      prev_k = cur;
      Hop prev_d = cur;
      for (std::uint32_t delta = 2; delta <= k; ++delta) {
        const Hop wider = *solve_exact(g, k, delta, DiameterObjective{}).optimum;
        CHECK(wider <= prev_d);
        prev_d = wider;
      }
      // With delta = k the degree budget never binds.
      CHECK(solve_exact(g, k, k, DiameterObjective{}).optimum ==
            solve_exact(g, k, k + 3, DiameterObjective{}).optimum);
    }
  }
}

TEST_CASE("the witness is the lexicographically first optimal set") {
  // No single link shortens a cycle of six, so the empty set wins.
  const auto r = solve_exact(gen_cycle(6), 1, 1, DiameterObjective{});
  CHECK(r.optimum == Hop{3});
  CHECK(r.plan.empty());

  const Graph p7 = gen_path(7);
  const auto two = solve_exact(p7, 2, 1, DiameterObjective{});
  const auto brute = testing_support::brute_optimum(p7, 2, 1, {testing_support::Objective::kDiameter});
  CHECK(two.optimum == brute);
  // Any earlier pair set in lexicographic order does worse.
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = u + 2; v < 7; ++v) non_edges.push_back({u, v});
  }
  const auto w = two.plan.added();
  for (std::size_t i = 0; i < non_edges.size(); ++i) {
    for (std::size_t j = i + 1; j < non_edges.size(); ++j) {
      const std::vector<Edge> cand{non_edges[i], non_edges[j]};
      if (!std::lexicographical_compare(cand.begin(), cand.end(), w.begin(), w.end())) continue;
      const Edge a = cand[0], b = cand[1];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      CHECK(*testing_support::fw_diameter(testing_support::with_edges(p7, cand)) > *two.optimum);
    }
  }
}

TEST_CASE("plan verification") {
  const Graph p6 = gen_path(6);
  const auto plan = ShortcutPlan::from_pairs(6, 1, 1, std::vector<Edge>{{0, 5}});
  CHECK(verify_plan(p6, plan, DiameterObjective{}) == Hop{3});
  CHECK(verify_plan(p6, plan, SingleSourceObjective{0}) == Hop{3});
  CHECK(verify_plan(p6, plan, ColoredObjective{ColorPartition::from_side1(6, {0})}) == Hop{3});
  CHECK(verify_plan(p6, ShortcutPlan(6, 1, 1), DiameterObjective{}) == Hop{5});

  const Graph split = make_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(evaluate(split, DiameterObjective{}).has_value());
  const auto joined = ShortcutPlan::from_pairs(4, 1, 1, std::vector<Edge>{{1, 2}});
  CHECK(verify_plan(split, joined, DiameterObjective{}) == Hop{3});
  CHECK(solve_exact(split, 1, 1, DiameterObjective{}).optimum == Hop{3});

  CHECK_THROWS_AS(evaluate(p6, SingleSourceObjective{6}), Error);
  CHECK_THROWS_AS(evaluate(p6, ColoredObjective{ColorPartition::from_side1(5, {0})}), Error);
}
