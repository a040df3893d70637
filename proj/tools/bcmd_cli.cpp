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

// bcmd: command-line front end over the C library.

#include <bcmd/bcmd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphDeleter {
  void operator()(bcmd_graph* g) const { bcmd_graph_free(g); }
};
struct PlanDeleter {
  void operator()(bcmd_plan* p) const { bcmd_plan_free(p); }
};
using GraphPtr = std::unique_ptr<bcmd_graph, GraphDeleter>;
using PlanPtr = std::unique_ptr<bcmd_plan, PlanDeleter>;

void check(bcmd_status s) {
  if (s != BCMD_OK) throw CliError(bcmd_last_error());
}

std::string take(char* s) {
  std::string out(s);
  bcmd_string_free(s);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw CliError("failed writing '" + path + "'");
}

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Json hop_json(uint32_t h) { return h == BCMD_INFINITE ? Json(nullptr) : Json(h); }

GraphPtr load(const std::string& path) {
  bcmd_graph* g = nullptr;
  check(bcmd_graph_load_file(path.c_str(), &g));
  return GraphPtr(g);
}

GraphPtr restrict_to_lcc(const bcmd_graph* g) {
  bcmd_graph* out = nullptr;
  check(bcmd_graph_largest_component(g, &out));
  return GraphPtr(out);
}

// Largest component when asked, or automatically (with a warning) when the
// input is disconnected.
GraphPtr prepare(GraphPtr g, bool lcc, std::vector<std::string>& warnings) {
  if (bcmd_graph_is_connected(g.get())) return g;
  if (!lcc) {
    warnings.push_back("input has " + std::to_string(bcmd_graph_num_components(g.get())) +
                       " components; restricted to the largest (--lcc)");
  }
  return restrict_to_lcc(g.get());
}

uint32_t measure(const bcmd_graph* g, bool exact, uint64_t seed) {
  bcmd_diameter d{};
  check(exact ? bcmd_exact_diameter(g, &d) : bcmd_two_sweep(g, seed, &d));
  return d.value;
}

Json plan_json(const bcmd_graph* g, const bcmd_plan* p) {
  char* s = nullptr;
  check(bcmd_plan_to_json(g, p, &s));
  return Json::parse(take(s));
}

Json bounds_json(const bcmd_graph* g, uint32_t k, uint32_t delta, uint32_t beta,
                 uint32_t diameter) {
  Json out = Json::object();
  bcmd_bound_inputs in{bcmd_graph_num_vertices(g), k, delta, beta,
                       diameter == BCMD_INFINITE ? -1 : static_cast<int64_t>(diameter), -1};
  bcmd_bounds b{};
  if (bcmd_eval_bounds(&in, &b) != BCMD_OK) return out;
  const std::pair<const char*, double> fields[] = {
      {"path_lower", b.path_lower},       {"path_upper", b.path_upper},
      {"cg_lower", b.cg_lower},           {"cg_upper", b.cg_upper},
      {"general_lower", b.general_lower}, {"log_approx_upper", b.log_approx_upper},
      {"const_approx_upper", b.const_approx_upper},
  };
  for (const auto& [name, value] : fields) {
    if (!std::isnan(value)) out[name] = value;
  }
  return out;
}

bcmd_algorithm algorithm(const std::string& name) {
  bcmd_algorithm a{};
  check(bcmd_algorithm_parse(name.c_str(), &a));
  return a;
}

// ---------------------------------------------------------------------------

struct EstimateArgs {
  std::string graph;
  bool exact = false;
  uint64_t seed = 0;
  bool lcc = false;
};

int run_estimate(const EstimateArgs& a) {
  GraphPtr g = load(a.graph);
  if (!bcmd_graph_is_connected(g.get())) {
    if (!a.lcc && !a.exact) {
      throw CliError("graph '" + a.graph +
                     "' is disconnected; 2-Sweep needs a connected graph, rerun with --lcc "
                     "to use the largest connected component");
    }
    if (!a.lcc) {
      std::cerr << "warning: input is disconnected; restricted to the largest component "
                   "(--lcc)\n";
    }
    g = restrict_to_lcc(g.get());
  }
  bcmd_diameter d{};
  check(a.exact ? bcmd_exact_diameter(g.get(), &d) : bcmd_two_sweep(g.get(), a.seed, &d));
  Json out;
  out["diameter"] = hop_json(d.value);
  out["exact"] = a.exact;
  out["witness"] = {bcmd_graph_label(g.get(), d.u), bcmd_graph_label(g.get(), d.v)};
  out["n"] = bcmd_graph_num_vertices(g.get());
  out["m"] = bcmd_graph_num_edges(g.get());
  std::cout << out.dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct ShortcutArgs {
  std::string graph;
  std::string algo;
  uint32_t k = 0;
  uint32_t delta = 1;
  uint32_t beta = 3;
  uint64_t seed = 0;
  uint32_t repeats = 1;
  bool exact_eval = false;
  std::string out;
  std::string report;
  bool lcc = false;
  bool no_timing = false;
};

int run_shortcut(const ShortcutArgs& a) {
  const bcmd_algorithm algo = algorithm(a.algo);
  if (a.delta < 1) throw CliError("--delta must be >= 1");
  if (a.repeats < 1) throw CliError("--repeats must be >= 1");

  Stopwatch clock;
  std::vector<std::string> warnings;
  GraphPtr input = load(a.graph);
  const uint32_t n_input = bcmd_graph_num_vertices(input.get());
  const uint64_t m_input = bcmd_graph_num_edges(input.get());
  GraphPtr g = prepare(std::move(input), a.lcc, warnings);
  const double load_ms = clock.lap_ms();

  const std::string mode = a.exact_eval ? "exact" : "two_sweep";
  const uint32_t before = measure(g.get(), a.exact_eval, a.seed);
  const double before_ms = clock.lap_ms();

  double algorithm_ms = 0;
  double evaluate_ms = 0;
  PlanPtr best;
  uint32_t best_value = BCMD_INFINITE;
  uint32_t best_repeat = 0;
  uint32_t infeasible = 0;
  for (uint32_t r = 0; r < a.repeats; ++r) {
    bcmd_params p{a.k, a.delta, a.beta, a.seed + r};
    bcmd_plan* raw = nullptr;
    const bcmd_status s = bcmd_shortcut(g.get(), algo, &p, &raw);
    algorithm_ms += clock.lap_ms();
    if (s == BCMD_ERR_INFEASIBLE_CAPACITY) {
      ++infeasible;
      warnings.push_back("repeat " + std::to_string(r) + ": InfeasibleCapacity: " +
                         bcmd_last_error());
      continue;
    }
    check(s);
    PlanPtr plan(raw);
    bcmd_graph* aug = nullptr;
    check(bcmd_augment(g.get(), plan.get(), &aug));
    GraphPtr augmented(aug);
    const uint32_t value = measure(augmented.get(), a.exact_eval, a.seed + r);
    evaluate_ms += clock.lap_ms();
    if (!best || value < best_value) {
      best = std::move(plan);
      best_value = value;
      best_repeat = r;
    }
  }
  if (best) {
    for (size_t i = 0; i < bcmd_plan_warning_count(best.get()); ++i) {
      warnings.push_back(bcmd_plan_warning(best.get(), i));
    }
  }

  Json report;
  report["input"] = {{"path", a.graph},
                     {"n", n_input},
                     {"m", m_input},
                     {"lcc_size", bcmd_graph_num_vertices(g.get())}};
  report["algorithm"] = {{"name", bcmd_algorithm_name(algo)}, {"k", a.k},
                         {"delta", a.delta},                  {"beta", a.beta},
                         {"seed", a.seed},                    {"repeats", a.repeats}};
  report["before"] = {{"diameter", hop_json(before)}, {"mode", mode}};
  if (best) {
    report["after"] = {{"diameter", hop_json(best_value)},
                       {"mode", mode},
                       {"repeat", best_repeat},
                       {"edges_added", bcmd_plan_size(best.get())},
                       {"plan", plan_json(g.get(), best.get())}};
  } else {
    report["after"] = nullptr;
  }
  report["bounds"] = bounds_json(g.get(), a.k, a.delta, a.beta, before);
  if (!a.no_timing) {
    report["timing"] = {{"load_ms", load_ms},
                        {"before_ms", before_ms},
                        {"algorithm_ms", algorithm_ms},
                        {"evaluate_ms", evaluate_ms}};
  }
  report["warnings"] = warnings;
  report["status"] = best ? "ok" : "InfeasibleCapacity";

  if (best && !a.out.empty()) {
    char* s = nullptr;
    check(bcmd_plan_to_json(g.get(), best.get(), &s));
    write_text(a.out, take(s) + "\n");
  }
  const std::string text = report.dump(2) + "\n";
  if (a.report.empty()) {
    std::cout << text;
  } else {
    write_text(a.report, text);
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return infeasible == a.repeats ? kExitInfeasible : 0;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  std::string graph;
  std::vector<uint32_t> k_list;
  std::vector<uint32_t> delta_list;
  uint32_t repeats = 5;
  std::vector<std::string> algos{"log", "const", "tree", "greedy2sweep", "random"};
  uint32_t beta = 3;
  uint64_t seed = 0;
  std::string csv;
  bool lcc = false;
  bool no_timing = false;
};

int run_bench(const BenchArgs& a) {
  if (a.repeats < 1) throw CliError("--repeats must be >= 1");
  std::vector<bcmd_algorithm> algos;
  for (const auto& name : a.algos) algos.push_back(algorithm(name));
  for (uint32_t d : a.delta_list) {
    if (d < 1) throw CliError("--delta-list entries must be >= 1");
  }

  std::vector<std::string> warnings;
  GraphPtr g = prepare(load(a.graph), a.lcc, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  const uint32_t before = measure(g.get(), false, a.seed);

  std::ostringstream csv;
  csv << "algo,k,delta,diam_before,diam_after_min,edges_added,runtime_ms,infeasible_flag\n";
  for (bcmd_algorithm algo : algos) {
    for (uint32_t delta : a.delta_list) {
      for (uint32_t k : a.k_list) {
        Stopwatch clock;
        std::optional<uint32_t> best;
        size_t edges = 0;
        for (uint32_t r = 0; r < a.repeats; ++r) {
          bcmd_params p{k, delta, a.beta, a.seed + r};
          bcmd_plan* raw = nullptr;
          const bcmd_status s = bcmd_shortcut(g.get(), algo, &p, &raw);
          if (s == BCMD_ERR_INFEASIBLE_CAPACITY) continue;
          check(s);
          PlanPtr plan(raw);
          bcmd_graph* aug = nullptr;
          check(bcmd_augment(g.get(), plan.get(), &aug));
          GraphPtr augmented(aug);
          const uint32_t value = measure(augmented.get(), false, a.seed + r);
          if (!best || value < *best) {
            best = value;
            edges = bcmd_plan_size(plan.get());
          }
        }
        const double ms = clock.lap_ms();
        csv << bcmd_algorithm_name(algo) << ',' << k << ',' << delta << ','
            << before << ',';
        if (best) csv << *best;
        csv << ',' << edges << ',';
        if (a.no_timing) {
          csv << 0;
        } else {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.3f", ms);
          csv << buf;
        }
        csv << ',' << (best ? 0 : 1) << '\n';
      }
    }
  }
  if (a.csv.empty()) {
    std::cout << csv.str();
  } else {
    write_text(a.csv, csv.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  std::string graph;
  uint32_t k = 0;
  uint32_t delta = 1;
  std::string objective = "diameter";
  uint64_t cap = BCMD_DEFAULT_ORACLE_CAP;
  std::string out;
};

std::vector<uint32_t> read_side(const bcmd_graph* g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open partition file '" + path + "'");
  std::vector<uint32_t> side;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok) || tok[0] == '#') continue;
    uint64_t label = 0;
    try {
      size_t used = 0;
      label = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CliError("bad vertex id '" + tok + "' at line " + std::to_string(line_no) +
                     " of " + path);
    }
    uint32_t v = 0;
    check(bcmd_graph_find_label(g, label, &v));
    side.push_back(v);
  }
  return side;
}

int run_oracle(const OracleArgs& a) {
  GraphPtr g = load(a.graph);
  bcmd_objective obj{BCMD_OBJECTIVE_DIAMETER, 0, nullptr, 0};
  std::vector<uint32_t> side;
  Json objective_json;
  if (a.objective == "diameter") {
    objective_json = "diameter";
  } else if (a.objective.rfind("ss:", 0) == 0) {
    uint64_t label = 0;
    try {
      size_t used = 0;
      label = std::stoull(a.objective.substr(3), &used);
      if (used != a.objective.size() - 3) throw std::invalid_argument(a.objective);
    } catch (const std::exception&) {
      throw CliError("bad single-source objective '" + a.objective + "'");
    }
    obj.kind = BCMD_OBJECTIVE_SINGLE_SOURCE;
    check(bcmd_graph_find_label(g.get(), label, &obj.source));
    objective_json = {{"single_source", label}};
  } else if (a.objective.rfind("colored:", 0) == 0) {
    const std::string path = a.objective.substr(8);
    side = read_side(g.get(), path);
    obj.kind = BCMD_OBJECTIVE_COLORED;
    obj.side1 = side.data();
    obj.side1_count = side.size();
    objective_json = {{"colored", path}};
  } else {
    throw CliError("unknown objective '" + a.objective +
                   "' (expected diameter, ss:V or colored:FILE)");
  }

  uint32_t optimum = 0;
  uint64_t explored = 0;
  bcmd_plan* raw = nullptr;
  check(bcmd_oracle_solve(g.get(), a.k, a.delta, &obj, a.cap, &optimum, &explored, &raw));
  PlanPtr plan(raw);

  Json out;
  out["optimum"] = hop_json(optimum);
  out["objective"] = objective_json;
  out["k"] = a.k;
  out["delta"] = a.delta;
  out["explored"] = explored;
  out["plan"] = plan_json(g.get(), plan.get());
  const std::string text = out.dump() + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_text(a.out, text);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::optional<uint32_t> n;
  std::optional<uint64_t> m;
  uint64_t seed = 0;
  std::string sets;
  uint32_t k = 1;
  std::string out;
  std::string roles;
};

int run_gen(const GenArgs& a) {
  auto need_n = [&]() {
    if (!a.n) throw CliError("--kind " + a.kind + " needs --n");
    return *a.n;
  };
  bcmd_graph* raw = nullptr;
  std::string roles;
  if (a.kind == "path") {
    check(bcmd_gen_path(need_n(), &raw));
  } else if (a.kind == "cycle") {
    check(bcmd_gen_cycle(need_n(), &raw));
  } else if (a.kind == "tree") {
    check(bcmd_gen_random_tree(need_n(), a.seed, &raw));
  } else if (a.kind == "random") {
    const uint32_t n = need_n();
    if (!a.m) throw CliError("--kind random needs --m");
    check(bcmd_gen_random_connected(n, *a.m, a.seed, &raw));
  } else if (a.kind == "gadget") {
    if (a.sets.empty()) throw CliError("--kind gadget needs --sets");
    char* r = nullptr;
    check(bcmd_gen_setcover_gadget(a.sets.c_str(), a.k, &raw, &r));
    roles = take(r);
  } else {
    throw CliError("unknown kind '" + a.kind + "'");
  }
  GraphPtr g(raw);
  check(bcmd_graph_write_edge_list(g.get(), a.out.c_str()));
  if (a.kind == "gadget") {
    write_text(a.roles.empty() ? a.out + ".roles.json" : a.roles, roles + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-degree shortcut edges for graph diameter minimization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bcmd_version()));

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Diameter of a graph (2-Sweep or exact)");
  estimate->add_option("--graph", est.graph, "Edge list file")->required();
  estimate->add_flag("--exact", est.exact, "Exact diameter via one BFS per vertex");
  estimate->add_option("--seed", est.seed, "Seed of the 2-Sweep start vertex");
  estimate->add_flag("--lcc", est.lcc, "Restrict to the largest connected component");

  ShortcutArgs sc;
  auto* shortcut = app.add_subcommand("shortcut", "Compute a shortcut plan");
  shortcut->add_option("--graph", sc.graph, "Edge list file")->required();
  shortcut->add_option("--algo", sc.algo, "log|const|tree|greedy2sweep|random|path")
      ->required();
  shortcut->add_option("--k", sc.k, "Edge budget")->required();
  shortcut->add_option("--delta", sc.delta, "Per-vertex degree budget")->required();
  shortcut->add_option("--beta", sc.beta, "Segment size for log")->capture_default_str();
  shortcut->add_option("--seed", sc.seed, "Seed of the first repeat")->capture_default_str();
  shortcut->add_option("--repeats", sc.repeats, "Seeded repetitions")->capture_default_str();
  shortcut->add_flag("--exact-eval", sc.exact_eval, "Evaluate with the exact diameter");
  shortcut->add_option("--out", sc.out, "Plan JSON output");
  shortcut->add_option("--report", sc.report, "Report JSON output (default stdout)");
  shortcut->add_flag("--lcc", sc.lcc, "Restrict to the largest connected component");
  shortcut->add_flag("--no-timing", sc.no_timing, "Omit wall-clock timings");

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "Sweep algorithms over k and delta");
  bench->add_option("--graph", bn.graph, "Edge list file")->required();
  bench->add_option("--k-list", bn.k_list, "Comma-separated k values")
      ->required()
      ->delimiter(',');
  bench->add_option("--delta-list", bn.delta_list, "Comma-separated delta values")
      ->required()
      ->delimiter(',');
  bench->add_option("--repeats", bn.repeats, "Seeded repetitions per cell")
      ->capture_default_str();
  bench->add_option("--algos", bn.algos, "Comma-separated algorithms")->delimiter(',');
  bench->add_option("--beta", bn.beta, "Segment size for log")->capture_default_str();
  bench->add_option("--seed", bn.seed, "Seed of the first repeat")->capture_default_str();
  bench->add_option("--csv", bn.csv, "CSV output (default stdout)");
  bench->add_flag("--lcc", bn.lcc, "Restrict to the largest connected component");
  bench->add_flag("--no-timing", bn.no_timing, "Write 0 in runtime_ms");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  oracle->add_option("--graph", orc.graph, "Edge list file")->required();
  oracle->add_option("--k", orc.k, "Edge budget")->required();
  oracle->add_option("--delta", orc.delta, "Per-vertex degree budget")->required();
  oracle->add_option("--objective", orc.objective, "diameter | ss:V | colored:FILE")
      ->capture_default_str();
  oracle->add_option("--cap", orc.cap, "Maximum number of candidate edge sets")
      ->capture_default_str();
  oracle->add_option("--out", orc.out, "Result JSON output (default stdout)");

  GenArgs gn;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", gn.kind, "path|cycle|random|tree|gadget")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "random", "tree", "gadget"}));
  gen->add_option("--n", gn.n, "Number of vertices");
  gen->add_option("--m", gn.m, "Number of edges (random)");
  gen->add_option("--seed", gn.seed, "Generator seed")->capture_default_str();
  gen->add_option("--sets", gn.sets, "SetCover sets, e.g. \"1,2;2,3\" (gadget)");
  gen->add_option("--k", gn.k, "SetCover budget (gadget)")->capture_default_str();
  gen->add_option("--out", gn.out, "Edge list output")->required();
  gen->add_option("--roles", gn.roles, "Roles JSON output (default <out>.roles.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*estimate) return run_estimate(est);
    if (*shortcut) return run_shortcut(sc);
    if (*bench) return run_bench(bn);
    if (*oracle) return run_oracle(orc);
    if (*gen) return run_gen(gn);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
