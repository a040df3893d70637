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
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "bcmd_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

Run cli(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string("\"") + BCMD_CLI_PATH + "\" " + args + " >\"" +
                          out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string path_graph(std::uint32_t n) {
  const fs::path p = scratch() / ("path" + std::to_string(n) + ".txt");
  if (!fs::exists(p)) {
    std::string text;
    for (std::uint32_t v = 1; v < n; ++v) {
      text += std::to_string(v - 1) + " " + std::to_string(v) + "\n";
    }
    spit(p, text);
  }
  return p.string();
}

std::string star_graph() {
  const fs::path p = scratch() / "star5.txt";
  spit(p, "0 1\n0 2\n0 3\n0 4\n0 5\n");
  return p.string();
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) parts.push_back(cell);
  if (!line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

TEST_CASE("estimate") {
  auto r = cli("estimate --graph " + path_graph(5) + " --exact");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["diameter"] == 4);
  CHECK(j["exact"] == true);
  CHECK(j["witness"] == json::array({0, 4}));
  CHECK(j["n"] == 5);
  CHECK(j["m"] == 4);

  r = cli("estimate --graph " + path_graph(30) + " --seed 7");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["diameter"] == 29);
  CHECK(json::parse(r.out)["exact"] == false);
}

TEST_CASE("estimate on a disconnected graph") {
  const fs::path split_graph = scratch() / "split.txt";
  spit(split_graph, "1 2\n2 3\n7 8\n");
  auto r = cli("estimate --graph " + split_graph.string());
  CHECK(r.code == 1);
  CHECK(r.err.find("--lcc") != std::string::npos);

  r = cli("estimate --graph " + split_graph.string() + " --lcc");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["diameter"] == 2);
  CHECK(json::parse(r.out)["n"] == 3);

  r = cli("estimate --graph " + split_graph.string() + " --exact");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["diameter"] == 2);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("input errors") {
  const fs::path bad = scratch() / "bad.txt";
  spit(bad, "0 1\n1 x\n");
  auto r = cli("estimate --graph " + bad.string());
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  r = cli("estimate --graph " + (scratch() / "missing.txt").string());
  CHECK(r.code == 1);
  r = cli("shortcut --graph " + path_graph(5) + " --algo nope --k 1 --delta 1");
  CHECK(r.code == 1);
  r = cli("frobnicate");
  CHECK(r.code == 1);
}

TEST_CASE("shortcut report") {
  const fs::path plan = scratch() / "plan.json";
  auto r = cli("shortcut --graph " + path_graph(100) + " --algo path --k 3 --delta 1 --out " +
               plan.string());
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["before"]["diameter"] == 99);
  const int after = j["after"]["diameter"];
  CHECK(after >= 13);
  CHECK(after <= 34);
  CHECK(j["after"]["edges_added"] == 3);
  CHECK(j["input"]["n"] == 100);
  CHECK(j["algorithm"]["name"] == "path");
  CHECK(j["bounds"]["path_upper"] == doctest::Approx(34.0));
  CHECK(j.contains("timing"));
  const auto saved = json::parse(slurp(plan));
  CHECK(saved["added"].size() == 3);
  CHECK(saved["k"] == 3);
  CHECK(saved["delta"] == 1);

  // Every pair is a non-edge of the path.
  for (const auto& e : saved["added"]) {
    const int u = e[0], v = e[1];
    CHECK(std::abs(u - v) >= 2);
  }
}

TEST_CASE("zero budget leaves the graph as is") {
  auto r = cli("shortcut --graph " + path_graph(40) +
               " --algo random --k 0 --delta 1 --exact-eval --no-timing");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["after"]["diameter"] == j["before"]["diameter"]);
  CHECK(j["after"]["edges_added"] == 0);
  CHECK_FALSE(j.contains("timing"));
}

TEST_CASE("infeasible capacity exits with 2") {
  const fs::path plan = scratch() / "never.json";
  auto r = cli("shortcut --graph " + star_graph() + " --algo const --k 5 --delta 1 --out " +
               plan.string());
  CHECK(r.code == 2);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "InfeasibleCapacity");
  CHECK(j["after"].is_null());
  bool mentioned = false;
  for (const auto& w : j["warnings"]) {
    mentioned |= w.get<std::string>().find("InfeasibleCapacity") != std::string::npos;
  }
  CHECK(mentioned);
  CHECK_FALSE(fs::exists(plan));
}

TEST_CASE("report to a file and repeats") {
  const fs::path report = scratch() / "report.json";
  auto r = cli("shortcut --graph " + path_graph(60) +
               " --algo random --k 4 --delta 1 --repeats 5 --seed 3 --report " +
               report.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  auto j = json::parse(slurp(report));
  CHECK(j["algorithm"]["repeats"] == 5);
  CHECK(j["algorithm"]["seed"] == 3);
  const int repeat = j["after"]["repeat"];
  CHECK(repeat >= 0);
  CHECK(repeat < 5);
  CHECK(j["after"]["edges_added"] <= 4);
}

TEST_CASE("bench") {
  const fs::path csv = scratch() / "bench.csv";
  auto r = cli("bench --graph " + path_graph(50) +
               " --k-list 1,4 --delta-list 1,2 --repeats 2 --algos greedy2sweep --csv " +
               csv.string());
  REQUIRE(r.code == 0);
  const std::string text = slurp(csv);
  CHECK(count_lines(text) == 5);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "algo,k,delta,diam_before,diam_after_min,edges_added,runtime_ms,infeasible_flag");
  int row = 0;
  const int ks[] = {1, 4, 1, 4};
  const int ds[] = {1, 1, 2, 2};
  while (std::getline(lines, line)) {
    const auto cells = split(line, ',');
    REQUIRE(cells.size() == 8);
    CHECK(cells[0] == "greedy2sweep");
    CHECK(std::stoi(cells[1]) == ks[row]);
    CHECK(std::stoi(cells[2]) == ds[row]);
    CHECK(cells[3] == "49");
    CHECK(std::stoi(cells[4]) <= 49);
    CHECK(std::stoi(cells[5]) <= ks[row]);
    CHECK(cells[7] == "0");
    ++row;
  }
  CHECK(row == 4);
}

TEST_CASE("bench marks infeasible cells") {
  auto r = cli("bench --graph " + star_graph() +
               " --k-list 5 --delta-list 1 --repeats 2 --algos const,random --no-timing");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  auto cells = split(line, ',');
  REQUIRE(cells.size() == 8);
  CHECK(cells[0] == "const");
  CHECK(cells[4].empty());
  CHECK(cells[6] == "0");
  CHECK(cells[7] == "1");
  std::getline(lines, line);
  cells = split(line, ',');
  REQUIRE(cells.size() == 8);
  CHECK(cells[0] == "random");
  CHECK(cells[7] == "0");
}

TEST_CASE("oracle") {
  auto r = cli("oracle --graph " + path_graph(5) + " --k 1 --delta 1");
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["optimum"] == 2);
  CHECK(j["plan"]["added"] == json::array({json::array({0, 4})}));

  r = cli("oracle --graph " + path_graph(5) + " --k 0 --delta 1");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["optimum"] == 4);

  r = cli("oracle --graph " + path_graph(5) + " --k 1 --delta 1 --objective ss:2");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["optimum"] == 2);

  const fs::path side = scratch() / "side.txt";
  spit(side, "# first side\n0\n");
  r = cli("oracle --graph " + path_graph(6) + " --k 1 --delta 1 --objective colored:" +
          side.string());
  REQUIRE(r.code == 0);
  // Linking 0 to 4 leaves every vertex within two hops of 0.
  CHECK(json::parse(r.out)["optimum"] == 2);
  CHECK(json::parse(r.out)["plan"]["added"] == json::array({json::array({0, 4})}));

  r = cli("oracle --graph " + path_graph(40) + " --k 3 --delta 1 --cap 1000");
  CHECK(r.code == 1);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("gen") {
  const fs::path path9 = scratch() / "gen_path9.txt";
  auto r = cli("gen --kind path --n 9 --out " + path9.string());
  REQUIRE(r.code == 0);
  CHECK(count_lines(slurp(path9)) == 8);

  const fs::path gadget = scratch() / "gadget.txt";
  r = cli("gen --kind gadget --sets \"1,2;2,3\" --k 1 --out " + gadget.string());
  REQUIRE(r.code == 0);
  const auto roles = json::parse(slurp(gadget.string() + ".roles.json"));
  CHECK(roles["s"].size() == 2);
  CHECK(roles["u"].size() == 3);
  CHECK(roles["x"].size() == 2);
  r = cli("oracle --graph " + gadget.string() + " --k 1 --delta 1");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["optimum"] == 4);

  const fs::path random = scratch() / "random.txt";
  r = cli("gen --kind random --n 10 --m 60 --out " + random.string());
  CHECK(r.code == 1);
  CHECK(r.err.find("45") != std::string::npos);
  r = cli("gen --kind random --n 10 --m 15 --seed 4 --out " + random.string());
  REQUIRE(r.code == 0);
  CHECK(count_lines(slurp(random)) == 15);
  r = cli("estimate --graph " + random.string() + " --exact");
  CHECK(r.code == 0);
}

TEST_CASE("greedy sweeps beat random links on sparse graphs") {
  int wins = 0, cells = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const fs::path graph = scratch() / "guard.txt";
    REQUIRE(cli("gen --kind random --n 500 --m 800 --seed " + std::to_string(trial) +
                " --out " + graph.string())
                .code == 0);
    auto r = cli("bench --graph " + graph.string() +
                 " --k-list 16,64 --delta-list 1,25 --repeats 5 --no-timing --seed " +
                 std::to_string(trial) + " --algos greedy2sweep,random");
    REQUIRE(r.code == 0);
    std::map<std::string, int> value;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      const auto c = split(line, ',');
      REQUIRE(c.size() == 8);
      value[c[0] + "/" + c[1] + "/" + c[2]] = std::stoi(c[4]);
    }
    for (const char* k : {"16", "64"}) {
      for (const char* d : {"1", "25"}) {
        const std::string cell = std::string("/") + k + "/" + d;
        wins += value["greedy2sweep" + cell] <= value["random" + cell];
        ++cells;
      }
    }
  }
  CHECK(wins * 100 >= 80 * cells);
}
