// Copyright 2026 The Ambigame Authors
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

#include <cstdio>
#include <sys/wait.h>
#include <fstream>
#include <string>

#include <json.hpp>

#include "ambigame/coordination.hpp"
#include "ambigame/json_io.hpp"
#include "test_helpers.hpp"

namespace {

const std::string kCli = AMBIGAME_CLI_PATH;
const std::string kFixtures = AMBIGAME_FIXTURE_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string command = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json results_of(const RunResult& run_result) {
  const nlohmann::json report = nlohmann::json::parse(run_result.output);
  return report.at("results");
}

}  // namespace

TEST_CASE("solve: no pure tie-broken equilibrium in the one-sided game") {
  const RunResult r = run("solve " + kFixtures + "/no-lexne.json --concept lexne --strategies pure");
  CHECK(r.exit_code == 0);
  CHECK(results_of(r).at("count") == 0);
}

TEST_CASE("solve: street game enumerates its fifteen equilibria") {
  // Compile the coordination spec into the game schema the solver consumes.
  const ambigame::TypeAmbiguityGame compiled =
      ambigame::build_coordination_game(ambigame::testing::street_spec());
  const std::string path = "/tmp/ambigame-street-game.json";
  {
    std::ofstream out(path);
    out << ambigame::game_to_json(compiled.game).dump(1);
  }
  const RunResult r = run("solve " + path + " --concept lexne --strategies pure");
  CHECK(r.exit_code == 0);
  CHECK(results_of(r).at("count") == 15);
  std::remove(path.c_str());
}

TEST_CASE("solve: malformed input exits with the error code") {
  CHECK(run("solve " + kFixtures + "/malformed.json --concept lexne --strategies pure")
            .exit_code == 2);
}

TEST_CASE("solve: mixed tie-broken equilibria are verification-only") {
  CHECK(run("solve " + kFixtures + "/no-lexne.json --concept lexne --strategies mixed")
            .exit_code == 2);
}

TEST_CASE("solve: mixed worst-case search finds the known profile") {
  const RunResult r =
      run("solve " + kFixtures + "/no-lexne.json --concept minne --strategies mixed");
  CHECK(r.exit_code == 0);
  CHECK(results_of(r).at("found") == true);
}

TEST_CASE("verify: the known mixed profile passes one concept and fails the other") {
  const std::string files = kFixtures + "/no-lexne.json " + kFixtures + "/no-lexne-minne.json";
  const RunResult ok = run("verify " + files + " --concept minne");
  CHECK(ok.exit_code == 0);
  CHECK(results_of(ok).at("verdict") == "equilibrium");

  const RunResult bad = run("verify " + files + " --concept lexne");
  CHECK(bad.exit_code == 1);
  const nlohmann::json results = results_of(bad);
  CHECK(results.at("verdict") == "not-equilibrium");
  CHECK(results.at("witness").at("player") == "row");
  CHECK(results.at("witness").at("deviation").contains("B"));
  CHECK(results.at("witness").at("deviation_best") == "1");
  CHECK(results.at("witness").at("current_best") == "1/3");
}

TEST_CASE("verify: unknown action in the profile is an input error") {
  CHECK(run("verify " + kFixtures + "/no-lexne.json " + kFixtures +
            "/profile-unknown-action.json --concept minne")
            .exit_code == 2);
}

TEST_CASE("coord solve lists the street location sets") {
  const RunResult r = run("coord solve " + kFixtures + "/street-spec.json");
  CHECK(r.exit_code == 0);
  CHECK(results_of(r).at("count") == 15);
}

TEST_CASE("coord minne-fraction prints the exact bound") {
  const RunResult r = run("coord minne-fraction --m 3 --t 2 --n 2");
  CHECK(r.exit_code == 0);
  CHECK(results_of(r).at("fraction") == "4/9");
}

TEST_CASE("coord euclidean reports the median-separated sets") {
  const RunResult r = run("coord euclidean " + kFixtures + "/euclid.json");
  CHECK(r.exit_code == 0);
  const nlohmann::json results = results_of(r);
  const nlohmann::json& sets = results.at("location_sets");
  bool found_pair = false;
  for (const auto& s : sets) {
    if (s == nlohmann::json::array({"A", "B"})) found_pair = true;
  }
  CHECK(found_pair);
}

TEST_CASE("coord known-peak keeps only rich straddling pairs") {
  const RunResult r = run("coord known-peak " + kFixtures + "/known-peak.json");
  CHECK(r.exit_code == 0);
  const nlohmann::json results = results_of(r);
  const nlohmann::json& sets = results.at("location_sets");
  CHECK(sets.size() == 6);  // five singletons plus {1,3}
  for (const auto& s : sets) {
    CHECK(s != nlohmann::json::array({"4", "5"}));
  }
}

TEST_CASE("trade solve includes the flagship two-price class") {
  const RunResult r = run("trade solve " + kFixtures + "/trade-span.json");
  CHECK(r.exit_code == 0);
  const nlohmann::json results = results_of(r);
  bool found = false;
  for (const auto& entry : results.at("classes")) {
    if (entry.at("class") == "two-price(15,35)") found = true;
  }
  CHECK(found);
}

TEST_CASE("trade classify labels the flagship pair and flags a broken one") {
  const RunResult good = run("trade classify " + kFixtures + "/trade-span.json " + kFixtures +
                             "/trade-two-price.json");
  CHECK(good.exit_code == 0);
  CHECK(results_of(good).at("class") == "two-price(15,35)");

  const RunResult bad = run("trade classify " + kFixtures + "/trade-span.json " + kFixtures +
                            "/trade-constant-bids.json");
  CHECK(bad.exit_code == 1);
  CHECK(results_of(bad).at("class") == "not-equilibrium");
}

TEST_CASE("trade cross-validate matches on the knife-edge-free instance") {
  const RunResult r = run("trade cross-validate " + kFixtures + "/trade-small.json");
  CHECK(r.exit_code == 0);
  CHECK(results_of(r).at("match") == true);
}

TEST_CASE("trade cross-validate reports the spanning instance honestly") {
  const RunResult r = run("trade cross-validate " + kFixtures + "/trade-span.json");
  CHECK(r.exit_code == 1);
  const nlohmann::json results = results_of(r);
  CHECK(results.at("match") == false);
  CHECK(results.at("brute_force_count") == 1126);
}

TEST_CASE("axioms: the tie-broken order passes what it is documented to pass") {
  const RunResult r = run("axioms --comparator lex --samples 60 --seed 7");
  CHECK(r.exit_code == 0);
  const nlohmann::json results = results_of(r);
  CHECK(results.at("refines_min") == "pass");
  for (const auto& axiom : results.at("axioms")) {
    if (axiom.at("documented") == "pass") CHECK(axiom.at("result") == "pass");
    if (axiom.at("axiom") == "uncertainty-aversion") CHECK(axiom.at("result") == "fail");
  }
}

TEST_CASE("axioms: the recursive-worst order fails irrelevant information") {
  const RunResult r = run("axioms --comparator second-worst --samples 20 --seed 7");
  CHECK(r.exit_code == 0);  // the failure is documented
  const nlohmann::json results = results_of(r);
  for (const auto& axiom : results.at("axioms")) {
    if (axiom.at("axiom") == "iii") CHECK(axiom.at("result") == "fail");
  }
}

TEST_CASE("axioms: unknown comparator is an input error") {
  CHECK(run("axioms --comparator maximax").exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string command = "verify " + kFixtures + "/no-lexne.json " + kFixtures +
                              "/no-lexne-minne.json --concept minne";
  CHECK(run(command).output == run(command).output);
  const std::string seeded = "axioms --comparator min --samples 25 --seed 11";
  CHECK(run(seeded).output == run(seeded).output);
}
