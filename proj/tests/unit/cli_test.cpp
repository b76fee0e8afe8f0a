// Copyright 2026 The Dominance Lab Authors.
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

#include "domlab_cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "domlab/game_io.hpp"

namespace domlab::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string game_path(const std::string& name) {
  return std::string(DOMLAB_TEST_GAMES_DIR) + "/" + name;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / ("domlab_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

TEST(CliTest, SolveMixedWeak) {
  const auto r = invoke({"solve", "--operator", "mlw",
                         game_path("example41.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["operator"], "mlw");
  EXPECT_EQ(doc["fixpoint"], Json::parse(R"([["A","B"],["X","Y"]])"));
}

TEST(CliTest, SolveWeakTrace) {
  const auto r = invoke({"solve", "--operator", "lw",
                         game_path("example41.json"), "--trace"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["eliminating_steps"], 3);
  EXPECT_EQ(doc["fixpoint"], Json::parse(R"([["A"],["X"]])"));
  ASSERT_EQ(doc["steps"].size(), 4u);
  EXPECT_EQ(doc["steps"][1]["before"],
            Json::parse(R"([["A","B","C"],["X","Y"]])"));
}

TEST(CliTest, PaperExamplesPass) {
  const auto r = invoke({"paper-examples"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  const auto table = invoke({"--format", "table", "paper-examples"});
  EXPECT_EQ(table.code, kExitOk);
  EXPECT_EQ(table.out.find("FAIL"), std::string::npos);
}

TEST(CliTest, AlteredGameMakesPaperExamplesFail) {
  const auto dir = scratch_dir("altered");
  fs::copy_file(game_path("example41.json"), dir / "example41.json");
  write_file(dir / "section3.json", R"({
  "players": [
    {"name": "Row", "strategies": ["A", "B"]},
    {"name": "Column", "strategies": ["X"]}
  ],
  "payoffs": [[[0, 0]], [[1, 0]]]
})");
  const auto r = invoke({"paper-examples", "--games-dir", dir.string()});
  EXPECT_EQ(r.code, kExitViolation);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({"solve", "--operator", "xx", game_path("section3.json")})
                .code,
            kExitError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitError);
  EXPECT_EQ(invoke({"solve", "--operator", "ls", "/nonexistent/game.json"})
                .code,
            kExitError);
  EXPECT_EQ(invoke({"verify", "--suite", "nonsense", "--games", "1"}).code,
            kExitError);
}

TEST(CliTest, MalformedJsonReportsPosition) {
  const auto dir = scratch_dir("malformed");
  write_file(dir / "bad.json",
             "{\n  \"players\": [\n    {\"name\": \"Row\"},\n  ]\n}");
  const auto r = invoke({"solve", "-o", "ls", (dir / "bad.json").string()});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("line 4, column 3"), std::string::npos) << r.err;
}

TEST(CliTest, ExhaustiveBudgetExceeded) {
  const auto dir = scratch_dir("budget");
  const auto game = dir / "big.json";
  const auto g = invoke({"generate", "--seed", "4", "--min-strategies", "7",
                         "--max-strategies", "7"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  write_file(game, g.out);
  const auto r = invoke({"check-monotonic", "-o", "gs", game.string()});
  EXPECT_EQ(r.code, kExitBudget) << r.err;
  const auto sampled = invoke({"check-monotonic", "-o", "gs", game.string(),
                               "--budget", "sampled", "--samples", "50"});
  EXPECT_EQ(sampled.code, kExitOk) << sampled.err;
}

TEST(CliTest, CheckMonotonicWitness) {
  const auto r = invoke({"check-monotonic", "-o", "ls",
                         game_path("section3.json")});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["witness"]["smaller"], Json::parse(R"([["B"],["X"]])"));
  EXPECT_EQ(doc["witness"]["larger"], Json::parse(R"([["A","B"],["X"]])"));
  EXPECT_EQ(doc["witness"]["evidence"]["strategy"], "B");
}

TEST(CliTest, CompareAndApply) {
  const auto cmp = invoke({"compare", "--left", "mlw", "--right", "lw",
                           game_path("example41.json")});
  ASSERT_EQ(cmp.code, kExitOk) << cmp.err;
  EXPECT_EQ(Json::parse(cmp.out)["relation"], "superset");
  const auto apply = invoke({"apply", "-o", "ls", game_path("section3.json"),
                             "--restriction", "B;X"});
  ASSERT_EQ(apply.code, kExitOk) << apply.err;
  EXPECT_EQ(Json::parse(apply.out)["after"], Json::parse(R"([["B"],["X"]])"));
}

TEST(CliTest, VerifySmallSuite) {
  const auto r = invoke({"verify", "--suite", "all", "--games", "10",
                         "--seed", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST(CliTest, OutputIsByteDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "-o", "mlw", game_path("example41.json"), "--trace"},
      {"verify", "--suite", "chains", "--games", "5", "--seed", "11"},
      {"generate", "--seed", "77", "--max-players", "3"},
      {"--format", "table", "equalities", game_path("example41.json")},
  };
  for (const auto& args : commands) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliTest, EnvironmentSeed) {
  ::setenv("DOMINANCE_LAB_SEED", "4242", 1);
  EXPECT_EQ(default_suite_seed(), 4242u);
  const auto from_env = invoke({"generate"});
  ::unsetenv("DOMINANCE_LAB_SEED");
  const auto explicit_seed = invoke({"generate", "--seed", "4242"});
  EXPECT_EQ(from_env.out, explicit_seed.out);
}

TEST(CliTest, GeneratedGameLoads) {
  const auto r = invoke({"generate", "--seed", "1", "--max-players", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NO_THROW(parse_game(r.out));
}

}  // namespace
}  // namespace domlab::cli
