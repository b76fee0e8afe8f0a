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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "domlab/random_games.hpp"

namespace domlab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,  // I/O, parse or usage error
  kExitViolation = 2,
  kExitBudget = 3,
};

enum class OutputFormat { kJson, kTable };

struct ApplyCommand {
  std::string op;
  std::string game_path;
  std::optional<std::string> restriction;
};

enum class SolveOrder { kSimultaneous, kDeterministic, kSeeded };

struct SolveCommand {
  std::string op;
  std::string game_path;
  bool trace = false;
  SolveOrder order = SolveOrder::kSimultaneous;
  std::uint64_t seed = 0;
};

struct CompareCommand {
  std::string left;
  std::string right;
  std::string game_path;
};

enum class BudgetKind { kExhaustive, kSampled, kCovers };

struct BudgetOptions {
  BudgetKind kind = BudgetKind::kExhaustive;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::size_t cap = std::size_t{1} << 12;
};

struct CheckMonotonicCommand {
  std::string op;
  std::string game_path;
  BudgetOptions budget;
};

struct PointwiseCommand {
  std::string left;
  std::string right;
  std::string game_path;
  BudgetOptions budget;
};

struct LemmaCommand {
  std::string t;
  std::string u;
  std::string game_path;
  std::size_t cap = std::size_t{1} << 12;
};

struct EqualitiesCommand {
  std::string game_path;
};

struct VerifyCommand {
  // all, chains, theorems, equalities, monotonicity, certificates, oracle
  std::string suite = "all";
  std::size_t games = 200;
  GeneratorConfig config;
};

struct PaperExamplesCommand {
  std::string games_dir;
};

struct GenerateCommand {
  GeneratorConfig config;
};

using Command =
    std::variant<ApplyCommand, SolveCommand, CompareCommand,
                 CheckMonotonicCommand, PointwiseCommand, LemmaCommand,
                 EqualitiesCommand, VerifyCommand, PaperExamplesCommand,
                 GenerateCommand>;

struct Invocation {
  Command command;
  OutputFormat format = OutputFormat::kJson;
};

// Directory holding the bundled example games when --games-dir is absent.
std::string default_games_dir();

// Default seed for `verify` and `generate`; DOMINANCE_LAB_SEED overrides.
std::uint64_t default_suite_seed();

// Runs one command and returns its exit status. Usage errors, bad game
// files and I/O failures print to `err` and return kExitError.
int execute(const Invocation& invocation, std::ostream& out,
            std::ostream& err);

// Parses argv-style arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace domlab::cli
