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

#include <string>
#include <vector>

#include "domlab/game_io.hpp"
#include "domlab/random_games.hpp"

namespace domlab::cli {

struct SuiteCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // First few failures, for diagnosis.
  std::vector<std::string> examples;

  bool passed() const { return failures == 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  // Games whose lattice exceeded the exhaustive cap in the monotonicity
  // suite.
  std::size_t skipped_games = 0;

  bool passed() const;
};

// Known names: all, chains, theorems, equalities, monotonicity,
// certificates, oracle. Throws std::invalid_argument for others.
SuiteResult run_suite(const std::string& suite, const GeneratorConfig& config,
                      std::size_t games);

Json suite_to_json(const SuiteResult& result, const GeneratorConfig& config,
                   std::size_t games);

// Every expected result for the two bundled games.
SuiteResult run_paper_examples(const GamePtr& section3,
                               const GamePtr& example41);

}  // namespace domlab::cli
