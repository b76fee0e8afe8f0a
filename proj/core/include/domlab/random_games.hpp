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
#include <vector>

#include "domlab/game.hpp"
#include "domlab/game_io.hpp"

namespace domlab {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t min_players = 2;
  std::size_t max_players = 2;
  std::size_t min_strategies = 2;
  std::size_t max_strategies = 4;
  std::int64_t payoff_min = -5;
  std::int64_t payoff_max = 5;
  // Probability that an entry copies the payoff of an earlier strategy of
  // the same player against the same opponent profile.
  double tie_bias = 0.25;
  // Every column (player, opponent profile) gets pairwise distinct payoffs.
  // Requires the payoff range to hold at least max_strategies values;
  // tie_bias is ignored.
  bool distinct_payoffs = false;

  // Throws ConfigError when a range is empty, there are fewer than two
  // players, tie_bias is outside [0, 1], or distinct mode cannot be met.
  void validate() const;
};

// Reads any subset of the fields above from a JSON object; unknown keys are
// rejected. Throws ConfigError.
GeneratorConfig config_from_json(const Json& doc);
Json config_to_json(const GeneratorConfig& config);

// Deterministic in the config. Players are named P1, P2, ... and
// strategies A, B, C, ...
GamePtr generate(const GeneratorConfig& config);

// `count` games whose seeds are derived from config.seed and the position
// in the batch.
std::vector<GamePtr> generate_batch(const GeneratorConfig& config,
                                    std::size_t count);

}  // namespace domlab
