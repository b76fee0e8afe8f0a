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

#include "domlab/random_games.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "domlab/errors.hpp"

namespace domlab {
namespace {

std::string strategy_label(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "S" + std::to_string(index + 1);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

void GeneratorConfig::validate() const {
  if (min_players < 2) throw ConfigError("min_players must be at least 2");
  if (min_players > max_players) {
    throw ConfigError("player range is empty");
  }
  if (min_strategies < 1) {
    throw ConfigError("min_strategies must be at least 1");
  }
  if (min_strategies > max_strategies) {
    throw ConfigError("strategy range is empty");
  }
  if (payoff_min > payoff_max) throw ConfigError("payoff range is empty");
  if (!(tie_bias >= 0.0 && tie_bias <= 1.0)) {
    throw ConfigError("tie_bias must lie in [0, 1]");
  }
  if (distinct_payoffs &&
      static_cast<std::uint64_t>(payoff_max - payoff_min) + 1 <
          max_strategies) {
    throw ConfigError("distinct payoffs need at least max_strategies values "
                      "in the payoff range");
  }
}

GeneratorConfig config_from_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("generator config must be an object");
  GeneratorConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "min_players") {
        config.min_players = value.get<std::size_t>();
      } else if (key == "max_players") {
        config.max_players = value.get<std::size_t>();
      } else if (key == "min_strategies") {
        config.min_strategies = value.get<std::size_t>();
      } else if (key == "max_strategies") {
        config.max_strategies = value.get<std::size_t>();
      } else if (key == "payoff_min") {
        config.payoff_min = value.get<std::int64_t>();
      } else if (key == "payoff_max") {
        config.payoff_max = value.get<std::int64_t>();
      } else if (key == "tie_bias") {
        config.tie_bias = value.get<double>();
      } else if (key == "distinct_payoffs") {
        config.distinct_payoffs = value.get<bool>();
      } else {
        throw ConfigError("unknown generator config key \"" + key + "\"");
      }
    }
  } catch (const Json::type_error& e) {
    throw ConfigError(std::string("generator config: ") + e.what());
  }
  config.validate();
  return config;
}

Json config_to_json(const GeneratorConfig& config) {
  return Json{{"seed", config.seed},
              {"min_players", config.min_players},
              {"max_players", config.max_players},
              {"min_strategies", config.min_strategies},
              {"max_strategies", config.max_strategies},
              {"payoff_min", config.payoff_min},
              {"payoff_max", config.payoff_max},
              {"tie_bias", config.tie_bias},
              {"distinct_payoffs", config.distinct_payoffs}};
}

GamePtr generate(const GeneratorConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  const auto n = std::uniform_int_distribution<std::size_t>(
      config.min_players, config.max_players)(rng);
  std::vector<PlayerSpec> players(n);
  std::vector<std::size_t> counts(n);
  std::uniform_int_distribution<std::size_t> strategy_dist(
      config.min_strategies, config.max_strategies);
  for (std::size_t i = 0; i < n; ++i) {
    counts[i] = strategy_dist(rng);
    players[i].name = "P" + std::to_string(i + 1);
    for (std::size_t s = 0; s < counts[i]; ++s) {
      players[i].strategies.push_back(strategy_label(s));
    }
  }

  std::vector<std::size_t> strides(n, 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    strides[i - 1] = strides[i] * counts[i];
  }
  const std::size_t profiles = strides[0] * counts[0];
  std::vector<std::vector<std::int64_t>> values(
      profiles, std::vector<std::int64_t>(n, 0));

  std::uniform_int_distribution<std::int64_t> value_dist(config.payoff_min,
                                                         config.payoff_max);
  std::bernoulli_distribution tie(config.tie_bias);
  // Fill column by column: a column is (player i, profile with player i's
  // own strategy at 0).
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t stride = strides[i];
    for (std::size_t flat = 0; flat < profiles; ++flat) {
      if ((flat / stride) % counts[i] != 0) continue;
      if (config.distinct_payoffs) {
        std::vector<std::int64_t> used;
        for (std::size_t s = 0; s < counts[i]; ++s) {
          std::int64_t v;
          do {
            v = value_dist(rng);
          } while (std::find(used.begin(), used.end(), v) != used.end());
          used.push_back(v);
          values[flat + s * stride][i] = v;
        }
        continue;
      }
      for (std::size_t s = 0; s < counts[i]; ++s) {
        std::int64_t v;
        if (s > 0 && tie(rng)) {
          std::uniform_int_distribution<std::size_t> earlier(0, s - 1);
          v = values[flat + earlier(rng) * stride][i];
        } else {
          v = value_dist(rng);
        }
        values[flat + s * stride][i] = v;
      }
    }
  }

  std::vector<std::vector<Rational>> payoffs(profiles);
  for (std::size_t k = 0; k < profiles; ++k) {
    for (std::int64_t v : values[k]) payoffs[k].emplace_back(v);
  }
  return make_game(std::move(players), std::move(payoffs));
}

std::vector<GamePtr> generate_batch(const GeneratorConfig& config,
                                    std::size_t count) {
  std::vector<GamePtr> games;
  games.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    GeneratorConfig derived = config;
    derived.seed = mix_seed(config.seed, k);
    games.push_back(generate(derived));
  }
  return games;
}

}  // namespace domlab
