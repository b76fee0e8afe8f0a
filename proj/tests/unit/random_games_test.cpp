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

#include <set>

#include <gtest/gtest.h>

#include "domlab/errors.hpp"
#include "domlab/operators.hpp"

namespace domlab {
namespace {

TEST(GeneratorTest, SameSeedSameGame) {
  GeneratorConfig config;
  config.seed = 99;
  config.max_players = 3;
  EXPECT_EQ(*generate(config), *generate(config));
  const auto a = generate_batch(config, 20);
  const auto b = generate_batch(config, 20);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(*a[k], *b[k]);
}

TEST(GeneratorTest, ShapeAndRangeRespected) {
  GeneratorConfig config;
  config.seed = 5;
  config.min_players = 2;
  config.max_players = 3;
  config.min_strategies = 2;
  config.max_strategies = 4;
  config.payoff_min = -2;
  config.payoff_max = 3;
  for (const auto& game : generate_batch(config, 100)) {
    EXPECT_GE(game->player_count(), 2u);
    EXPECT_LE(game->player_count(), 3u);
    for (PlayerIndex i = 0; i < game->player_count(); ++i) {
      EXPECT_GE(game->strategy_count(i), 2u);
      EXPECT_LE(game->strategy_count(i), 4u);
      for (std::size_t flat = 0; flat < game->profile_count(); ++flat) {
        const Rational v = game->payoff_at(i, flat);
        EXPECT_TRUE(v.is_integer());
        EXPECT_GE(v, Rational(-2));
        EXPECT_LE(v, Rational(3));
      }
    }
  }
}

TEST(GeneratorTest, DistinctSeedsRarelyCollide) {
  GeneratorConfig config;
  config.seed = 2024;
  const auto games = generate_batch(config, 300);
  std::size_t collisions = 0;
  for (std::size_t a = 0; a < games.size(); ++a) {
    for (std::size_t b = a + 1; b < games.size(); ++b) {
      if (*games[a] == *games[b]) ++collisions;
    }
  }
  RecordProperty("collisions", static_cast<int>(collisions));
  EXPECT_LE(collisions, 1u);
}

TEST(GeneratorTest, TieBiasProducesTies) {
  GeneratorConfig config;
  config.seed = 8;
  config.tie_bias = 1.0;
  const auto game = generate(config);
  // Every entry copies strategy 0's payoff in its column.
  for (PlayerIndex i = 0; i < game->player_count(); ++i) {
    const std::size_t stride = game->stride(i);
    for (std::size_t flat = 0; flat < game->profile_count(); ++flat) {
      const std::size_t s = flat / stride % game->strategy_count(i);
      EXPECT_EQ(game->payoff_at(i, flat), game->payoff_at(i, flat - s * stride));
    }
  }
}

TEST(GeneratorTest, DistinctColumns) {
  GeneratorConfig config;
  config.seed = 17;
  config.max_players = 3;
  config.distinct_payoffs = true;
  config.tie_bias = 0.9;
  for (const auto& game : generate_batch(config, 100)) {
    for (PlayerIndex i = 0; i < game->player_count(); ++i) {
      for (const auto& offset :
           Restriction::full(game).opponent_offsets(i)) {
        std::set<Rational> column;
        for (StrategyIndex s = 0; s < game->strategy_count(i); ++s) {
          column.insert(game->payoff_at(i, offset + s * game->stride(i)));
        }
        EXPECT_EQ(column.size(), game->strategy_count(i));
      }
    }
  }
}

TEST(GeneratorTest, DistinctPayoffsMakeWeakAndStrictCoincide) {
  GeneratorConfig config;
  config.seed = 18;
  config.max_players = 3;
  config.distinct_payoffs = true;
  for (const auto& game : generate_batch(config, 100)) {
    const auto ls = iterate(kLS, game);
    for (const auto& step : ls.steps) {
      EXPECT_EQ(apply_operator(kLW, step.before).after, step.after);
    }
    EXPECT_EQ(ls.fixpoint, fixpoint(kLW, game));
    EXPECT_EQ(fixpoint(kGS, game), fixpoint(kGW, game));
  }
}

TEST(GeneratorTest, SingleStrategyGamesAreFixedImmediately) {
  GeneratorConfig config;
  config.seed = 3;
  config.min_strategies = 1;
  config.max_strategies = 1;
  config.max_players = 4;
  for (const auto& game : generate_batch(config, 10)) {
    for (const auto& kind : OperatorKind::all()) {
      const auto trace = iterate(kind, game);
      EXPECT_EQ(trace.steps.size(), 1u);
      EXPECT_TRUE(trace.fixpoint.is_full());
    }
  }
}

TEST(GeneratorConfigTest, Validation) {
  auto bad = [](auto mutate) {
    GeneratorConfig config;
    mutate(config);
    return config;
  };
  EXPECT_THROW(bad([](auto& c) { c.min_players = 1; }).validate(), ConfigError);
  EXPECT_THROW(bad([](auto& c) { c.max_players = 1; }).validate(), ConfigError);
  EXPECT_THROW(bad([](auto& c) { c.min_strategies = 0; }).validate(),
               ConfigError);
  EXPECT_THROW(bad([](auto& c) { c.min_strategies = 5; }).validate(),
               ConfigError);
  EXPECT_THROW(bad([](auto& c) { c.payoff_min = 6; }).validate(), ConfigError);
  EXPECT_THROW(bad([](auto& c) { c.tie_bias = 1.5; }).validate(), ConfigError);
  EXPECT_THROW(bad([](auto& c) {
                 c.distinct_payoffs = true;
                 c.payoff_min = 0;
                 c.payoff_max = 2;
               }).validate(),
               ConfigError);
  EXPECT_NO_THROW(GeneratorConfig{}.validate());
}

TEST(GeneratorConfigTest, JsonRoundTrip) {
  GeneratorConfig config;
  config.seed = 12345;
  config.max_players = 3;
  config.tie_bias = 0.5;
  config.distinct_payoffs = true;
  const auto back = config_from_json(config_to_json(config));
  EXPECT_EQ(config_to_json(back), config_to_json(config));
  EXPECT_THROW(config_from_json(Json::parse(R"({"seeds": 1})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"seed": "x"})")), ConfigError);
  EXPECT_THROW(config_from_json(Json::parse("[]")), ConfigError);
  EXPECT_EQ(config_from_json(Json::parse(R"({"max_strategies": 3})"))
                .max_strategies,
            3u);
}

}  // namespace
}  // namespace domlab
