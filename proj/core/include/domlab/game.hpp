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

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "domlab/rational.hpp"

namespace domlab {

using PlayerIndex = std::size_t;
using StrategyIndex = std::size_t;

struct PlayerSpec {
  std::string name;
  std::vector<std::string> strategies;
};

// One strategy index per player.
struct StrategyProfile {
  std::vector<StrategyIndex> choices;

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
};

// s_{-i}: one strategy for every player except `player`, in player order.
struct OpponentProfile {
  PlayerIndex player = 0;
  std::vector<StrategyIndex> others;

  // Builds (own, s_{-i}).
  StrategyProfile complete(StrategyIndex own) const;

  friend bool operator==(const OpponentProfile&,
                         const OpponentProfile&) = default;
};

// Immutable n-player normal-form game with exact rational payoffs.
//
// Payoffs are stored densely, one block of n values per full profile, with
// profiles laid out row-major in player order (the last player's strategy
// varies fastest).
class Game {
 public:
  // `profile_payoffs[k]` holds the n payoffs of the k-th profile in
  // row-major order. Throws GameFormatError when the shape is wrong, a
  // player has no strategies, fewer than two players are given, or a
  // player repeats a strategy name.
  Game(std::vector<PlayerSpec> players,
       std::vector<std::vector<Rational>> profile_payoffs);

  std::size_t player_count() const { return players_.size(); }
  std::size_t strategy_count(PlayerIndex player) const;
  std::size_t total_strategy_count() const;
  std::size_t profile_count() const { return profile_count_; }

  const PlayerSpec& player(PlayerIndex player) const;
  const std::vector<PlayerSpec>& players() const { return players_; }
  const std::string& strategy_name(PlayerIndex player,
                                   StrategyIndex strategy) const;

  // Throws InvalidProfileError when the name is unknown.
  StrategyIndex strategy_index(PlayerIndex player,
                               const std::string& name) const;

  // Row-major position of a full profile. Throws InvalidProfileError.
  std::size_t flat_index(const StrategyProfile& profile) const;
  // Distance in flat positions between consecutive strategies of `player`.
  std::size_t stride(PlayerIndex player) const { return strides_[player]; }

  // Unchecked access by flat profile position.
  const Rational& payoff_at(PlayerIndex player, std::size_t flat) const {
    return payoffs_[flat * players_.size() + player];
  }

  friend bool operator==(const Game& a, const Game& b);

 private:
  std::vector<PlayerSpec> players_;
  std::vector<std::size_t> strides_;
  std::size_t profile_count_ = 0;
  std::vector<Rational> payoffs_;
};

using GamePtr = std::shared_ptr<const Game>;

GamePtr make_game(std::vector<PlayerSpec> players,
                  std::vector<std::vector<Rational>> profile_payoffs);

// Exact probability distribution over one player's strategies. Zero
// weights are dropped, so the stored map is the support.
class MixedStrategy {
 public:
  // Throws InvalidDistributionError when a weight is negative or the
  // weights do not sum to exactly one.
  MixedStrategy(PlayerIndex player, std::map<StrategyIndex, Rational> weights);

  static MixedStrategy point_mass(PlayerIndex player, StrategyIndex strategy);

  PlayerIndex player() const { return player_; }
  const std::map<StrategyIndex, Rational>& weights() const { return weights_; }
  Rational weight(StrategyIndex strategy) const;
  bool is_pure() const { return weights_.size() == 1; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  PlayerIndex player_;
  std::map<StrategyIndex, Rational> weights_;
};

// p_i(s). Throws InvalidProfileError on a malformed profile.
const Rational& payoff(const Game& game, PlayerIndex player,
                       const StrategyProfile& profile);

// p_i(m_i, s_{-i}) = sum over the support of weight * p_i(s'_i, s_{-i}).
Rational expected_payoff(const Game& game, PlayerIndex player,
                         const MixedStrategy& mixed,
                         const OpponentProfile& opponents);

// Per-player subsets of a fixed game's strategies; components may be
// empty. Holds the parent game by shared pointer and never copies payoffs.
class Restriction {
 public:
  // Kept sets are sorted and deduplicated. Throws InvalidProfileError
  // when an index is out of range or the player count is wrong.
  Restriction(GamePtr game, std::vector<std::vector<StrategyIndex>> kept);

  // The top element, identified with the game itself.
  static Restriction full(GamePtr game);
  // The bottom element: every component empty.
  static Restriction empty(GamePtr game);

  const Game& game() const { return *game_; }
  const GamePtr& game_ptr() const { return game_; }
  std::size_t player_count() const { return kept_.size(); }

  std::span<const StrategyIndex> kept(PlayerIndex player) const {
    return kept_[player];
  }
  const std::vector<std::vector<StrategyIndex>>& kept_sets() const {
    return kept_;
  }
  bool contains(PlayerIndex player, StrategyIndex strategy) const;

  // Total number of kept strategies (rank in the lattice).
  std::size_t size() const;
  // All components non-empty.
  bool is_subgame() const;
  bool is_full() const;

  bool is_subset_of(const Restriction& other) const;
  Restriction meet(const Restriction& other) const;
  Restriction join(const Restriction& other) const;
  Restriction without(PlayerIndex player, StrategyIndex strategy) const;

  // S_{-i} in lexicographic order; empty when some opponent keeps nothing.
  std::vector<OpponentProfile> opponent_profiles(PlayerIndex player) const;

  // Row-major flat positions of (first strategy of `player`, s_{-i}) for
  // every s_{-i}, in the same order as opponent_profiles. Adding
  // s * game().stride(player) selects strategy s.
  std::vector<std::size_t> opponent_offsets(PlayerIndex player) const;

  friend bool operator==(const Restriction& a, const Restriction& b);
  // Lexicographic order on kept sets; games must match.
  friend bool operator<(const Restriction& a, const Restriction& b) {
    return a.kept_ < b.kept_;
  }

 private:
  GamePtr game_;
  std::vector<std::vector<StrategyIndex>> kept_;
};

Restriction restriction_of(GamePtr game,
                           std::vector<std::vector<StrategyIndex>> kept);

std::vector<OpponentProfile> opponent_profiles(const Restriction& restriction,
                                               PlayerIndex player);

}  // namespace domlab
