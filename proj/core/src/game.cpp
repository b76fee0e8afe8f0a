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

#include "domlab/game.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "domlab/errors.hpp"

namespace domlab {

StrategyProfile OpponentProfile::complete(StrategyIndex own) const {
  StrategyProfile profile;
  profile.choices.reserve(others.size() + 1);
  profile.choices.insert(profile.choices.end(), others.begin(),
                         others.begin() + static_cast<std::ptrdiff_t>(player));
  profile.choices.push_back(own);
  profile.choices.insert(profile.choices.end(),
                         others.begin() + static_cast<std::ptrdiff_t>(player),
                         others.end());
  return profile;
}

Game::Game(std::vector<PlayerSpec> players,
           std::vector<std::vector<Rational>> profile_payoffs)
    : players_(std::move(players)) {
  const std::size_t n = players_.size();
  if (n < 2) {
    throw GameFormatError("a game needs at least two players, got " +
                          std::to_string(n));
  }
  for (const auto& p : players_) {
    if (p.strategies.empty()) {
      throw GameFormatError("player \"" + p.name + "\" has no strategies");
    }
    std::set<std::string> seen;
    for (const auto& s : p.strategies) {
      if (!seen.insert(s).second) {
        throw GameFormatError("player \"" + p.name +
                              "\" repeats strategy name \"" + s + "\"");
      }
    }
  }
  strides_.assign(n, 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    strides_[i - 1] = strides_[i] * players_[i].strategies.size();
  }
  profile_count_ = strides_[0] * players_[0].strategies.size();
  if (profile_payoffs.size() != profile_count_) {
    throw GameFormatError("shape mismatch: expected " +
                          std::to_string(profile_count_) +
                          " payoff profiles, got " +
                          std::to_string(profile_payoffs.size()));
  }
  payoffs_.reserve(profile_count_ * n);
  for (std::size_t k = 0; k < profile_count_; ++k) {
    if (profile_payoffs[k].size() != n) {
      throw GameFormatError("shape mismatch: profile " + std::to_string(k) +
                            " has " +
                            std::to_string(profile_payoffs[k].size()) +
                            " payoffs, expected " + std::to_string(n));
    }
    for (auto& v : profile_payoffs[k]) payoffs_.push_back(std::move(v));
  }
}

std::size_t Game::strategy_count(PlayerIndex player) const {
  return this->player(player).strategies.size();
}

std::size_t Game::total_strategy_count() const {
  std::size_t total = 0;
  for (const auto& p : players_) total += p.strategies.size();
  return total;
}

const PlayerSpec& Game::player(PlayerIndex player) const {
  if (player >= players_.size()) {
    throw InvalidProfileError("player index " + std::to_string(player) +
                              " out of range");
  }
  return players_[player];
}

const std::string& Game::strategy_name(PlayerIndex player,
                                       StrategyIndex strategy) const {
  const auto& p = this->player(player);
  if (strategy >= p.strategies.size()) {
    throw InvalidProfileError("strategy index " + std::to_string(strategy) +
                              " out of range for player \"" + p.name + "\"");
  }
  return p.strategies[strategy];
}

StrategyIndex Game::strategy_index(PlayerIndex player,
                                   const std::string& name) const {
  const auto& p = this->player(player);
  const auto it = std::find(p.strategies.begin(), p.strategies.end(), name);
  if (it == p.strategies.end()) {
    throw InvalidProfileError("player \"" + p.name +
                              "\" has no strategy named \"" + name + "\"");
  }
  return static_cast<StrategyIndex>(it - p.strategies.begin());
}

std::size_t Game::flat_index(const StrategyProfile& profile) const {
  if (profile.choices.size() != players_.size()) {
    throw InvalidProfileError("profile has " +
                              std::to_string(profile.choices.size()) +
                              " entries, expected " +
                              std::to_string(players_.size()));
  }
  std::size_t flat = 0;
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (profile.choices[i] >= players_[i].strategies.size()) {
      throw InvalidProfileError("strategy index " +
                                std::to_string(profile.choices[i]) +
                                " out of range for player \"" +
                                players_[i].name + "\"");
    }
    flat += profile.choices[i] * strides_[i];
  }
  return flat;
}

bool operator==(const Game& a, const Game& b) {
  if (a.players_.size() != b.players_.size()) return false;
  for (std::size_t i = 0; i < a.players_.size(); ++i) {
    if (a.players_[i].name != b.players_[i].name ||
        a.players_[i].strategies != b.players_[i].strategies) {
      return false;
    }
  }
  return a.payoffs_ == b.payoffs_;
}

GamePtr make_game(std::vector<PlayerSpec> players,
                  std::vector<std::vector<Rational>> profile_payoffs) {
  return std::make_shared<const Game>(std::move(players),
                                      std::move(profile_payoffs));
}

MixedStrategy::MixedStrategy(PlayerIndex player,
                             std::map<StrategyIndex, Rational> weights)
    : player_(player) {
  Rational total;
  for (auto& [s, w] : weights) {
    if (w.sign() < 0) {
      throw InvalidDistributionError("negative weight " + w.to_string() +
                                     " on strategy " + std::to_string(s));
    }
    total += w;
    if (!w.is_zero()) weights_.emplace(s, std::move(w));
  }
  if (total != Rational(1)) {
    throw InvalidDistributionError("weights sum to " + total.to_string() +
                                   ", expected 1");
  }
}

MixedStrategy MixedStrategy::point_mass(PlayerIndex player,
                                        StrategyIndex strategy) {
  return MixedStrategy(player, {{strategy, Rational(1)}});
}

Rational MixedStrategy::weight(StrategyIndex strategy) const {
  const auto it = weights_.find(strategy);
  return it == weights_.end() ? Rational(0) : it->second;
}

const Rational& payoff(const Game& game, PlayerIndex player,
                       const StrategyProfile& profile) {
  game.player(player);
  return game.payoff_at(player, game.flat_index(profile));
}

Rational expected_payoff(const Game& game, PlayerIndex player,
                         const MixedStrategy& mixed,
                         const OpponentProfile& opponents) {
  if (mixed.player() != player || opponents.player != player) {
    throw InvalidProfileError("mixed strategy or opponent profile belongs to "
                              "a different player");
  }
  if (opponents.others.size() + 1 != game.player_count()) {
    throw InvalidProfileError("opponent profile must name exactly one "
                              "strategy per other player");
  }
  Rational total;
  for (const auto& [s, w] : mixed.weights()) {
    total += w * payoff(game, player, opponents.complete(s));
  }
  return total;
}

Restriction::Restriction(GamePtr game,
                         std::vector<std::vector<StrategyIndex>> kept)
    : game_(std::move(game)), kept_(std::move(kept)) {
  if (kept_.size() != game_->player_count()) {
    throw InvalidProfileError("restriction has " +
                              std::to_string(kept_.size()) +
                              " components, expected " +
                              std::to_string(game_->player_count()));
  }
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    auto& set = kept_[i];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty() && set.back() >= game_->strategy_count(i)) {
      throw InvalidProfileError("strategy index " + std::to_string(set.back()) +
                                " out of range for player \"" +
                                game_->player(i).name + "\"");
    }
  }
}

Restriction Restriction::full(GamePtr game) {
  std::vector<std::vector<StrategyIndex>> kept(game->player_count());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    kept[i].resize(game->strategy_count(i));
    for (std::size_t s = 0; s < kept[i].size(); ++s) kept[i][s] = s;
  }
  return Restriction(std::move(game), std::move(kept));
}

Restriction Restriction::empty(GamePtr game) {
  const auto n = game->player_count();
  return Restriction(std::move(game),
                     std::vector<std::vector<StrategyIndex>>(n));
}

bool Restriction::contains(PlayerIndex player, StrategyIndex strategy) const {
  const auto& set = kept_.at(player);
  return std::binary_search(set.begin(), set.end(), strategy);
}

std::size_t Restriction::size() const {
  std::size_t total = 0;
  for (const auto& set : kept_) total += set.size();
  return total;
}

bool Restriction::is_subgame() const {
  return std::none_of(kept_.begin(), kept_.end(),
                      [](const auto& set) { return set.empty(); });
}

bool Restriction::is_full() const {
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    if (kept_[i].size() != game_->strategy_count(i)) return false;
  }
  return true;
}

bool Restriction::is_subset_of(const Restriction& other) const {
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    if (!std::includes(other.kept_[i].begin(), other.kept_[i].end(),
                       kept_[i].begin(), kept_[i].end())) {
      return false;
    }
  }
  return true;
}

Restriction Restriction::meet(const Restriction& other) const {
  std::vector<std::vector<StrategyIndex>> kept(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    std::set_intersection(kept_[i].begin(), kept_[i].end(),
                          other.kept_[i].begin(), other.kept_[i].end(),
                          std::back_inserter(kept[i]));
  }
  return Restriction(game_, std::move(kept));
}

Restriction Restriction::join(const Restriction& other) const {
  std::vector<std::vector<StrategyIndex>> kept(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    std::set_union(kept_[i].begin(), kept_[i].end(), other.kept_[i].begin(),
                   other.kept_[i].end(), std::back_inserter(kept[i]));
  }
  return Restriction(game_, std::move(kept));
}

Restriction Restriction::without(PlayerIndex player,
                                 StrategyIndex strategy) const {
  auto kept = kept_;
  auto& set = kept.at(player);
  set.erase(std::remove(set.begin(), set.end(), strategy), set.end());
  return Restriction(game_, std::move(kept));
}

std::vector<OpponentProfile> Restriction::opponent_profiles(
    PlayerIndex player) const {
  game_->player(player);
  std::vector<OpponentProfile> out;
  const std::size_t n = kept_.size();
  std::vector<PlayerIndex> others;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == player) continue;
    if (kept_[j].empty()) return out;
    others.push_back(j);
  }
  // Odometer over the opponents' kept sets, last opponent fastest.
  std::vector<std::size_t> cursor(others.size(), 0);
  while (true) {
    OpponentProfile profile{player, {}};
    profile.others.reserve(others.size());
    for (std::size_t k = 0; k < others.size(); ++k) {
      profile.others.push_back(kept_[others[k]][cursor[k]]);
    }
    out.push_back(std::move(profile));
    std::size_t k = others.size();
    while (k > 0) {
      --k;
      if (++cursor[k] < kept_[others[k]].size()) break;
      cursor[k] = 0;
      if (k == 0) return out;
    }
    if (others.empty()) return out;
  }
}

std::vector<std::size_t> Restriction::opponent_offsets(
    PlayerIndex player) const {
  std::vector<std::size_t> offsets;
  for (const auto& profile : opponent_profiles(player)) {
    std::size_t flat = 0;
    std::size_t k = 0;
    for (std::size_t j = 0; j < kept_.size(); ++j) {
      if (j == player) continue;
      flat += profile.others[k++] * game_->stride(j);
    }
    offsets.push_back(flat);
  }
  return offsets;
}

bool operator==(const Restriction& a, const Restriction& b) {
  return (a.game_ == b.game_ || *a.game_ == *b.game_) && a.kept_ == b.kept_;
}

Restriction restriction_of(GamePtr game,
                           std::vector<std::vector<StrategyIndex>> kept) {
  return Restriction(std::move(game), std::move(kept));
}

std::vector<OpponentProfile> opponent_profiles(const Restriction& restriction,
                                               PlayerIndex player) {
  return restriction.opponent_profiles(player);
}

}  // namespace domlab
