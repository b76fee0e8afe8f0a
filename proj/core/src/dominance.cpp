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

#include "domlab/dominance.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "domlab/errors.hpp"

namespace domlab {
namespace {

void check_strategy(const Game& game, PlayerIndex player,
                    StrategyIndex strategy) {
  if (strategy >= game.strategy_count(player)) {
    throw InvalidProfileError("strategy index " + std::to_string(strategy) +
                              " out of range for player \"" +
                              game.player(player).name + "\"");
  }
}

// Signed differences payoff(candidate) - payoff(target), one per offset.
template <typename CandidatePayoff>
bool dominates_over(const std::vector<std::size_t>& offsets,
                    const Game& game, PlayerIndex player, StrategyIndex target,
                    DominanceMode mode, CandidatePayoff&& candidate_payoff) {
  const std::size_t stride = game.stride(player);
  bool some_strict = false;
  for (std::size_t offset : offsets) {
    const Rational& base = game.payoff_at(player, offset + target * stride);
    const auto order = candidate_payoff(offset) <=> base;
    if (order < 0) return false;
    if (order == 0) {
      if (mode == DominanceMode::kStrict) return false;
    } else {
      some_strict = true;
    }
  }
  return mode == DominanceMode::kStrict ? true : some_strict;
}

bool pure_dominates(const std::vector<std::size_t>& offsets, const Game& game,
                    PlayerIndex player, StrategyIndex candidate,
                    StrategyIndex target, DominanceMode mode) {
  const std::size_t stride = game.stride(player);
  return dominates_over(offsets, game, player, target, mode,
                        [&](std::size_t offset) -> const Rational& {
                          return game.payoff_at(player,
                                                offset + candidate * stride);
                        });
}

bool mixed_dominates(const std::vector<std::size_t>& offsets,
                     const Game& game, PlayerIndex player,
                     const MixedStrategy& candidate, StrategyIndex target,
                     DominanceMode mode) {
  const std::size_t stride = game.stride(player);
  return dominates_over(offsets, game, player, target, mode,
                        [&](std::size_t offset) {
                          Rational total;
                          for (const auto& [s, w] : candidate.weights()) {
                            total += w * game.payoff_at(player,
                                                        offset + s * stride);
                          }
                          return total;
                        });
}

}  // namespace

std::string_view to_string(DominanceMode mode) {
  return mode == DominanceMode::kStrict ? "strict" : "weak";
}

std::string_view to_string(DominatorPool pool) {
  return pool == DominatorPool::kLocal ? "local" : "global";
}

bool dominates(const Dominator& candidate, StrategyIndex target,
               const Restriction& restriction, PlayerIndex player,
               DominanceMode mode) {
  const Game& game = restriction.game();
  check_strategy(game, player, target);
  const auto offsets = restriction.opponent_offsets(player);
  if (const auto* pure = std::get_if<StrategyIndex>(&candidate)) {
    check_strategy(game, player, *pure);
    return pure_dominates(offsets, game, player, *pure, target, mode);
  }
  const auto& mixed = std::get<MixedStrategy>(candidate);
  if (mixed.player() != player) {
    throw InvalidProfileError("mixed strategy belongs to player " +
                              std::to_string(mixed.player()) + ", not " +
                              std::to_string(player));
  }
  for (const auto& entry : mixed.weights()) {
    check_strategy(game, player, entry.first);
  }
  return mixed_dominates(offsets, game, player, mixed, target, mode);
}

std::vector<StrategyIndex> dominator_pool(const Restriction& restriction,
                                          PlayerIndex player,
                                          DominatorPool pool) {
  if (pool == DominatorPool::kLocal) {
    const auto kept = restriction.kept(player);
    return {kept.begin(), kept.end()};
  }
  std::vector<StrategyIndex> all(restriction.game().strategy_count(player));
  for (std::size_t s = 0; s < all.size(); ++s) all[s] = s;
  return all;
}

std::optional<StrategyIndex> find_pure_dominator(const Restriction& restriction,
                                                 PlayerIndex player,
                                                 StrategyIndex target,
                                                 DominatorPool pool,
                                                 DominanceMode mode) {
  const Game& game = restriction.game();
  check_strategy(game, player, target);
  const auto offsets = restriction.opponent_offsets(player);
  for (StrategyIndex candidate : dominator_pool(restriction, player, pool)) {
    if (pure_dominates(offsets, game, player, candidate, target, mode)) {
      return candidate;
    }
  }
  return std::nullopt;
}

LinearProgram dominance_program(const Restriction& restriction,
                                PlayerIndex player, StrategyIndex target,
                                std::span<const StrategyIndex> candidates,
                                DominanceMode mode) {
  const Game& game = restriction.game();
  const auto offsets = restriction.opponent_offsets(player);
  const std::size_t stride = game.stride(player);
  const std::size_t k = candidates.size();
  const bool strict = mode == DominanceMode::kStrict;

  LinearProgram lp;
  lp.variable_count = strict ? k + 2 : k;
  lp.objective.assign(lp.variable_count, Rational(0));
  if (strict) {
    lp.objective[k] = Rational(1);
    lp.objective[k + 1] = Rational(-1);
  }
  for (std::size_t offset : offsets) {
    LinearConstraint row;
    row.coefficients.assign(lp.variable_count, Rational(0));
    const Rational& base = game.payoff_at(player, offset + target * stride);
    for (std::size_t c = 0; c < k; ++c) {
      row.coefficients[c] =
          game.payoff_at(player, offset + candidates[c] * stride) - base;
      if (!strict) lp.objective[c] += row.coefficients[c];
    }
    if (strict) {
      row.coefficients[k] = Rational(-1);
      row.coefficients[k + 1] = Rational(1);
    }
    row.relation = Relation::kGreaterEqual;
    lp.constraints.push_back(std::move(row));
  }
  LinearConstraint simplex;
  simplex.coefficients.assign(lp.variable_count, Rational(0));
  for (std::size_t c = 0; c < k; ++c) simplex.coefficients[c] = Rational(1);
  simplex.relation = Relation::kEqual;
  simplex.rhs = Rational(1);
  lp.constraints.push_back(std::move(simplex));
  return lp;
}

MixedDominatorSearch search_mixed_dominator(const Restriction& restriction,
                                            PlayerIndex player,
                                            StrategyIndex target,
                                            DominatorPool pool,
                                            DominanceMode mode) {
  const Game& game = restriction.game();
  check_strategy(game, player, target);
  const auto candidates = dominator_pool(restriction, player, pool);
  if (candidates.empty()) {
    throw NoCandidatesError("empty dominator pool for player \"" +
                            game.player(player).name + "\"");
  }
  if (restriction.opponent_offsets(player).empty()) {
    if (mode == DominanceMode::kWeak) return {};
    return {MixedStrategy::point_mass(player, candidates.front()), std::nullopt};
  }

  const LinearProgram lp =
      dominance_program(restriction, player, target, candidates, mode);
  const LpResult result = solve_lp(lp);
  if (result.status != LpStatus::kOptimal) {
    throw std::logic_error("dominance program is always feasible");
  }
  MixedDominatorSearch search;
  search.optimum = result.value;
  if (result.value.sign() > 0) {
    std::map<StrategyIndex, Rational> weights;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!result.assignment[c].is_zero()) {
        weights.emplace(candidates[c], result.assignment[c]);
      }
    }
    search.witness = MixedStrategy(player, std::move(weights));
  }
  return search;
}

std::optional<MixedStrategy> find_mixed_dominator(
    const Restriction& restriction, PlayerIndex player, StrategyIndex target,
    DominatorPool pool, DominanceMode mode) {
  return search_mixed_dominator(restriction, player, target, pool, mode)
      .witness;
}

bool EliminationCertificate::replay() const {
  const Game& game = context.game();
  if (player >= game.player_count() || !context.contains(player, eliminated)) {
    return false;
  }
  const auto allowed = dominator_pool(context, player, pool);
  auto in_pool = [&](StrategyIndex s) {
    return std::binary_search(allowed.begin(), allowed.end(), s);
  };
  if (const auto* pure = std::get_if<StrategyIndex>(&dominator)) {
    if (!in_pool(*pure)) return false;
  } else {
    const auto& mixed = std::get<MixedStrategy>(dominator);
    for (const auto& entry : mixed.weights()) {
      if (!in_pool(entry.first)) return false;
    }
  }
  try {
    return dominates(dominator, eliminated, context, player, mode);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace domlab
