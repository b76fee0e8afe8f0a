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

#include "domlab/oracle/grid.hpp"

#include <functional>
#include <map>
#include <vector>

namespace domlab::oracle {

bool brute_force_dominates(const Restriction& restriction, PlayerIndex player,
                           const MixedStrategy& candidate,
                           StrategyIndex target, DominanceMode mode) {
  const Game& game = restriction.game();
  bool all_ge = true;
  bool all_gt = true;
  bool any_gt = false;
  for (const auto& opponents : restriction.opponent_profiles(player)) {
    Rational mixed;
    for (const auto& [s, w] : candidate.weights()) {
      mixed += w * payoff(game, player, opponents.complete(s));
    }
    const Rational& base = payoff(game, player, opponents.complete(target));
    if (mixed < base) all_ge = false;
    if (!(mixed > base)) all_gt = false;
    if (mixed > base) any_gt = true;
  }
  return mode == DominanceMode::kStrict ? all_gt : (all_ge && any_gt);
}

std::optional<MixedStrategy> grid_dominator(const Restriction& restriction,
                                            PlayerIndex player,
                                            StrategyIndex target,
                                            std::span<const StrategyIndex> pool,
                                            DominanceMode mode,
                                            std::size_t max_denominator) {
  if (pool.empty()) return std::nullopt;
  std::vector<std::size_t> counts(pool.size());
  std::optional<MixedStrategy> found;
  for (std::size_t d = 1; d <= max_denominator && !found; ++d) {
    // All ways to split d units over the pool.
    std::function<void(std::size_t, std::size_t)> place =
        [&](std::size_t slot, std::size_t remaining) {
          if (found) return;
          if (slot + 1 == pool.size()) {
            counts[slot] = remaining;
            std::map<StrategyIndex, Rational> weights;
            for (std::size_t k = 0; k < pool.size(); ++k) {
              if (counts[k] == 0) continue;
              weights[pool[k]] += Rational(static_cast<std::int64_t>(counts[k]),
                                           static_cast<std::int64_t>(d));
            }
            MixedStrategy mixed(player, std::move(weights));
            if (brute_force_dominates(restriction, player, mixed, target,
                                      mode)) {
              found = std::move(mixed);
            }
            return;
          }
          for (std::size_t c = 0; c <= remaining; ++c) {
            counts[slot] = c;
            place(slot + 1, remaining - c);
          }
        };
    place(0, d);
  }
  return found;
}

}  // namespace domlab::oracle
