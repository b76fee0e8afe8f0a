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

#include <optional>
#include <string_view>
#include <variant>

#include "domlab/game.hpp"
#include "domlab/lp.hpp"

namespace domlab {

enum class DominanceMode { kStrict, kWeak };

// Where dominators may come from: the current restriction's kept set G_i
// (local) or the initial game's full set H_i (global).
enum class DominatorPool { kLocal, kGlobal };

std::string_view to_string(DominanceMode mode);
std::string_view to_string(DominatorPool pool);

// A pure strategy index or a mixed strategy of the same player.
using Dominator = std::variant<StrategyIndex, MixedStrategy>;

struct EliminationCertificate {
  PlayerIndex player = 0;
  StrategyIndex eliminated = 0;
  Dominator dominator;
  DominanceMode mode = DominanceMode::kStrict;
  DominatorPool pool = DominatorPool::kLocal;
  // The restriction whose opponent profiles the inequalities range over.
  Restriction context;

  // Re-evaluates the dominance inequalities exactly. Also checks that the
  // dominator's support lies in the recorded pool and that the eliminated
  // strategy was kept in the context.
  bool replay() const;
};

// Strict: the candidate beats the target at every opponent profile of the
// restriction (vacuously true when there are none). Weak: at least as good
// everywhere and strictly better somewhere (false when there are none).
//
// Throws InvalidProfileError when the candidate belongs to another player
// or an index is out of range.
bool dominates(const Dominator& candidate, StrategyIndex target,
               const Restriction& restriction, PlayerIndex player,
               DominanceMode mode);

// Strategies a dominator may be drawn from; includes the target itself.
std::vector<StrategyIndex> dominator_pool(const Restriction& restriction,
                                          PlayerIndex player,
                                          DominatorPool pool);

// Lowest-index pure strategy of the pool dominating `target`, if any.
std::optional<StrategyIndex> find_pure_dominator(const Restriction& restriction,
                                                 PlayerIndex player,
                                                 StrategyIndex target,
                                                 DominatorPool pool,
                                                 DominanceMode mode);

// The programs behind find_mixed_dominator, over explicit candidate
// strategies. Variables are the candidates' weights (in `candidates`
// order), followed by eps+ and eps- for the strict program.
//
// Strict: maximize eps s.t. sum_s w_s (p(s, o) - p(target, o)) >= eps for
// every opponent profile o, sum w = 1.
// Weak: maximize sum_o sum_s w_s (p(s, o) - p(target, o)) s.t. every
// per-profile slack >= 0, sum w = 1.
LinearProgram dominance_program(const Restriction& restriction,
                                PlayerIndex player, StrategyIndex target,
                                std::span<const StrategyIndex> candidates,
                                DominanceMode mode);

struct MixedDominatorSearch {
  std::optional<MixedStrategy> witness;
  // Optimal eps (strict) or total slack (weak); absent when the opponent
  // profile set is empty and no program was solved.
  std::optional<Rational> optimum;
};

// Solves the dominance program over the pool and returns a witness iff the
// optimum is positive. With no opponent profiles, strict mode returns the
// point mass on the lowest pool index and weak mode returns none.
//
// Throws NoCandidatesError when the pool is empty.
MixedDominatorSearch search_mixed_dominator(const Restriction& restriction,
                                            PlayerIndex player,
                                            StrategyIndex target,
                                            DominatorPool pool,
                                            DominanceMode mode);

std::optional<MixedStrategy> find_mixed_dominator(
    const Restriction& restriction, PlayerIndex player, StrategyIndex target,
    DominatorPool pool, DominanceMode mode);

}  // namespace domlab
