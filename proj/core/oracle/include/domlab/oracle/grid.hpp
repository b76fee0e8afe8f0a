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
#include <span>

#include "domlab/dominance.hpp"
#include "domlab/game.hpp"

namespace domlab::oracle {

// Independent reference checks for the dominance module. Nothing here goes
// through the LP or the offset arithmetic of the main library: payoffs are
// looked up profile by profile.

// Dominance by a fixed mixture, evaluated by enumerating full profiles.
bool brute_force_dominates(const Restriction& restriction, PlayerIndex player,
                           const MixedStrategy& candidate,
                           StrategyIndex target, DominanceMode mode);

// Tries every mixture over `pool` whose weights are multiples of 1/d for
// d = 1..max_denominator and returns the first that dominates `target`.
// A hit proves a dominator exists; a miss proves nothing.
std::optional<MixedStrategy> grid_dominator(const Restriction& restriction,
                                            PlayerIndex player,
                                            StrategyIndex target,
                                            std::span<const StrategyIndex> pool,
                                            DominanceMode mode,
                                            std::size_t max_denominator = 6);

}  // namespace domlab::oracle
