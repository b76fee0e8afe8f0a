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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domlab/dominance.hpp"
#include "domlab/game.hpp"

namespace domlab {

enum class Mixing { kPure, kMixed };

// One of the eight elimination operators LS, MLS, GS, MGS, LW, MLW, GW, MGW.
struct OperatorKind {
  DominanceMode mode = DominanceMode::kStrict;
  DominatorPool pool = DominatorPool::kLocal;
  Mixing mixing = Mixing::kPure;

  // Lower-case mnemonic: "ls", "mls", "gs", "mgs", "lw", "mlw", "gw", "mgw".
  std::string name() const;
  // Throws std::invalid_argument on an unknown name (case-insensitive).
  static OperatorKind parse(std::string_view name);
  static const std::array<OperatorKind, 8>& all();

  friend bool operator==(const OperatorKind&, const OperatorKind&) = default;
};

inline constexpr OperatorKind kLS{DominanceMode::kStrict, DominatorPool::kLocal,
                                  Mixing::kPure};
inline constexpr OperatorKind kMLS{DominanceMode::kStrict,
                                   DominatorPool::kLocal, Mixing::kMixed};
inline constexpr OperatorKind kGS{DominanceMode::kStrict,
                                  DominatorPool::kGlobal, Mixing::kPure};
inline constexpr OperatorKind kMGS{DominanceMode::kStrict,
                                   DominatorPool::kGlobal, Mixing::kMixed};
inline constexpr OperatorKind kLW{DominanceMode::kWeak, DominatorPool::kLocal,
                                  Mixing::kPure};
inline constexpr OperatorKind kMLW{DominanceMode::kWeak, DominatorPool::kLocal,
                                   Mixing::kMixed};
inline constexpr OperatorKind kGW{DominanceMode::kWeak, DominatorPool::kGlobal,
                                  Mixing::kPure};
inline constexpr OperatorKind kMGW{DominanceMode::kWeak,
                                   DominatorPool::kGlobal, Mixing::kMixed};

struct EliminationStep {
  Restriction before;
  Restriction after;
  // One per removed strategy, ordered by (player, strategy).
  std::vector<EliminationCertificate> certificates;

  bool removed_any() const { return !certificates.empty(); }
};

struct IterationTrace {
  OperatorKind op;
  // steps[0].before is the full game; the last step is the one that
  // reproduces its input.
  std::vector<EliminationStep> steps;
  Restriction fixpoint;

  std::size_t eliminating_steps() const;
};

// Finds a dominator of `target` for one operator, or none. Mixed operators
// try pure dominators first (lowest index) and fall back to the LP.
std::optional<Dominator> find_dominator(OperatorKind kind,
                                        const Restriction& restriction,
                                        PlayerIndex player,
                                        StrategyIndex target);

// One synchronized application: every kept strategy of every player is
// tested against `restriction` and all dominated strategies are removed at
// once.
EliminationStep apply_operator(OperatorKind kind,
                               const Restriction& restriction);

// Iterates from the full game until a step removes nothing.
IterationTrace iterate(OperatorKind kind, const GamePtr& game);

Restriction fixpoint(OperatorKind kind, const GamePtr& game);

struct DeterministicOrder {};
struct SeededOrder {
  std::uint64_t seed = 0;
};
// Deterministic removes the dominated strategy with the lowest (player,
// strategy); Seeded picks uniformly among all dominated strategies.
using EliminationPolicy = std::variant<DeterministicOrder, SeededOrder>;

// Removes exactly one dominated strategy per step until none is dominated.
IterationTrace iterate_one_at_a_time(OperatorKind kind, const GamePtr& game,
                                     EliminationPolicy policy);

}  // namespace domlab
