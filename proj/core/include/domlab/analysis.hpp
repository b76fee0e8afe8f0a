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
#include <string_view>
#include <variant>
#include <vector>

#include "domlab/operators.hpp"

namespace domlab {

// Default cap on the number of restrictions an exhaustive search may
// enumerate: 2^12, e.g. any two-player game with 6 + 6 strategies.
inline constexpr std::size_t kDefaultLatticeCap = std::size_t{1} << 12;

// Every comparable pair of the restriction lattice.
struct ExhaustiveSearch {
  std::size_t max_restrictions = kDefaultLatticeCap;
};
// `count` random pairs (smaller drawn as a random subset of a random
// larger restriction).
struct SampledSearch {
  std::uint64_t seed = 0;
  std::size_t count = 1000;
};
// Only covering pairs (larger has exactly one more strategy). Fast but
// incomplete: a chain violation need not show up at a cover for these
// operators, so "none found" proves nothing.
struct CoversOnlySearch {
  std::size_t max_restrictions = kDefaultLatticeCap;
};
using SearchBudget =
    std::variant<ExhaustiveSearch, SampledSearch, CoversOnlySearch>;

// All restrictions of `game`, subgames first, each group ordered by rank
// (total kept strategies) and then lexicographically by kept sets.
// Throws BudgetError when the lattice has more than `cap` elements.
std::vector<Restriction> enumerate_restrictions(
    const GamePtr& game, std::size_t cap = kDefaultLatticeCap);

// smaller is a sub-restriction of larger, yet op(smaller) keeps
// (player, strategy) while op(larger) drops it.
struct MonotonicityWitness {
  Restriction smaller;
  Restriction larger;
  OperatorKind op;
  PlayerIndex player = 0;
  StrategyIndex strategy = 0;

  // The smaller restriction has an empty component, so the evidence rests
  // on the empty-opponent-set semantics of dominance.
  bool degenerate() const { return !smaller.is_subgame(); }
  // Recomputes the operator on both sides and confirms the evidence.
  bool replay() const;
};

struct MonotonicityCheck {
  std::optional<MonotonicityWitness> witness;
  std::size_t pairs_searched = 0;
  // Every comparable pair was examined.
  bool complete = false;

  bool proves_monotonic() const { return complete && !witness; }
};

// Searches for a monotonicity violation. With ExhaustiveSearch, pairs are
// visited with `smaller` in enumerate_restrictions order and `larger` in
// the same order, and the first violation found is returned.
// Throws BudgetError when an enumerating budget exceeds its cap.
MonotonicityCheck check_monotonic(OperatorKind kind, const GamePtr& game,
                                  const SearchBudget& budget);

struct InclusionViolation {
  Restriction restriction;
  Restriction left_image;
  Restriction right_image;

  bool on_subgame() const { return restriction.is_subgame(); }
};

struct InclusionReport {
  OperatorKind left;
  OperatorKind right;
  std::size_t restrictions_checked = 0;
  bool complete = false;
  std::vector<InclusionViolation> violations;

  bool holds() const { return violations.empty(); }
  std::size_t subgame_violations() const;
  bool holds_on_subgames() const { return subgame_violations() == 0; }
};

// Checks left(G) ⊆ right(G) for the restrictions selected by `budget` and
// returns every violation.
InclusionReport pointwise_inclusion(OperatorKind left, OperatorKind right,
                                    const GamePtr& game,
                                    const SearchBudget& budget);

enum class FixpointRelation { kEqual, kSubset, kSuperset, kIncomparable };

std::string_view to_string(FixpointRelation relation);
FixpointRelation classify(const Restriction& left, const Restriction& right);

struct FixpointRelationReport {
  OperatorKind left;
  OperatorKind right;
  FixpointRelation relation = FixpointRelation::kEqual;
  Restriction left_fixpoint;
  Restriction right_fixpoint;

  // left fixpoint ⊆ right fixpoint.
  bool included() const {
    return relation == FixpointRelation::kEqual ||
           relation == FixpointRelation::kSubset;
  }
};

FixpointRelationReport compare_fixpoints(OperatorKind left, OperatorKind right,
                                         const GamePtr& game);

// Empirical check of: if T(G) ⊆ U(G) for all G and T or U is monotonic,
// then T^ω ⊆ U^ω. Hypotheses and conclusion are reported separately.
struct LemmaInclusionReport {
  OperatorKind t;
  OperatorKind u;
  InclusionReport pointwise;
  MonotonicityCheck t_monotonicity;
  MonotonicityCheck u_monotonicity;
  FixpointRelationReport conclusion;

  bool pointwise_hypothesis() const { return pointwise.holds(); }
  bool monotonicity_hypothesis() const {
    return t_monotonicity.proves_monotonic() ||
           u_monotonicity.proves_monotonic();
  }
  bool hypotheses_hold() const {
    return pointwise_hypothesis() && monotonicity_hypothesis();
  }
  bool conclusion_holds() const { return conclusion.included(); }
};

LemmaInclusionReport verify_lemma_inc(
    OperatorKind t, OperatorKind u, const GamePtr& game,
    std::size_t max_restrictions = kDefaultLatticeCap);

struct FixpointEquality {
  OperatorKind global;
  OperatorKind local;
  bool holds = false;
};

struct GlobalLocalReport {
  // Traces in OperatorKind::all() order.
  std::vector<IterationTrace> traces;
  // GS = LS, MGS = MLS, GW = LW, MGW = MLW.
  std::array<FixpointEquality, 4> equalities;

  bool all_hold() const;
  const IterationTrace& trace(OperatorKind kind) const;
};

GlobalLocalReport verify_global_local_equalities(const GamePtr& game);

}  // namespace domlab
