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

#include "domlab/operators.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

namespace domlab {

std::string OperatorKind::name() const {
  std::string out;
  if (mixing == Mixing::kMixed) out += 'm';
  out += pool == DominatorPool::kLocal ? 'l' : 'g';
  out += mode == DominanceMode::kStrict ? 's' : 'w';
  return out;
}

OperatorKind OperatorKind::parse(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (const auto& kind : all()) {
    if (kind.name() == lower) return kind;
  }
  throw std::invalid_argument("unknown operator \"" + std::string(name) +
                              "\"; expected one of ls, mls, gs, mgs, lw, "
                              "mlw, gw, mgw");
}

const std::array<OperatorKind, 8>& OperatorKind::all() {
  static const std::array<OperatorKind, 8> kinds{kLS, kMLS, kGS, kMGS,
                                                 kLW, kMLW, kGW, kMGW};
  return kinds;
}

std::size_t IterationTrace::eliminating_steps() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(),
                    [](const EliminationStep& s) { return s.removed_any(); }));
}

std::optional<Dominator> find_dominator(OperatorKind kind,
                                        const Restriction& restriction,
                                        PlayerIndex player,
                                        StrategyIndex target) {
  if (auto pure = find_pure_dominator(restriction, player, target, kind.pool,
                                      kind.mode)) {
    return Dominator{*pure};
  }
  if (kind.mixing == Mixing::kMixed) {
    if (auto mixed = find_mixed_dominator(restriction, player, target,
                                          kind.pool, kind.mode)) {
      return Dominator{std::move(*mixed)};
    }
  }
  return std::nullopt;
}

EliminationStep apply_operator(OperatorKind kind,
                               const Restriction& restriction) {
  EliminationStep step{restriction, restriction, {}};
  auto kept = restriction.kept_sets();
  for (PlayerIndex i = 0; i < restriction.player_count(); ++i) {
    std::vector<StrategyIndex> survivors;
    for (StrategyIndex s : restriction.kept(i)) {
      if (auto dominator = find_dominator(kind, restriction, i, s)) {
        step.certificates.push_back(EliminationCertificate{
            i, s, std::move(*dominator), kind.mode, kind.pool, restriction});
      } else {
        survivors.push_back(s);
      }
    }
    kept[i] = std::move(survivors);
  }
  step.after = Restriction(restriction.game_ptr(), std::move(kept));
  return step;
}

IterationTrace iterate(OperatorKind kind, const GamePtr& game) {
  IterationTrace trace{kind, {}, Restriction::full(game)};
  const std::size_t bound = game->total_strategy_count() + 1;
  Restriction current = Restriction::full(game);
  while (true) {
    EliminationStep step = apply_operator(kind, current);
    const bool done = !step.removed_any();
    current = step.after;
    trace.steps.push_back(std::move(step));
    if (done) break;
    if (trace.steps.size() > bound) {
      throw std::logic_error("iteration exceeded the strategy-count bound");
    }
  }
  trace.fixpoint = std::move(current);
  return trace;
}

Restriction fixpoint(OperatorKind kind, const GamePtr& game) {
  return iterate(kind, game).fixpoint;
}

IterationTrace iterate_one_at_a_time(OperatorKind kind, const GamePtr& game,
                                     EliminationPolicy policy) {
  IterationTrace trace{kind, {}, Restriction::full(game)};
  std::mt19937_64 rng(std::holds_alternative<SeededOrder>(policy)
                          ? std::get<SeededOrder>(policy).seed
                          : 0);
  Restriction current = Restriction::full(game);
  while (true) {
    EliminationStep full_step = apply_operator(kind, current);
    EliminationStep step{current, current, {}};
    if (full_step.removed_any()) {
      std::size_t pick = 0;
      if (std::holds_alternative<SeededOrder>(policy)) {
        std::uniform_int_distribution<std::size_t> dist(
            0, full_step.certificates.size() - 1);
        pick = dist(rng);
      }
      auto& chosen = full_step.certificates[pick];
      step.after = current.without(chosen.player, chosen.eliminated);
      step.certificates.push_back(std::move(chosen));
    }
    const bool done = !step.removed_any();
    current = step.after;
    trace.steps.push_back(std::move(step));
    if (done) break;
  }
  trace.fixpoint = std::move(current);
  return trace;
}

}  // namespace domlab
