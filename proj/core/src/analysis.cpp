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

#include "domlab/analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

#include "domlab/errors.hpp"

namespace domlab {
namespace {

using Mask = std::uint64_t;

// Bijection between restrictions and bit masks, one bit per
// (player, strategy).
class Lattice {
 public:
  Lattice(GamePtr game, std::size_t cap) : game_(std::move(game)) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < game_->player_count(); ++i) {
      offsets_.push_back(bits);
      bits += game_->strategy_count(i);
    }
    bits_ = bits;
    if (bits_ >= 63 || (Mask{1} << bits_) > cap) {
      throw BudgetError("restriction lattice has 2^" + std::to_string(bits_) +
                        " elements, above the exhaustive cap of " +
                        std::to_string(cap) + "; use a sampled search");
    }
    const Mask size = Mask{1} << bits_;
    std::vector<std::tuple<bool, std::size_t,
                           std::vector<std::vector<StrategyIndex>>, Mask>>
        keyed;
    keyed.reserve(size);
    for (Mask m = 0; m < size; ++m) {
      Restriction r = to_restriction(m);
      keyed.emplace_back(!r.is_subgame(), r.size(), r.kept_sets(), m);
    }
    std::sort(keyed.begin(), keyed.end());
    order_.reserve(size);
    for (const auto& entry : keyed) order_.push_back(std::get<3>(entry));
  }

  const std::vector<Mask>& order() const { return order_; }
  std::size_t bits() const { return bits_; }

  Restriction to_restriction(Mask m) const {
    std::vector<std::vector<StrategyIndex>> kept(game_->player_count());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      for (std::size_t s = 0; s < game_->strategy_count(i); ++s) {
        if (m >> (offsets_[i] + s) & 1) kept[i].push_back(s);
      }
    }
    return Restriction(game_, std::move(kept));
  }

  Mask to_mask(const Restriction& r) const {
    Mask m = 0;
    for (std::size_t i = 0; i < r.player_count(); ++i) {
      for (StrategyIndex s : r.kept(i)) m |= Mask{1} << (offsets_[i] + s);
    }
    return m;
  }

  std::pair<PlayerIndex, StrategyIndex> locate(std::size_t bit) const {
    PlayerIndex i = 0;
    while (i + 1 < offsets_.size() && offsets_[i + 1] <= bit) ++i;
    return {i, bit - offsets_[i]};
  }

  // op image of every restriction, indexed by mask.
  std::vector<Mask> images(OperatorKind kind) const {
    std::vector<Mask> out(Mask{1} << bits_);
    for (Mask m = 0; m < out.size(); ++m) {
      out[m] = to_mask(apply_operator(kind, to_restriction(m)).after);
    }
    return out;
  }

 private:
  GamePtr game_;
  std::vector<std::size_t> offsets_;
  std::size_t bits_ = 0;
  std::vector<Mask> order_;
};

std::optional<std::pair<PlayerIndex, StrategyIndex>> first_escapee(
    const Restriction& kept, const Restriction& bound) {
  for (PlayerIndex i = 0; i < kept.player_count(); ++i) {
    for (StrategyIndex s : kept.kept(i)) {
      if (!bound.contains(i, s)) return std::pair{i, s};
    }
  }
  return std::nullopt;
}

Restriction random_subset(const Restriction& of, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<StrategyIndex>> kept(of.player_count());
  for (PlayerIndex i = 0; i < of.player_count(); ++i) {
    for (StrategyIndex s : of.kept(i)) {
      if (coin(rng)) kept[i].push_back(s);
    }
  }
  return Restriction(of.game_ptr(), std::move(kept));
}

MonotonicityWitness make_witness(OperatorKind kind, Restriction smaller,
                                 Restriction larger, PlayerIndex player,
                                 StrategyIndex strategy) {
  return MonotonicityWitness{std::move(smaller), std::move(larger), kind,
                             player, strategy};
}

}  // namespace

std::vector<Restriction> enumerate_restrictions(const GamePtr& game,
                                                std::size_t cap) {
  const Lattice lattice(game, cap);
  std::vector<Restriction> out;
  out.reserve(lattice.order().size());
  for (Mask m : lattice.order()) out.push_back(lattice.to_restriction(m));
  return out;
}

bool MonotonicityWitness::replay() const {
  if (!smaller.is_subset_of(larger)) return false;
  const auto small_image = apply_operator(op, smaller).after;
  const auto large_image = apply_operator(op, larger).after;
  return small_image.contains(player, strategy) &&
         !large_image.contains(player, strategy);
}

MonotonicityCheck check_monotonic(OperatorKind kind, const GamePtr& game,
                                  const SearchBudget& budget) {
  MonotonicityCheck check;
  if (const auto* sampled = std::get_if<SampledSearch>(&budget)) {
    std::mt19937_64 rng(sampled->seed);
    const Restriction top = Restriction::full(game);
    for (std::size_t k = 0; k < sampled->count; ++k) {
      Restriction larger = random_subset(top, rng);
      Restriction smaller = random_subset(larger, rng);
      ++check.pairs_searched;
      const auto escapee =
          first_escapee(apply_operator(kind, smaller).after,
                        apply_operator(kind, larger).after);
      if (escapee) {
        check.witness = make_witness(kind, std::move(smaller),
                                     std::move(larger), escapee->first,
                                     escapee->second);
        return check;
      }
    }
    return check;
  }

  const bool covers_only = std::holds_alternative<CoversOnlySearch>(budget);
  const std::size_t cap =
      covers_only ? std::get<CoversOnlySearch>(budget).max_restrictions
                  : std::get<ExhaustiveSearch>(budget).max_restrictions;
  const Lattice lattice(game, cap);
  const auto images = lattice.images(kind);
  const auto& order = lattice.order();

  auto report = [&](Mask small, Mask large) {
    const Mask escaped = images[small] & ~images[large];
    const auto [player, strategy] =
        lattice.locate(static_cast<std::size_t>(__builtin_ctzll(escaped)));
    check.witness =
        make_witness(kind, lattice.to_restriction(small),
                     lattice.to_restriction(large), player, strategy);
  };

  for (Mask small : order) {
    if (covers_only) {
      for (std::size_t bit = 0; bit < lattice.bits(); ++bit) {
        const Mask large = small | (Mask{1} << bit);
        if (large == small) continue;
        ++check.pairs_searched;
        if (images[small] & ~images[large]) {
          report(small, large);
          return check;
        }
      }
      continue;
    }
    for (Mask large : order) {
      if (large == small || (large & small) != small) continue;
      ++check.pairs_searched;
      if (images[small] & ~images[large]) {
        report(small, large);
        return check;
      }
    }
  }
  check.complete = !covers_only;
  return check;
}

std::size_t InclusionReport::subgame_violations() const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [](const auto& v) { return v.on_subgame(); }));
}

InclusionReport pointwise_inclusion(OperatorKind left, OperatorKind right,
                                    const GamePtr& game,
                                    const SearchBudget& budget) {
  InclusionReport report{left, right, 0, false, {}};
  auto check = [&](const Restriction& r) {
    ++report.restrictions_checked;
    Restriction l = apply_operator(left, r).after;
    Restriction rr = apply_operator(right, r).after;
    if (!l.is_subset_of(rr)) {
      report.violations.push_back({r, std::move(l), std::move(rr)});
    }
  };
  if (const auto* sampled = std::get_if<SampledSearch>(&budget)) {
    std::mt19937_64 rng(sampled->seed);
    const Restriction top = Restriction::full(game);
    for (std::size_t k = 0; k < sampled->count; ++k) {
      check(random_subset(top, rng));
    }
    return report;
  }
  const std::size_t cap =
      std::holds_alternative<ExhaustiveSearch>(budget)
          ? std::get<ExhaustiveSearch>(budget).max_restrictions
          : std::get<CoversOnlySearch>(budget).max_restrictions;
  for (const auto& r : enumerate_restrictions(game, cap)) check(r);
  report.complete = true;
  return report;
}

std::string_view to_string(FixpointRelation relation) {
  switch (relation) {
    case FixpointRelation::kEqual:
      return "equal";
    case FixpointRelation::kSubset:
      return "subset";
    case FixpointRelation::kSuperset:
      return "superset";
    case FixpointRelation::kIncomparable:
      return "incomparable";
  }
  return "incomparable";
}

FixpointRelation classify(const Restriction& left, const Restriction& right) {
  const bool le = left.is_subset_of(right);
  const bool ge = right.is_subset_of(left);
  if (le && ge) return FixpointRelation::kEqual;
  if (le) return FixpointRelation::kSubset;
  if (ge) return FixpointRelation::kSuperset;
  return FixpointRelation::kIncomparable;
}

FixpointRelationReport compare_fixpoints(OperatorKind left, OperatorKind right,
                                         const GamePtr& game) {
  Restriction l = fixpoint(left, game);
  Restriction r = fixpoint(right, game);
  const auto relation = classify(l, r);
  return FixpointRelationReport{left, right, relation, std::move(l),
                                std::move(r)};
}

LemmaInclusionReport verify_lemma_inc(OperatorKind t, OperatorKind u,
                                      const GamePtr& game,
                                      std::size_t max_restrictions) {
  const ExhaustiveSearch budget{max_restrictions};
  return LemmaInclusionReport{t,
                              u,
                              pointwise_inclusion(t, u, game, budget),
                              check_monotonic(t, game, budget),
                              check_monotonic(u, game, budget),
                              compare_fixpoints(t, u, game)};
}

bool GlobalLocalReport::all_hold() const {
  return std::all_of(equalities.begin(), equalities.end(),
                     [](const auto& e) { return e.holds; });
}

const IterationTrace& GlobalLocalReport::trace(OperatorKind kind) const {
  for (const auto& t : traces) {
    if (t.op == kind) return t;
  }
  throw std::out_of_range("no trace for operator " + kind.name());
}

GlobalLocalReport verify_global_local_equalities(const GamePtr& game) {
  GlobalLocalReport report{{},
                           {FixpointEquality{kGS, kLS},
                            FixpointEquality{kMGS, kMLS},
                            FixpointEquality{kGW, kLW},
                            FixpointEquality{kMGW, kMLW}}};
  for (const auto& kind : OperatorKind::all()) {
    report.traces.push_back(iterate(kind, game));
  }
  for (auto& e : report.equalities) {
    e.holds = report.trace(e.global).fixpoint == report.trace(e.local).fixpoint;
  }
  return report;
}

}  // namespace domlab
