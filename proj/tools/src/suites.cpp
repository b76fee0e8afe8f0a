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

#include "domlab_cli/suites.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "domlab/analysis.hpp"
#include "domlab/errors.hpp"
#include "domlab/oracle/grid.hpp"
#include "domlab/report_json.hpp"

namespace domlab::cli {
namespace {

constexpr std::size_t kMaxExamples = 5;

class Recorder {
 public:
  SuiteCheck& check(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, checks_.size()).first;
      checks_.push_back(SuiteCheck{name, 0, 0, {}});
    }
    return checks_[it->second];
  }

  void expect(const std::string& name, bool ok,
              const std::function<std::string()>& describe) {
    auto& c = check(name);
    ++c.cases;
    if (ok) return;
    ++c.failures;
    if (c.examples.size() < kMaxExamples) c.examples.push_back(describe());
  }

  std::vector<SuiteCheck> take() { return std::move(checks_); }

 private:
  std::vector<SuiteCheck> checks_;
  std::map<std::string, std::size_t> index_;
};

std::string describe(std::size_t game_index, const std::string& what) {
  return "game #" + std::to_string(game_index) + ": " + what;
}

struct GameTraces {
  std::map<std::string, IterationTrace> by_name;
  const IterationTrace& operator[](OperatorKind k) const {
    return by_name.at(k.name());
  }
};

GameTraces trace_all(const GamePtr& game) {
  GameTraces traces;
  for (const auto& kind : OperatorKind::all()) {
    traces.by_name.emplace(kind.name(), iterate(kind, game));
  }
  return traces;
}

void check_chains(Recorder& rec, std::size_t g, const GameTraces& traces) {
  for (const auto& [name, trace] : traces.by_name) {
    for (const auto& step : trace.steps) {
      const Restriction& r = step.before;
      std::map<std::string, Restriction> image;
      for (const auto& kind : OperatorKind::all()) {
        image.emplace(kind.name(), apply_operator(kind, r).after);
      }
      auto sub = [&](const char* a, const char* b) {
        rec.expect(std::string(a) + "(G) <= " + b + "(G) on iterates",
                   image.at(a).is_subset_of(image.at(b)), [&] {
                     return describe(g, "at " + restriction_to_string(r) +
                                            " reached by " + name);
                   });
      };
      sub("mlw", "lw");
      sub("lw", "ls");
      sub("mlw", "mls");
      sub("mls", "ls");
      sub("mgw", "gw");
      sub("gw", "gs");
      sub("mgw", "mgs");
      sub("mgs", "gs");
      sub("gs", "ls");
      sub("mgs", "mls");
    }
  }
}

void check_theorems(Recorder& rec, std::size_t g, const GameTraces& traces) {
  auto sub = [&](OperatorKind a, OperatorKind b) {
    const auto& fa = traces[a].fixpoint;
    const auto& fb = traces[b].fixpoint;
    rec.expect("fix(" + a.name() + ") <= fix(" + b.name() + ")", fa.is_subset_of(fb), [&] {
      return describe(g, restriction_to_string(fa) + " vs " +
                             restriction_to_string(fb));
    });
  };
  sub(kMLS, kLS);
  sub(kLW, kLS);
  sub(kMLW, kMLS);
  for (const auto& kind : {kLS, kMLS}) {
    rec.expect("fix(" + kind.name() + ") keeps every player non-empty",
               traces[kind].fixpoint.is_subgame(), [&] {
                 return describe(g, restriction_to_string(
                                        traces[kind].fixpoint));
               });
  }
}

void check_equalities(Recorder& rec, std::size_t g, const GameTraces& traces) {
  auto eq = [&](OperatorKind global, OperatorKind local) {
    const auto& a = traces[global].fixpoint;
    const auto& b = traces[local].fixpoint;
    rec.expect("fix(" + global.name() + ") = fix(" + local.name() + ")", a == b, [&] {
      return describe(g, restriction_to_string(a) + " vs " +
                             restriction_to_string(b));
    });
  };
  eq(kGS, kLS);
  eq(kMGS, kMLS);
  eq(kGW, kLW);
  eq(kMGW, kMLW);
}

void check_certificates(Recorder& rec, std::size_t g,
                        const GameTraces& traces) {
  for (const auto& [name, trace] : traces.by_name) {
    for (const auto& step : trace.steps) {
      for (const auto& c : step.certificates) {
        rec.expect("certificate replay", c.replay(), [&] {
          return describe(g, name + " removal of " +
                                 c.context.game().strategy_name(c.player,
                                                                c.eliminated));
        });
      }
    }
  }
}

bool check_monotonicity(Recorder& rec, std::size_t g, const GamePtr& game) {
  for (const auto& kind : {kGS, kMGS}) {
    MonotonicityCheck result;
    try {
      result = check_monotonic(kind, game, ExhaustiveSearch{});
    } catch (const BudgetError&) {
      return false;
    }
    rec.expect(kind.name() + " monotonic (exhaustive)",
               result.proves_monotonic(), [&] {
                 return describe(g, witness_to_json(*result.witness).dump());
               });
  }
  return true;
}

void check_oracle(Recorder& rec, std::size_t g, const GameTraces& traces) {
  for (const auto& kind : {kMLS, kMLW}) {
    for (const auto& step : traces[kind].steps) {
      const Restriction& r = step.before;
      for (PlayerIndex i = 0; i < r.player_count(); ++i) {
        for (StrategyIndex s : r.kept(i)) {
          for (const auto pool :
               {DominatorPool::kLocal, DominatorPool::kGlobal}) {
            const auto candidates = dominator_pool(r, i, pool);
            const auto lp = find_mixed_dominator(r, i, s, pool, kind.mode);
            const auto grid =
                oracle::grid_dominator(r, i, s, candidates, kind.mode);
            auto where = [&] {
              return describe(g, kind.name() + " player " +
                                     r.game().player(i).name + " target " +
                                     r.game().strategy_name(i, s) + " at " +
                                     restriction_to_string(r));
            };
            rec.expect("grid dominator implies LP dominator",
                       !grid || lp.has_value(), where);
            if (lp) {
              rec.expect("LP witness replays (brute force)",
                         oracle::brute_force_dominates(r, i, *lp, s,
                                                       kind.mode),
                         where);
            }
          }
        }
      }
    }
  }
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

SuiteResult run_suite(const std::string& suite, const GeneratorConfig& config,
                      std::size_t games) {
  static const std::vector<std::string> known = {
      "all",          "chains",       "theorems", "equalities",
      "monotonicity", "certificates", "oracle"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw std::invalid_argument("unknown suite \"" + suite + "\"");
  }
  auto wants = [&](const char* name) { return suite == "all" || suite == name; };

  Recorder rec;
  SuiteResult result{suite, {}, 0};
  const auto batch = generate_batch(config, games);
  for (std::size_t g = 0; g < batch.size(); ++g) {
    const GameTraces traces = trace_all(batch[g]);
    if (wants("chains")) check_chains(rec, g, traces);
    if (wants("theorems")) check_theorems(rec, g, traces);
    if (wants("equalities")) check_equalities(rec, g, traces);
    if (wants("certificates")) check_certificates(rec, g, traces);
    if (wants("oracle")) check_oracle(rec, g, traces);
    if (wants("monotonicity") && !check_monotonicity(rec, g, batch[g])) {
      ++result.skipped_games;
    }
  }
  result.checks = rec.take();
  return result;
}

Json suite_to_json(const SuiteResult& result, const GeneratorConfig& config,
                   std::size_t games) {
  Json checks = Json::array();
  for (const auto& c : result.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"passed", c.passed()},
                          {"cases", c.cases},
                          {"failures", c.failures},
                          {"examples", c.examples}});
  }
  return Json{{"suite", result.suite},
              {"passed", result.passed()},
              {"games", games},
              {"config", config_to_json(config)},
              {"skipped_games", result.skipped_games},
              {"checks", std::move(checks)}};
}

SuiteResult run_paper_examples(const GamePtr& g1, const GamePtr& g2) {
  Recorder rec;
  auto expect = [&](const std::string& name, bool ok) {
    rec.expect(name, ok, [&] { return name; });
  };
  auto r = [](const GamePtr& game, const char* text) {
    return parse_restriction(game, text);
  };
  const PlayerIndex row = 0;
  const PlayerIndex column = 1;

  // Payoff lookups.
  expect("G1 p_row(A,X) = 1", payoff(*g1, row, {{0, 0}}) == Rational(1));
  expect("G1 p_column(A,X) = 0", payoff(*g1, column, {{0, 0}}) == Rational(0));
  expect("G2 p_row(B,Y) = 2", payoff(*g2, row, {{1, 1}}) == Rational(2));

  // Single applications on the 2x1 game.
  const Restriction top1 = Restriction::full(g1);
  const Restriction only_b = r(g1, "B;X");
  expect("LS(G1) = {A}x{X}", apply_operator(kLS, top1).after == r(g1, "A;X"));
  expect("MLS(G1) = {A}x{X}",
         apply_operator(kMLS, top1).after == r(g1, "A;X"));
  expect("LS({B},{X}) = {B}x{X}", apply_operator(kLS, only_b).after == only_b);
  expect("MLS({B},{X}) = {B}x{X}",
         apply_operator(kMLS, only_b).after == only_b);
  expect("A strictly dominates B on G1 (local pool)",
         find_pure_dominator(top1, row, 1, DominatorPool::kLocal,
                             DominanceMode::kStrict) == StrategyIndex{0});
  expect("no local strict dominator of B on {B}x{X}",
         !find_pure_dominator(only_b, row, 1, DominatorPool::kLocal,
                              DominanceMode::kStrict));
  expect("fix(LS) on G1 = {A}x{X}", fixpoint(kLS, g1) == r(g1, "A;X"));

  // Nonmonotonicity of LS and MLS, monotonicity of GS and MGS.
  for (const auto& kind : {kLS, kMLS}) {
    const auto check = check_monotonic(kind, g1, ExhaustiveSearch{});
    const bool ok = check.witness && check.witness->replay() &&
                    check.witness->smaller == only_b &&
                    check.witness->larger == top1 &&
                    check.witness->player == row &&
                    check.witness->strategy == 1;
    expect(kind.name() + " on G1: witness {B}x{X} <= H, evidence B", ok);
  }
  for (const auto& game : {g1, g2}) {
    for (const auto& kind : {kGS, kMGS}) {
      expect(kind.name() + " monotonic on " +
                 std::string(game == g1 ? "G1" : "G2"),
             check_monotonic(kind, game, ExhaustiveSearch{}).proves_monotonic());
    }
  }

  // Example with weak dominance.
  const Restriction top2 = Restriction::full(g2);
  const Restriction ab_xy = r(g2, "A,B;X,Y");
  expect("MLW(G2) = {A,B}x{X,Y}", apply_operator(kMLW, top2).after == ab_xy);
  expect("MLW({A,B},{X,Y}) unchanged",
         apply_operator(kMLW, ab_xy).after == ab_xy);
  const auto mlw = iterate(kMLW, g2);
  expect("fix(MLW) on G2 = {A,B}x{X,Y} after one eliminating step",
         mlw.fixpoint == ab_xy && mlw.eliminating_steps() == 1);
  const auto lw = iterate(kLW, g2);
  expect("fix(LW) on G2 = {A}x{X} after three eliminating steps",
         lw.fixpoint == r(g2, "A;X") && lw.eliminating_steps() == 3);
  expect("fix(MLW) strictly contains fix(LW) on G2",
         compare_fixpoints(kMLW, kLW, g2).relation ==
             FixpointRelation::kSuperset);
  for (const auto& kind : {kLW, kMLW, kGW, kMGW}) {
    const auto check = check_monotonic(kind, g2, ExhaustiveSearch{});
    expect(kind.name() + " not monotonic on G2",
           check.witness && check.witness->replay());
  }

  // Global/local fixpoint equalities and the inclusion theorems.
  for (const auto& game : {g1, g2}) {
    const std::string tag = game == g1 ? "G1" : "G2";
    expect("global/local fixpoints coincide on " + tag,
           verify_global_local_equalities(game).all_hold());
    expect("fix(MLS) <= fix(LS) on " + tag,
           compare_fixpoints(kMLS, kLS, game).included());
    expect("fix(LW) <= fix(LS) on " + tag,
           compare_fixpoints(kLW, kLS, game).included());
    expect("fix(MLW) <= fix(MLS) on " + tag,
           compare_fixpoints(kMLW, kMLS, game).included());
  }
  expect("fix(GW) on G2 = {A}x{X}", fixpoint(kGW, g2) == r(g2, "A;X"));

  const auto lemma_strict = verify_lemma_inc(kMGS, kGS, g1);
  expect("inclusion lemma (MGS, GS) on G1: hypotheses and conclusion hold",
         lemma_strict.hypotheses_hold() && lemma_strict.conclusion_holds());
  const auto lemma_weak = verify_lemma_inc(kMLW, kLW, g2);
  expect("inclusion lemma (MLW, LW) on G2: pointwise holds, monotonicity and "
         "conclusion fail",
         lemma_weak.pointwise_hypothesis() &&
             !lemma_weak.monotonicity_hypothesis() &&
             !lemma_weak.conclusion_holds());

  return SuiteResult{"paper-examples", rec.take(), 0};
}

}  // namespace domlab::cli
