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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails. Every bound below is fixed; nothing is tuned at
// run time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "domlab/analysis.hpp"
#include "domlab/dominance.hpp"
#include "domlab/game_io.hpp"
#include "domlab/operators.hpp"
#include "domlab/oracle/grid.hpp"
#include "domlab/random_games.hpp"
#include "domlab_cli/cli.hpp"

namespace domlab {
namespace {

constexpr double kAc1Seconds = 1.0;
constexpr double kAc2Seconds = 1.0;
constexpr double kAc3Seconds = 30.0;
constexpr double kAc4Seconds = 300.0;
constexpr std::size_t kAc3Games = 100;
constexpr std::size_t kAc3MaxPairs = 16384;
constexpr std::size_t kAc4Games = 500;
constexpr std::size_t kAc6Games = 100;
constexpr std::uint64_t kAc3Seed = 3003;
constexpr std::uint64_t kAc4Seed = 4004;
constexpr std::uint64_t kAc6Seed = 6006;
constexpr std::int64_t kGridDenominator = 6;

std::string games_dir() { return DOMLAB_ACCEPTANCE_GAMES_DIR; }

// Shared across criteria 1-4 for criterion 5.
struct CertificateLedger {
  std::size_t seen = 0;
  std::size_t replayed = 0;

  void add(const IterationTrace& trace) {
    for (const auto& step : trace.steps) add(step);
  }
  void add(const EliminationStep& step) {
    for (const auto& c : step.certificates) {
      ++seen;
      if (c.replay()) ++replayed;
    }
  }
};

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

CertificateLedger ledger;

Outcome criterion1() {
  Outcome out;
  const auto g2 = load_game(games_dir() + "/example41.json");
  const auto mlw = iterate(kMLW, g2);
  const auto lw = iterate(kLW, g2);
  ledger.add(mlw);
  ledger.add(lw);
  out.require(mlw.fixpoint == parse_restriction(g2, "A,B;X,Y"),
              "MLW fixpoint is " + restriction_to_string(mlw.fixpoint));
  out.require(mlw.eliminating_steps() == 1, "MLW eliminating steps != 1");
  out.require(lw.fixpoint == parse_restriction(g2, "A;X"),
              "LW fixpoint is " + restriction_to_string(lw.fixpoint));
  out.require(lw.eliminating_steps() == 3, "LW eliminating steps != 3");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto g1 = load_game(games_dir() + "/section3.json");
  const Restriction top = Restriction::full(g1);
  const Restriction b_only = parse_restriction(g1, "B;X");
  for (const auto& kind : {kLS, kMLS}) {
    const auto step = apply_operator(kind, top);
    ledger.add(step);
    out.require(step.after == parse_restriction(g1, "A;X"),
                kind.name() + "(G1) is " + restriction_to_string(step.after));
    const auto at_b = apply_operator(kind, b_only);
    ledger.add(at_b);
    out.require(at_b.after == b_only, "{B}x{X} is not fixed by " + kind.name());
    const auto check = check_monotonic(kind, g1, ExhaustiveSearch{});
    out.require(check.witness.has_value(), "no witness for " + kind.name());
    if (check.witness) {
      const auto& w = *check.witness;
      out.require(w.replay(), "witness does not replay for " + kind.name());
      out.require(w.smaller == b_only && w.larger == top && w.player == 0 &&
                      w.strategy == 1,
                  "unexpected witness for " + kind.name());
    }
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto g1 = load_game(games_dir() + "/section3.json");
  const auto g2 = load_game(games_dir() + "/example41.json");
  for (const auto& game : {g1, g2}) {
    for (const auto& kind : {kGS, kMGS}) {
      out.require(check_monotonic(kind, game, ExhaustiveSearch{})
                      .proves_monotonic(),
                  kind.name() + " not proven monotonic on a bundled game");
    }
  }
  GeneratorConfig config;
  config.seed = kAc3Seed;
  config.min_players = 2;
  config.max_players = 2;
  config.min_strategies = 2;
  config.max_strategies = 4;
  std::size_t index = 0;
  for (const auto& game : generate_batch(config, kAc3Games)) {
    for (const auto& kind : {kGS, kMGS}) {
      out.require(check_monotonic(kind, game, ExhaustiveSearch{})
                      .proves_monotonic(),
                  kind.name() + " not monotonic on random game " +
                      std::to_string(index));
    }
    ++index;
  }
  for (const auto& kind : {kLW, kMLW, kGW, kMGW}) {
    const auto check = check_monotonic(kind, g2, ExhaustiveSearch{});
    out.require(check.witness.has_value(), "no witness for " + kind.name());
    out.require(check.pairs_searched <= kAc3MaxPairs,
                "pair budget exceeded for " + kind.name());
    if (check.witness) {
      out.require(check.witness->replay(),
                  "witness does not replay for " + kind.name());
    }
  }
  out.detail = out.passed ? "2 bundled games + " + std::to_string(kAc3Games) +
                                " random games" : out.detail;
  return out;
}

Outcome criterion4() {
  Outcome out;
  GeneratorConfig config;
  config.seed = kAc4Seed;
  config.min_players = 2;
  config.max_players = 3;
  config.min_strategies = 2;
  config.max_strategies = 4;
  config.payoff_min = -5;
  config.payoff_max = 5;
  config.tie_bias = 0.25;
  std::size_t index = 0;
  std::size_t iterates = 0;
  for (const auto& game : generate_batch(config, kAc4Games)) {
    const std::string where = " on game " + std::to_string(index++);
    const auto report = verify_global_local_equalities(game);
    for (const auto& trace : report.traces) ledger.add(trace);
    auto fix = [&](OperatorKind k) { return report.trace(k).fixpoint; };
    out.require(fix(kMLS).is_subset_of(fix(kLS)), "fix(mls) <= fix(ls)" + where);
    out.require(fix(kLW).is_subset_of(fix(kLS)), "fix(lw) <= fix(ls)" + where);
    out.require(fix(kMLW).is_subset_of(fix(kMLS)),
                "fix(mlw) <= fix(mls)" + where);
    for (const auto& eq : report.equalities) {
      out.require(eq.holds, "fix(" + eq.global.name() + ") = fix(" +
                                eq.local.name() + ")" + where);
    }
    for (const auto& trace : report.traces) {
      for (const auto& step : trace.steps) {
        ++iterates;
        const Restriction& r = step.before;
        const auto mlw = apply_operator(kMLW, r).after;
        const auto lw = apply_operator(kLW, r).after;
        const auto mls = apply_operator(kMLS, r).after;
        const auto ls = apply_operator(kLS, r).after;
        const std::string at = where + " at " + restriction_to_string(r);
        out.require(mlw.is_subset_of(lw), "MLW(G) <= LW(G)" + at);
        out.require(lw.is_subset_of(ls), "LW(G) <= LS(G)" + at);
        out.require(mlw.is_subset_of(mls), "MLW(G) <= MLS(G)" + at);
        out.require(mls.is_subset_of(ls), "MLS(G) <= LS(G)" + at);
      }
    }
  }
  if (out.passed) {
    out.detail = std::to_string(kAc4Games) + " games, " +
                 std::to_string(iterates) + " iterates";
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  out.require(ledger.seen > 0, "no certificates were produced");
  out.require(ledger.replayed == ledger.seen,
              std::to_string(ledger.seen - ledger.replayed) + " of " +
                  std::to_string(ledger.seen) + " certificates fail replay");
  if (out.passed) {
    out.detail = std::to_string(ledger.replayed) + "/" +
                 std::to_string(ledger.seen) + " certificates replayed";
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  GeneratorConfig config;
  config.seed = kAc6Seed;
  config.max_players = 3;
  std::size_t grid_hits = 0;
  std::size_t decisions = 0;
  std::size_t index = 0;
  for (const auto& game : generate_batch(config, kAc6Games)) {
    const std::string where = " on game " + std::to_string(index++);
    for (const auto& kind : {kMLS, kMLW}) {
      for (const auto& step : iterate(kind, game).steps) {
        const Restriction& r = step.before;
        for (PlayerIndex i = 0; i < r.player_count(); ++i) {
          for (StrategyIndex s : r.kept(i)) {
            for (auto pool : {DominatorPool::kLocal, DominatorPool::kGlobal}) {
              ++decisions;
              const auto candidates = dominator_pool(r, i, pool);
              const auto grid = oracle::grid_dominator(
                  r, i, s, candidates, kind.mode, kGridDenominator);
              const auto lp = find_mixed_dominator(r, i, s, pool, kind.mode);
              if (grid) ++grid_hits;
              out.require(!grid || lp.has_value(),
                          "grid dominator missed by LP" + where);
              if (lp) {
                out.require(
                    oracle::brute_force_dominates(r, i, *lp, s, kind.mode),
                    "LP witness fails brute-force replay" + where);
              }
            }
          }
        }
      }
    }
  }

  // 3x2: T = (3,0), M = (0,3), B = (1,1); the best strict margin is 1/2.
  const auto three_by_two =
      make_game({{"Row", {"T", "M", "B"}}, {"Column", {"L", "R"}}},
                {{3, 0}, {0, 0}, {0, 0}, {3, 0}, {1, 0}, {1, 0}});
  const auto strict = search_mixed_dominator(Restriction::full(three_by_two), 0,
                                             2, DominatorPool::kLocal,
                                             DominanceMode::kStrict);
  out.require(strict.optimum && *strict.optimum == Rational(1, 2),
              "3x2 strict optimum is not 1/2");
  const auto g2 = load_game(games_dir() + "/example41.json");
  const auto weak = search_mixed_dominator(Restriction::full(g2), 0, 2,
                                           DominatorPool::kLocal,
                                           DominanceMode::kWeak);
  out.require(weak.optimum && *weak.optimum == Rational(1),
              "G2 weak optimum for C is not 1");
  if (out.passed) {
    out.detail = std::to_string(kAc6Games) + " games, " +
                 std::to_string(decisions) + " decisions, " +
                 std::to_string(grid_hits) + " grid hits; optima 1/2 and 1";
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  const std::string g1 = games_dir() + "/section3.json";
  const std::string g2 = games_dir() + "/example41.json";
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "--operator", "lw", g2, "--trace"},
      {"solve", "--operator", "mlw", g2, "--order", "seeded", "--seed", "9"},
      {"apply", "--operator", "gs", g1, "--restriction", "B;X"},
      {"compare", "--left", "mlw", "--right", "lw", g2},
      {"check-monotonic", "--operator", "mgw", g2},
      {"check-monotonic", "--operator", "ls", g2, "--budget", "sampled",
       "--seed", "5", "--samples", "300"},
      {"pointwise", "--left", "gw", "--right", "gs", g2},
      {"lemma", "--t", "mlw", "--u", "lw", g2},
      {"equalities", g2},
      {"verify", "--suite", "all", "--games", "20", "--seed", "77"},
      {"paper-examples"},
      {"generate", "--seed", "123", "--max-players", "3"},
      {"--format", "table", "solve", "--operator", "lw", g2, "--trace"},
  };
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    out.require(c1 == c2 && out1.str() == out2.str() &&
                    err1.str() == err2.str(),
                "output differs for: " + joined);
    out.require(c1 == cli::kExitOk, "nonzero exit for: " + joined + err1.str());
  }
  if (out.passed) {
    out.detail = std::to_string(commands.size()) + " commands repeated";
  }
  return out;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 means no runtime bound
  std::function<Outcome()> body;
};

}  // namespace
}  // namespace domlab

int main() {
  using namespace domlab;
  const std::vector<Criterion> criteria = {
      {"AC1", "4x3 weak example: MLW and LW fixpoints and step counts",
       kAc1Seconds, criterion1},
      {"AC2", "2x1 game: LS/MLS images, fixed point, monotonicity witnesses",
       kAc2Seconds, criterion2},
      {"AC3", "monotonicity: GS/MGS proven, weak witnesses found",
       kAc3Seconds, criterion3},
      {"AC4", "fixpoint inclusions, global/local equalities, chains",
       kAc4Seconds, criterion4},
      {"AC5", "every certificate from AC1-AC4 replays", 0, criterion5},
      {"AC6", "grid oracle vs LP, exact optima", 0, criterion6},
      {"AC7", "byte-identical repeated CLI output", 0, criterion7},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds,
                    c.limit_seconds);
      if (seconds >= c.limit_seconds) {
        outcome.passed = false;
        outcome.detail = "runtime limit exceeded; " + outcome.detail;
      }
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    }
    all = all && outcome.passed;
    std::printf("%s %s: %s [%s] %s\n", outcome.passed ? "PASS" : "FAIL", c.id,
                c.title, timing, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
