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

#include "domlab_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "domlab/analysis.hpp"
#include "domlab/errors.hpp"
#include "domlab/report_json.hpp"
#include "domlab_cli/suites.hpp"

#ifndef DOMLAB_DEFAULT_GAMES_DIR
#define DOMLAB_DEFAULT_GAMES_DIR "games"
#endif

namespace domlab::cli {
namespace {

constexpr std::uint64_t kDefaultSuiteSeed = 20080401;

class UsageError : public Error {
 public:
  using Error::Error;
};

OperatorKind parse_operator(const std::string& name) {
  try {
    return OperatorKind::parse(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SearchBudget make_budget(const BudgetOptions& options) {
  switch (options.kind) {
    case BudgetKind::kSampled:
      return SampledSearch{options.seed, options.samples};
    case BudgetKind::kCovers:
      return CoversOnlySearch{options.cap};
    case BudgetKind::kExhaustive:
      break;
  }
  return ExhaustiveSearch{options.cap};
}

// Flattens a JSON document into aligned "path  value" lines.
void flatten(const Json& node, const std::string& path,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, path.empty() ? key : path + "." + key, rows);
    }
  } else if (node.is_array() &&
             std::any_of(node.begin(), node.end(), [](const Json& v) {
               return v.is_object();
             })) {
    for (std::size_t k = 0; k < node.size(); ++k) {
      flatten(node[k], path + "[" + std::to_string(k) + "]", rows);
    }
  } else {
    rows.emplace_back(path, node.is_string() ? node.get<std::string>()
                                             : node.dump());
  }
}

void write_table(const Json& doc, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << key << "  "
        << value << "\n";
  }
}

void write_trace_table(const IterationTrace& trace, bool with_steps,
                       std::ostream& out) {
  out << "operator           " << trace.op.name() << "\n";
  out << "fixpoint           " << restriction_to_string(trace.fixpoint) << "\n";
  out << "eliminating steps  " << trace.eliminating_steps() << "\n";
  if (!with_steps) return;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& step = trace.steps[k];
    out << "step " << k << "  " << restriction_to_string(step.before)
        << "  ->  " << restriction_to_string(step.after) << "\n";
    for (const auto& c : step.certificates) {
      const Game& game = c.context.game();
      out << "    " << game.player(c.player).name << " "
          << game.strategy_name(c.player, c.eliminated) << "  by "
          << dominator_to_json(game, c.player, c.dominator).dump() << "\n";
    }
  }
}

void write_checks_table(const SuiteResult& result, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& c : result.checks) width = std::max(width, c.name.size());
  for (const auto& c : result.checks) {
    out << (c.passed() ? "PASS  " : "FAIL  ") << std::left
        << std::setw(static_cast<int>(width)) << c.name << "  " << c.cases
        << " cases";
    if (c.failures > 0) out << ", " << c.failures << " failures";
    out << "\n";
    for (const auto& e : c.examples) out << "      " << e << "\n";
  }
  out << (result.passed() ? "all checks passed" : "some checks FAILED") << "\n";
}

void emit(const Json& doc, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    out << doc.dump(2) << "\n";
  } else {
    write_table(doc, out);
  }
}

struct Executor {
  OutputFormat format;
  std::ostream& out;

  int operator()(const ApplyCommand& c) const {
    const auto kind = parse_operator(c.op);
    const auto game = load_game(c.game_path);
    const Restriction start = c.restriction
                                  ? parse_restriction(game, *c.restriction)
                                  : Restriction::full(game);
    const auto step = apply_operator(kind, start);
    Json doc = step_to_json(step);
    doc = Json{{"operator", kind.name()},
               {"before", doc["before"]},
               {"after", doc["after"]},
               {"eliminated", doc["eliminated"]}};
    emit(doc, format, out);
    return kExitOk;
  }

  int operator()(const SolveCommand& c) const {
    const auto kind = parse_operator(c.op);
    const auto game = load_game(c.game_path);
    IterationTrace trace = [&] {
      switch (c.order) {
        case SolveOrder::kDeterministic:
          return iterate_one_at_a_time(kind, game, DeterministicOrder{});
        case SolveOrder::kSeeded:
          return iterate_one_at_a_time(kind, game, SeededOrder{c.seed});
        case SolveOrder::kSimultaneous:
          break;
      }
      return iterate(kind, game);
    }();
    if (format == OutputFormat::kTable) {
      write_trace_table(trace, c.trace, out);
      return kExitOk;
    }
    Json doc = trace_to_json(trace);
    if (!c.trace) doc.erase("steps");
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  int operator()(const CompareCommand& c) const {
    const auto left = parse_operator(c.left);
    const auto right = parse_operator(c.right);
    emit(relation_to_json(compare_fixpoints(left, right, load_game(c.game_path))),
         format, out);
    return kExitOk;
  }

  int operator()(const CheckMonotonicCommand& c) const {
    const auto kind = parse_operator(c.op);
    const auto game = load_game(c.game_path);
    emit(monotonicity_to_json(kind,
                              check_monotonic(kind, game, make_budget(c.budget))),
         format, out);
    return kExitOk;
  }

  int operator()(const PointwiseCommand& c) const {
    const auto left = parse_operator(c.left);
    const auto right = parse_operator(c.right);
    emit(inclusion_to_json(pointwise_inclusion(left, right,
                                               load_game(c.game_path),
                                               make_budget(c.budget))),
         format, out);
    return kExitOk;
  }

  int operator()(const LemmaCommand& c) const {
    const auto t = parse_operator(c.t);
    const auto u = parse_operator(c.u);
    emit(lemma_to_json(verify_lemma_inc(t, u, load_game(c.game_path), c.cap)),
         format, out);
    return kExitOk;
  }

  int operator()(const EqualitiesCommand& c) const {
    const auto report = verify_global_local_equalities(load_game(c.game_path));
    emit(global_local_to_json(report), format, out);
    return report.all_hold() ? kExitOk : kExitViolation;
  }

  int operator()(const VerifyCommand& c) const {
    SuiteResult result;
    try {
      result = run_suite(c.suite, c.config, c.games);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (format == OutputFormat::kTable) {
      write_checks_table(result, out);
    } else {
      out << suite_to_json(result, c.config, c.games).dump(2) << "\n";
    }
    return result.passed() ? kExitOk : kExitViolation;
  }

  int operator()(const PaperExamplesCommand& c) const {
    const std::string dir = c.games_dir.empty() ? default_games_dir()
                                                : c.games_dir;
    const auto result = run_paper_examples(load_game(dir + "/section3.json"),
                                           load_game(dir + "/example41.json"));
    if (format == OutputFormat::kTable) {
      write_checks_table(result, out);
    } else {
      Json checks = Json::array();
      for (const auto& check : result.checks) {
        checks.push_back(Json{{"name", check.name}, {"passed", check.passed()}});
      }
      out << Json{{"passed", result.passed()}, {"checks", std::move(checks)}}
                 .dump(2)
          << "\n";
    }
    return result.passed() ? kExitOk : kExitViolation;
  }

  int operator()(const GenerateCommand& c) const {
    out << game_to_json(*generate(c.config)).dump(2) << "\n";
    return kExitOk;
  }
};

void add_budget_options(CLI::App* sub, BudgetOptions& budget) {
  sub->add_option("--budget", budget.kind, "exhaustive, sampled or covers")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, BudgetKind>{
              {"exhaustive", BudgetKind::kExhaustive},
              {"sampled", BudgetKind::kSampled},
              {"covers", BudgetKind::kCovers}},
          CLI::ignore_case));
  sub->add_option("--samples", budget.samples, "pairs for a sampled search");
  sub->add_option("--seed", budget.seed, "seed for a sampled search");
  sub->add_option("--cap", budget.cap,
                  "maximum lattice size for exhaustive searches");
}

void add_generator_options(CLI::App* sub, GeneratorConfig& config,
                           std::string& config_path) {
  sub->add_option("--seed", config.seed, "generator seed");
  sub->add_option("--min-players", config.min_players);
  sub->add_option("--max-players", config.max_players);
  sub->add_option("--min-strategies", config.min_strategies);
  sub->add_option("--max-strategies", config.max_strategies);
  sub->add_option("--payoff-min", config.payoff_min);
  sub->add_option("--payoff-max", config.payoff_max);
  sub->add_option("--tie-bias", config.tie_bias);
  sub->add_flag("--distinct-payoffs", config.distinct_payoffs);
  sub->add_option("--config", config_path,
                  "JSON file with generator settings (flags override)");
}

// Applies a JSON config file first, then re-applies explicit flags on top.
GeneratorConfig resolve_config(CLI::App* sub, const GeneratorConfig& flags,
                               const std::string& config_path) {
  GeneratorConfig config = flags;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw Error("cannot open config file " + config_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid config JSON: ") + e.what(), 0, 0);
    }
    config = config_from_json(doc);
    auto given = [&](const char* name) { return sub->count(name) > 0; };
    if (given("--seed")) config.seed = flags.seed;
    if (given("--min-players")) config.min_players = flags.min_players;
    if (given("--max-players")) config.max_players = flags.max_players;
    if (given("--min-strategies")) config.min_strategies = flags.min_strategies;
    if (given("--max-strategies")) config.max_strategies = flags.max_strategies;
    if (given("--payoff-min")) config.payoff_min = flags.payoff_min;
    if (given("--payoff-max")) config.payoff_max = flags.payoff_max;
    if (given("--tie-bias")) config.tie_bias = flags.tie_bias;
    if (given("--distinct-payoffs")) {
      config.distinct_payoffs = flags.distinct_payoffs;
    }
  } else if (sub->count("--seed") == 0) {
    config.seed = default_suite_seed();
  }
  config.validate();
  return config;
}

}  // namespace

std::string default_games_dir() { return DOMLAB_DEFAULT_GAMES_DIR; }

std::uint64_t default_suite_seed() {
  if (const char* env = std::getenv("DOMINANCE_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("DOMINANCE_LAB_SEED must be an unsigned integer");
    }
  }
  return kDefaultSuiteSeed;
}

int execute(const Invocation& invocation, std::ostream& out,
            std::ostream& err) {
  try {
    return std::visit(Executor{invocation.format, out}, invocation.command);
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Iterated dominance elimination on finite strategic games"};
  app.require_subcommand(1);
  app.fallthrough();
  OutputFormat format = OutputFormat::kJson;
  app.add_option("--format", format, "json (default) or table")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"json", OutputFormat::kJson},
                                              {"table", OutputFormat::kTable}},
          CLI::ignore_case));

  ApplyCommand apply;
  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator once");
  apply_cmd->add_option("--operator,-o", apply.op)->required();
  apply_cmd->add_option("game", apply.game_path, "game JSON file")->required();
  apply_cmd->add_option("--restriction,-r", apply.restriction,
                        "kept strategies, e.g. \"A,B;X\"");

  SolveCommand solve;
  auto* solve_cmd = app.add_subcommand("solve", "Iterate an operator to its fixpoint");
  solve_cmd->add_option("--operator,-o", solve.op)->required();
  solve_cmd->add_option("game", solve.game_path, "game JSON file")->required();
  solve_cmd->add_flag("--trace", solve.trace, "include every step");
  solve_cmd->add_option("--order", solve.order,
                        "simultaneous (default), deterministic or seeded")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SolveOrder>{
              {"simultaneous", SolveOrder::kSimultaneous},
              {"deterministic", SolveOrder::kDeterministic},
              {"seeded", SolveOrder::kSeeded}},
          CLI::ignore_case));
  solve_cmd->add_option("--seed", solve.seed, "seed for --order seeded");

  CompareCommand compare;
  auto* compare_cmd = app.add_subcommand("compare", "Relate two fixpoints");
  compare_cmd->add_option("--left", compare.left)->required();
  compare_cmd->add_option("--right", compare.right)->required();
  compare_cmd->add_option("game", compare.game_path)->required();

  CheckMonotonicCommand mono;
  auto* mono_cmd = app.add_subcommand("check-monotonic",
                                      "Search for a monotonicity violation");
  mono_cmd->add_option("--operator,-o", mono.op)->required();
  mono_cmd->add_option("game", mono.game_path)->required();
  add_budget_options(mono_cmd, mono.budget);

  PointwiseCommand pointwise;
  auto* pointwise_cmd = app.add_subcommand(
      "pointwise", "Check left(G) <= right(G) over restrictions");
  pointwise_cmd->add_option("--left", pointwise.left)->required();
  pointwise_cmd->add_option("--right", pointwise.right)->required();
  pointwise_cmd->add_option("game", pointwise.game_path)->required();
  add_budget_options(pointwise_cmd, pointwise.budget);

  LemmaCommand lemma;
  auto* lemma_cmd = app.add_subcommand(
      "lemma", "Check the inclusion lemma's hypotheses and conclusion");
  lemma_cmd->add_option("--t", lemma.t)->required();
  lemma_cmd->add_option("--u", lemma.u)->required();
  lemma_cmd->add_option("game", lemma.game_path)->required();
  lemma_cmd->add_option("--cap", lemma.cap);

  EqualitiesCommand equalities;
  auto* equalities_cmd = app.add_subcommand(
      "equalities", "Compare global and local fixpoints");
  equalities_cmd->add_option("game", equalities.game_path)->required();

  VerifyCommand verify;
  std::string verify_config_path;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run a property suite over random games");
  verify_cmd->add_option("--suite", verify.suite,
                         "all, chains, theorems, equalities, monotonicity, "
                         "certificates or oracle");
  verify_cmd->add_option("--games", verify.games, "number of random games");
  add_generator_options(verify_cmd, verify.config, verify_config_path);

  PaperExamplesCommand paper;
  auto* examples_cmd = app.add_subcommand(
      "paper-examples", "Check every expectation on the bundled example games");
  examples_cmd->add_option("--games-dir", paper.games_dir);

  GenerateCommand gen;
  std::string gen_config_path;
  auto* gen_cmd = app.add_subcommand("generate", "Write a random game as JSON");
  add_generator_options(gen_cmd, gen.config, gen_config_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  }

  Invocation invocation;
  invocation.format = format;
  try {
    if (apply_cmd->parsed()) {
      invocation.command = apply;
    } else if (solve_cmd->parsed()) {
      invocation.command = solve;
    } else if (compare_cmd->parsed()) {
      invocation.command = compare;
    } else if (mono_cmd->parsed()) {
      invocation.command = mono;
    } else if (pointwise_cmd->parsed()) {
      invocation.command = pointwise;
    } else if (lemma_cmd->parsed()) {
      invocation.command = lemma;
    } else if (equalities_cmd->parsed()) {
      invocation.command = equalities;
    } else if (verify_cmd->parsed()) {
      verify.config =
          resolve_config(verify_cmd, verify.config, verify_config_path);
      invocation.command = verify;
    } else if (examples_cmd->parsed()) {
      invocation.command = paper;
    } else {
      gen.config = resolve_config(gen_cmd, gen.config, gen_config_path);
      invocation.command = gen;
    }
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  }
  return execute(invocation, out, err);
}

}  // namespace domlab::cli
