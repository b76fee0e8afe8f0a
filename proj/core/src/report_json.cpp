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

#include "domlab/report_json.hpp"

namespace domlab {

Json dominator_to_json(const Game& game, PlayerIndex player,
                       const Dominator& dominator) {
  if (const auto* pure = std::get_if<StrategyIndex>(&dominator)) {
    return game.strategy_name(player, *pure);
  }
  Json weights = Json::object();
  for (const auto& [s, w] : std::get<MixedStrategy>(dominator).weights()) {
    weights[game.strategy_name(player, s)] = w.to_string();
  }
  return weights;
}

Json certificate_to_json(const EliminationCertificate& certificate) {
  const Game& game = certificate.context.game();
  return Json{
      {"player", game.player(certificate.player).name},
      {"eliminated",
       game.strategy_name(certificate.player, certificate.eliminated)},
      {"dominator",
       dominator_to_json(game, certificate.player, certificate.dominator)},
      {"mode", to_string(certificate.mode)},
      {"pool", to_string(certificate.pool)}};
}

Json step_to_json(const EliminationStep& step) {
  Json certificates = Json::array();
  for (const auto& c : step.certificates) {
    certificates.push_back(certificate_to_json(c));
  }
  return Json{{"before", restriction_to_json(step.before)},
              {"after", restriction_to_json(step.after)},
              {"eliminated", std::move(certificates)}};
}

Json trace_to_json(const IterationTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back(step_to_json(s));
  return Json{{"operator", trace.op.name()},
              {"eliminating_steps", trace.eliminating_steps()},
              {"fixpoint", restriction_to_json(trace.fixpoint)},
              {"steps", std::move(steps)}};
}

Json witness_to_json(const MonotonicityWitness& witness) {
  const Game& game = witness.smaller.game();
  return Json{
      {"operator", witness.op.name()},
      {"smaller", restriction_to_json(witness.smaller)},
      {"larger", restriction_to_json(witness.larger)},
      {"evidence",
       Json{{"player", game.player(witness.player).name},
            {"strategy", game.strategy_name(witness.player, witness.strategy)}}},
      {"degenerate", witness.degenerate()}};
}

Json monotonicity_to_json(OperatorKind kind, const MonotonicityCheck& check) {
  return Json{{"operator", kind.name()},
              {"monotonic_proven", check.proves_monotonic()},
              {"complete", check.complete},
              {"pairs_searched", check.pairs_searched},
              {"witness", check.witness ? witness_to_json(*check.witness)
                                        : Json(nullptr)}};
}

Json inclusion_to_json(const InclusionReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(Json{{"restriction", restriction_to_json(v.restriction)},
                              {"left_image", restriction_to_json(v.left_image)},
                              {"right_image", restriction_to_json(v.right_image)},
                              {"subgame", v.on_subgame()}});
  }
  return Json{{"left", report.left.name()},
              {"right", report.right.name()},
              {"restrictions_checked", report.restrictions_checked},
              {"complete", report.complete},
              {"holds", report.holds()},
              {"holds_on_subgames", report.holds_on_subgames()},
              {"violations", std::move(violations)}};
}

Json relation_to_json(const FixpointRelationReport& report) {
  return Json{{"left", report.left.name()},
              {"right", report.right.name()},
              {"relation", to_string(report.relation)},
              {"left_fixpoint", restriction_to_json(report.left_fixpoint)},
              {"right_fixpoint", restriction_to_json(report.right_fixpoint)}};
}

Json lemma_to_json(const LemmaInclusionReport& report) {
  return Json{
      {"t", report.t.name()},
      {"u", report.u.name()},
      {"hypotheses",
       Json{{"pointwise", report.pointwise_hypothesis()},
            {"pointwise_on_subgames", report.pointwise.holds_on_subgames()},
            {"t_monotonic", report.t_monotonicity.proves_monotonic()},
            {"u_monotonic", report.u_monotonicity.proves_monotonic()},
            {"hold", report.hypotheses_hold()}}},
      {"conclusion", Json{{"holds", report.conclusion_holds()},
                          {"relation", relation_to_json(report.conclusion)}}},
      {"pointwise", inclusion_to_json(report.pointwise)},
      {"t_monotonicity",
       monotonicity_to_json(report.t, report.t_monotonicity)},
      {"u_monotonicity",
       monotonicity_to_json(report.u, report.u_monotonicity)}};
}

Json global_local_to_json(const GlobalLocalReport& report) {
  Json fixpoints = Json::object();
  for (const auto& t : report.traces) {
    fixpoints[t.op.name()] = restriction_to_json(t.fixpoint);
  }
  Json equalities = Json::array();
  Json failing = Json::array();
  for (const auto& e : report.equalities) {
    equalities.push_back(Json{{"global", e.global.name()},
                              {"local", e.local.name()},
                              {"holds", e.holds}});
    if (!e.holds) {
      failing.push_back(trace_to_json(report.trace(e.global)));
      failing.push_back(trace_to_json(report.trace(e.local)));
    }
  }
  return Json{{"all_hold", report.all_hold()},
              {"fixpoints", std::move(fixpoints)},
              {"equalities", std::move(equalities)},
              {"failing_traces", std::move(failing)}};
}

}  // namespace domlab
