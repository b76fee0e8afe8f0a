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

#include "domlab/analysis.hpp"
#include "domlab/game_io.hpp"
#include "domlab/operators.hpp"

namespace domlab {

// JSON views of library results. Keys are emitted in a fixed order so the
// dumped text is byte-reproducible. Restrictions appear as kept strategy
// names per player; mixed weights as "p/q" strings keyed by strategy name.

Json dominator_to_json(const Game& game, PlayerIndex player,
                       const Dominator& dominator);
Json certificate_to_json(const EliminationCertificate& certificate);
Json step_to_json(const EliminationStep& step);
Json trace_to_json(const IterationTrace& trace);
Json witness_to_json(const MonotonicityWitness& witness);
Json monotonicity_to_json(OperatorKind kind, const MonotonicityCheck& check);
Json inclusion_to_json(const InclusionReport& report);
Json relation_to_json(const FixpointRelationReport& report);
Json lemma_to_json(const LemmaInclusionReport& report);
Json global_local_to_json(const GlobalLocalReport& report);

}  // namespace domlab
