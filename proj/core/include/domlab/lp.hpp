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

#include <cstddef>
#include <vector>

#include "domlab/rational.hpp"

namespace domlab {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> assignment;
};

// Exact two-phase primal simplex on a dense rational tableau. Bland's rule
// picks both the entering and the leaving variable, so pivoting is
// deterministic and cannot cycle.
//
// Returns kInfeasible for an empty feasible region. Throws std::logic_error
// when the objective is unbounded above; the dominance programs built by
// this library are always bounded.
LpResult solve_lp(const LinearProgram& program);

}  // namespace domlab
