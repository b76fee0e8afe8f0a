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

#include "domlab/lp.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <stdexcept>

#include "domlab/dominance.hpp"
#include "test_games.hpp"

namespace domlab {
namespace {

using testing::example41_game;
using testing::three_by_two_game;

LinearConstraint row(std::vector<Rational> coefficients, Relation relation,
                     Rational rhs) {
  return {std::move(coefficients), relation, std::move(rhs)};
}

TEST(SolveLpTest, BindingUpperBoundOnEpsilon) {
  // Variables w1, w2, eps: maximize eps s.t. eps <= 0, w1 + w2 = 1.
  LinearProgram lp;
  lp.variable_count = 3;
  lp.objective = {0, 0, 1};
  lp.constraints = {row({0, 0, 1}, Relation::kLessEqual, 0),
                    row({1, 1, 0}, Relation::kEqual, 1)};
  const auto result = solve_lp(lp);
  ASSERT_EQ(result.status, LpStatus::kOptimal);
  EXPECT_EQ(result.value, Rational(0));
  EXPECT_EQ(result.assignment[0] + result.assignment[1], Rational(1));
}

TEST(SolveLpTest, WeakProgramForTargetC) {
  const auto g2 = example41_game();
  const Restriction top = Restriction::full(g2);
  const std::vector<StrategyIndex> pool{0, 1, 2, 3};
  const auto lp = dominance_program(top, 0, 2, pool, DominanceMode::kWeak);
  const auto result = solve_lp(lp);
  ASSERT_EQ(result.status, LpStatus::kOptimal);
  EXPECT_EQ(result.value, Rational(1));
  EXPECT_EQ(result.assignment[0], Rational(1, 2));
  EXPECT_EQ(result.assignment[1], Rational(1, 2));
}

TEST(SolveLpTest, StrictProgramForThreeByTwo) {
  const auto game = three_by_two_game();
  const std::vector<StrategyIndex> pool{0, 1, 2};
  const auto lp = dominance_program(Restriction::full(game), 0, 2, pool,
                                    DominanceMode::kStrict);
  const auto result = solve_lp(lp);
  ASSERT_EQ(result.status, LpStatus::kOptimal);
  EXPECT_EQ(result.value, Rational(1, 2));
  EXPECT_EQ(result.assignment[0], Rational(1, 2));
  EXPECT_EQ(result.assignment[1], Rational(1, 2));
}

TEST(SolveLpTest, InfeasibleIsAResultNotAnException) {
  LinearProgram lp;
  lp.variable_count = 1;
  lp.objective = {1};
  lp.constraints = {row({1}, Relation::kLessEqual, 1),
                    row({1}, Relation::kGreaterEqual, 2)};
  EXPECT_EQ(solve_lp(lp).status, LpStatus::kInfeasible);
}

TEST(SolveLpTest, UnboundedThrows) {
  LinearProgram lp;
  lp.variable_count = 2;
  lp.objective = {1, 0};
  lp.constraints = {row({-1, 1}, Relation::kLessEqual, 1)};
  EXPECT_THROW(solve_lp(lp), std::logic_error);
}

TEST(SolveLpTest, NegativeRightHandSidesAndRedundantEqualities) {
  // maximize x + y s.t. -x - y >= -4 (x + y <= 4), x = y, 2x = 2y, x <= 3.
  LinearProgram lp;
  lp.variable_count = 2;
  lp.objective = {1, 1};
  lp.constraints = {row({-1, -1}, Relation::kGreaterEqual, -4),
                    row({1, -1}, Relation::kEqual, 0),
                    row({2, -2}, Relation::kEqual, 0),
                    row({1, 0}, Relation::kLessEqual, 3)};
  const auto result = solve_lp(lp);
  ASSERT_EQ(result.status, LpStatus::kOptimal);
  EXPECT_EQ(result.value, Rational(4));
  EXPECT_EQ(result.assignment[0], Rational(2));
  EXPECT_EQ(result.assignment[1], Rational(2));
}

TEST(SolveLpTest, BealeCyclingExampleTerminates) {
  // Cycles under the textbook largest-coefficient rule; Bland's rule must
  // reach the optimum 5/4 at x1 = 1, x3 = 1.
  LinearProgram lp;
  lp.variable_count = 4;
  lp.objective = {Rational(3, 4), -20, Rational(1, 2), -6};
  lp.constraints = {
      row({Rational(1, 4), -8, -1, 9}, Relation::kLessEqual, 0),
      row({Rational(1, 2), -12, Rational(-1, 2), 3}, Relation::kLessEqual, 0),
      row({0, 0, 1, 0}, Relation::kLessEqual, 1)};
  const auto result = solve_lp(lp);
  ASSERT_EQ(result.status, LpStatus::kOptimal);
  EXPECT_EQ(result.value, Rational(5, 4));
  EXPECT_EQ(result.assignment[0], Rational(1));
  EXPECT_EQ(result.assignment[2], Rational(1));
}

// Brute-force oracle for two-variable programs with <= rows: the optimum of
// a bounded feasible LP sits at a vertex, i.e. the intersection of two of
// the boundary lines (constraints and the axes).
std::optional<Rational> vertex_optimum(const LinearProgram& lp) {
  struct Line {
    Rational a, b, c;  // a x + b y = c
  };
  std::vector<Line> lines{{1, 0, 0}, {0, 1, 0}};
  for (const auto& c : lp.constraints) {
    lines.push_back({c.coefficients[0], c.coefficients[1], c.rhs});
  }
  std::optional<Rational> best;
  for (std::size_t p = 0; p < lines.size(); ++p) {
    for (std::size_t q = p + 1; q < lines.size(); ++q) {
      const Rational det = lines[p].a * lines[q].b - lines[q].a * lines[p].b;
      if (det.is_zero()) continue;
      const Rational x = (lines[p].c * lines[q].b - lines[q].c * lines[p].b) / det;
      const Rational y = (lines[p].a * lines[q].c - lines[q].a * lines[p].c) / det;
      if (x.sign() < 0 || y.sign() < 0) continue;
      bool feasible = true;
      for (const auto& c : lp.constraints) {
        if (c.coefficients[0] * x + c.coefficients[1] * y > c.rhs) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      const Rational value = lp.objective[0] * x + lp.objective[1] * y;
      if (!best || value > *best) best = value;
    }
  }
  return best;
}

TEST(SolveLpTest, MatchesVertexEnumerationOnRandomBoxedPrograms) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> rhs(-3, 6);
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp;
    lp.variable_count = 2;
    lp.objective = {coef(rng), coef(rng)};
    // Box x, y <= 5 keeps every program bounded.
    lp.constraints = {row({1, 0}, Relation::kLessEqual, 5),
                      row({0, 1}, Relation::kLessEqual, 5)};
    const int extra = 1 + trial % 3;
    for (int k = 0; k < extra; ++k) {
      lp.constraints.push_back(
          row({coef(rng), coef(rng)}, Relation::kLessEqual, rhs(rng)));
    }
    const auto expected = vertex_optimum(lp);
    const auto result = solve_lp(lp);
    if (!expected) {
      EXPECT_EQ(result.status, LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(result.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_EQ(result.value, *expected) << "trial " << trial;
    const Rational achieved = lp.objective[0] * result.assignment[0] +
                              lp.objective[1] * result.assignment[1];
    EXPECT_EQ(achieved, result.value);
  }
}

}  // namespace
}  // namespace domlab
