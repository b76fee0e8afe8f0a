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

#include <optional>
#include <stdexcept>
#include <utility>

namespace domlab {
namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : cells_(rows, std::vector<Rational>(columns)),
        rhs_(rows),
        basis_(rows),
        reduced_(columns) {}

  std::vector<Rational>& row(std::size_t r) { return cells_[r]; }
  Rational& rhs(std::size_t r) { return rhs_[r]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return cells_.size(); }
  std::size_t columns() const { return reduced_.size(); }

  // Sets the objective and prices it out against the current basis.
  void set_objective(const std::vector<Rational>& costs) {
    reduced_ = costs;
    value_ = Rational(0);
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = costs[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < columns(); ++j) {
        if (!cells_[r][j].is_zero()) reduced_[j] -= cb * cells_[r][j];
      }
      value_ += cb * rhs_[r];
    }
  }

  const Rational& value() const { return value_; }

  // Runs simplex iterations with Bland's rule over columns < `usable`.
  // Returns false when unbounded.
  bool optimize(std::size_t usable) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable; ++j) {
        if (reduced_[j].sign() > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t e = *entering;

      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (cells_[r][e].sign() <= 0) continue;
        Rational ratio = rhs_[r] / cells_[r][e];
        if (!leaving || ratio < best ||
            (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, e);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const Rational pivot_value = cells_[r][e];
    for (auto& c : cells_[r]) {
      if (!c.is_zero()) c /= pivot_value;
    }
    rhs_[r] /= pivot_value;
    for (std::size_t k = 0; k < rows(); ++k) {
      if (k == r || cells_[k][e].is_zero()) continue;
      const Rational factor = cells_[k][e];
      for (std::size_t j = 0; j < columns(); ++j) {
        if (!cells_[r][j].is_zero()) cells_[k][j] -= factor * cells_[r][j];
      }
      rhs_[k] -= factor * rhs_[r];
    }
    if (!reduced_[e].is_zero()) {
      const Rational factor = reduced_[e];
      for (std::size_t j = 0; j < columns(); ++j) {
        if (!cells_[r][j].is_zero()) reduced_[j] -= factor * cells_[r][j];
      }
      value_ += factor * rhs_[r];
    }
    basis_[r] = e;
  }

  void drop_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational value_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& program) {
  const std::size_t n = program.variable_count;
  if (program.objective.size() != n) {
    throw std::invalid_argument("objective length differs from variable count");
  }

  // Normalize every row to a non-negative right-hand side.
  struct Row {
    std::vector<Rational> coefficients;
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  rows.reserve(program.constraints.size());
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& c : program.constraints) {
    if (c.coefficients.size() != n) {
      throw std::invalid_argument("constraint length differs from variable count");
    }
    Row row{c.coefficients, c.relation, c.rhs};
    if (row.rhs.sign() < 0) {
      for (auto& a : row.coefficients) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
    if (row.relation != Relation::kEqual) ++slack_count;
    if (row.relation != Relation::kLessEqual) ++artificial_count;
    rows.push_back(std::move(row));
  }

  // Columns: originals | slack and surplus | artificials.
  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;
  const std::size_t columns = first_artificial + artificial_count;
  Tableau tableau(rows.size(), columns);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& cells = tableau.row(r);
    for (std::size_t j = 0; j < n; ++j) cells[j] = rows[r].coefficients[j];
    tableau.rhs(r) = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::kLessEqual:
        cells[next_slack] = Rational(1);
        tableau.basic(r) = next_slack++;
        break;
      case Relation::kGreaterEqual:
        cells[next_slack++] = Rational(-1);
        cells[next_artificial] = Rational(1);
        tableau.basic(r) = next_artificial++;
        break;
      case Relation::kEqual:
        cells[next_artificial] = Rational(1);
        tableau.basic(r) = next_artificial++;
        break;
    }
  }

  // Phase one: maximize minus the sum of artificials.
  if (artificial_count > 0) {
    std::vector<Rational> phase_one(columns);
    for (std::size_t j = first_artificial; j < columns; ++j) {
      phase_one[j] = Rational(-1);
    }
    tableau.set_objective(phase_one);
    if (!tableau.optimize(columns)) {
      throw std::logic_error("phase one cannot be unbounded");
    }
    if (tableau.value().sign() < 0) {
      return LpResult{LpStatus::kInfeasible, Rational(0), {}};
    }
    // Drive zero-level artificials out of the basis; a row with no usable
    // pivot is redundant.
    for (std::size_t r = 0; r < tableau.rows();) {
      if (tableau.basic(r) < first_artificial) {
        ++r;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (!tableau.row(r)[j].is_zero()) {
          column = j;
          break;
        }
      }
      if (column) {
        tableau.pivot(r, *column);
        ++r;
      } else {
        tableau.drop_row(r);
      }
    }
  }

  std::vector<Rational> costs(columns);
  for (std::size_t j = 0; j < n; ++j) costs[j] = program.objective[j];
  tableau.set_objective(costs);
  if (!tableau.optimize(first_artificial)) {
    throw std::logic_error("linear program is unbounded");
  }

  LpResult result;
  result.status = LpStatus::kOptimal;
  result.value = tableau.value();
  result.assignment.assign(n, Rational(0));
  for (std::size_t r = 0; r < tableau.rows(); ++r) {
    if (tableau.basic(r) < n) result.assignment[tableau.basic(r)] = tableau.rhs(r);
  }
  return result;
}

}  // namespace domlab
