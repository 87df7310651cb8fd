// Copyright 2026 The seqauction Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqauction/lp.hpp"

#include <optional>
#include <stdexcept>

namespace seqauction {

std::string to_string(RowFamily family) {
  switch (family) {
    case RowFamily::kNormalization:
      return "normalization";
    case RowFamily::kWelfare:
      return "welfare";
    case RowFamily::kValidInequality:
      return "valid";
    case RowFamily::kConcavity1:
      return "concavity1";
    case RowFamily::kConcavity2:
      return "concavity2";
    case RowFamily::kOther:
      return "row";
  }
  return "row";
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

std::string Constraint::label() const {
  return to_string(family) + "[" + std::to_string(index) + "]";
}

LinearProgram build_primal(int T, int k, bool concave) {
  if (T < 1 || k < 0 || k >= T) {
    throw std::out_of_range("build_primal requires 0 <= k < T, got T=" +
                            std::to_string(T) + ", k=" + std::to_string(k));
  }
  const auto n = static_cast<std::size_t>(2 * T);
  auto v1 = [T](int item) { return primal_variable(T, 1, item); };
  auto v2 = [T](int item) { return primal_variable(T, 2, item); };

  LinearProgram lp;
  lp.sense = Sense::kMinimize;
  for (int buyer = 1; buyer <= 2; ++buyer) {
    for (int j = 1; j <= T; ++j) {
      lp.variable_names.push_back("v" + std::to_string(buyer) + "(" +
                                  std::to_string(j) + ")");
    }
  }
  lp.objective.assign(n, Rational(0));
  for (int j = 1; j <= k; ++j) lp.objective[v1(j)] = 1;
  for (int j = 1; j <= T - k; ++j) lp.objective[v2(j)] = 1;

  auto row = [&](RowFamily family, int index, Relation rel, Rational rhs) {
    Constraint c;
    c.family = family;
    c.index = index;
    c.coefficients.assign(n, Rational(0));
    c.relation = rel;
    c.rhs = std::move(rhs);
    return c;
  };

  {
    Constraint c = row(RowFamily::kNormalization, T, Relation::kEqual, 1);
    for (int j = 1; j <= T; ++j) c.coefficients[v1(j)] = 1;
    lp.constraints.push_back(std::move(c));
  }
  for (int l = 0; l < T; ++l) {
    Constraint c = row(RowFamily::kWelfare, l, Relation::kLessEqual, 1);
    for (int j = 1; j <= l; ++j) c.coefficients[v1(j)] = 1;
    for (int j = 1; j <= T - l; ++j) c.coefficients[v2(j)] = 1;
    lp.constraints.push_back(std::move(c));
  }
  for (int l = 0; l < T - k; ++l) {
    Constraint c =
        row(RowFamily::kValidInequality, l, Relation::kGreaterEqual, 0);
    for (int i = l + 1; i <= T - k; ++i) c.coefficients[v2(i)] = T - i + 1;
    for (int i = k + 1; i <= T - l; ++i) c.coefficients[v1(i)] = -(T - i - l + 1);
    lp.constraints.push_back(std::move(c));
  }
  if (concave) {
    for (int buyer = 1; buyer <= 2; ++buyer) {
      const RowFamily family =
          buyer == 1 ? RowFamily::kConcavity1 : RowFamily::kConcavity2;
      for (int j = 1; j <= T - 1; ++j) {
        Constraint c = row(family, j, Relation::kLessEqual, 0);
        c.coefficients[primal_variable(T, buyer, j + 1)] = 1;
        c.coefficients[primal_variable(T, buyer, j)] = -1;
        lp.constraints.push_back(std::move(c));
      }
    }
  }
  return lp;
}

Rational objective_value(const LinearProgram& lp,
                         const std::vector<Rational>& x) {
  if (x.size() != lp.num_variables()) {
    throw std::invalid_argument("point dimension does not match the LP");
  }
  Rational sum;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!lp.objective[j].is_zero()) sum += lp.objective[j] * x[j];
  }
  return sum;
}

bool is_primal_feasible(const LinearProgram& lp,
                        const std::vector<Rational>& x) {
  if (x.size() != lp.num_variables()) return false;
  for (const auto& xj : x) {
    if (xj.sign() < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!c.coefficients[j].is_zero()) lhs += c.coefficients[j] * x[j];
    }
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Dense tableau in canonical form: basic columns are unit vectors. Column
// order is [structural | slack/surplus | artificial]; the objective row holds
// reduced costs and `value` the current objective (minimization).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows, std::vector<mpq_class>(cols)),
        rhs_(rows),
        basis_(rows),
        reduced_(cols) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return reduced_.size(); }

  mpq_class& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  mpq_class& rhs(std::size_t r) { return rhs_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t basis(std::size_t r) const { return basis_[r]; }
  mpq_class& reduced(std::size_t c) { return reduced_[c]; }
  mpq_class& value() { return value_; }

  // Resets the objective row for costs `cost` (indexed by column).
  void price_out(const std::vector<mpq_class>& cost) {
    for (std::size_t c = 0; c < cols(); ++c) reduced_[c] = cost[c];
    value_ = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      const mpq_class& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c < cols(); ++c) {
        if (sgn(rows_[r][c]) != 0) reduced_[c] -= cb * rows_[r][c];
      }
      value_ += cb * rhs_[r];
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = rows_[pr];
    const mpq_class inv = 1 / prow[pc];
    nonzero_.clear();
    for (std::size_t c = 0; c < cols(); ++c) {
      if (sgn(prow[c]) != 0) {
        prow[c] *= inv;
        nonzero_.push_back(c);
      }
    }
    rhs_[pr] *= inv;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == pr || sgn(rows_[r][pc]) == 0) continue;
      const mpq_class factor = rows_[r][pc];
      for (std::size_t c : nonzero_) {
        scratch_ = factor * prow[c];
        rows_[r][c] -= scratch_;
      }
      scratch_ = factor * rhs_[pr];
      rhs_[r] -= scratch_;
    }
    if (sgn(reduced_[pc]) != 0) {
      const mpq_class factor = reduced_[pc];
      for (std::size_t c : nonzero_) {
        scratch_ = factor * prow[c];
        reduced_[c] -= scratch_;
      }
      scratch_ = factor * rhs_[pr];
      value_ += scratch_;
    }
    basis_[pr] = pc;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> reduced_;
  mpq_class value_;  // c_B x_B
  mpq_class scratch_;
  std::vector<std::size_t> nonzero_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Bland's rule: enter the lowest-index improving column; leave by minimum
// ratio, breaking ties by the lowest-index basic variable.
PhaseResult run_simplex(Tableau& tab, const std::vector<bool>& allowed,
                        std::size_t& pivots) {
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < tab.cols(); ++c) {
      if (allowed[c] && sgn(tab.reduced(c)) < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) return PhaseResult::kOptimal;

    std::optional<std::size_t> leaving;
    mpq_class best_ratio;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      const mpq_class& a = tab.at(r, *entering);
      if (sgn(a) <= 0) continue;
      mpq_class ratio = tab.rhs(r) / a;
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis(r) < tab.basis(*leaving))) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (!leaving) return PhaseResult::kUnbounded;
    tab.pivot(*leaving, *entering);
    ++pivots;
  }
}

}  // namespace

LpSolveResult solve_exact(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  if (lp.objective.size() != n) {
    throw std::invalid_argument("objective length does not match variables");
  }
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) {
      throw std::invalid_argument("constraint " + c.label() +
                                  " has the wrong number of coefficients");
    }
  }

  // Normalize every row to a non-negative right-hand side.
  struct Row {
    std::vector<mpq_class> a;
    Relation rel;
    mpq_class b;
  };
  std::vector<Row> rows;
  rows.reserve(lp.constraints.size());
  std::size_t num_slack = 0;
  std::size_t num_artificial = 0;
  for (const auto& c : lp.constraints) {
    Row row{{}, c.relation, c.rhs.raw()};
    row.a.reserve(n);
    for (const auto& coef : c.coefficients) row.a.push_back(coef.raw());
    if (sgn(row.b) < 0) {
      for (auto& coef : row.a) coef = -coef;
      row.b = -row.b;
      if (row.rel == Relation::kLessEqual) {
        row.rel = Relation::kGreaterEqual;
      } else if (row.rel == Relation::kGreaterEqual) {
        row.rel = Relation::kLessEqual;
      }
    }
    if (row.rel != Relation::kEqual) ++num_slack;
    if (row.rel != Relation::kLessEqual) ++num_artificial;
    rows.push_back(std::move(row));
  }

  const std::size_t m = rows.size();
  const std::size_t artificial_begin = n + num_slack;
  const std::size_t cols = artificial_begin + num_artificial;
  Tableau tab(m, cols);
  {
    std::size_t slack = n;
    std::size_t artificial = artificial_begin;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = rows[r].a[j];
      tab.rhs(r) = rows[r].b;
      switch (rows[r].rel) {
        case Relation::kLessEqual:
          tab.at(r, slack) = 1;
          tab.basis(r) = slack++;
          break;
        case Relation::kGreaterEqual:
          tab.at(r, slack++) = -1;
          tab.at(r, artificial) = 1;
          tab.basis(r) = artificial++;
          break;
        case Relation::kEqual:
          tab.at(r, artificial) = 1;
          tab.basis(r) = artificial++;
          break;
      }
    }
  }

  LpSolveResult result;
  std::vector<bool> allowed(cols, true);

  if (num_artificial > 0) {
    std::vector<mpq_class> phase1(cols);
    for (std::size_t c = artificial_begin; c < cols; ++c) phase1[c] = 1;
    tab.price_out(phase1);
    run_simplex(tab, allowed, result.pivots);  // bounded below by zero
    if (sgn(tab.value()) > 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis or drop redundant rows.
    for (std::size_t r = 0; r < tab.rows();) {
      if (tab.basis(r) < artificial_begin) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < artificial_begin; ++c) {
        if (sgn(tab.at(r, c)) != 0) {
          col = c;
          break;
        }
      }
      if (col) {
        tab.pivot(r, *col);
        ++result.pivots;
        ++r;
      } else {
        tab.drop_row(r);
      }
    }
    for (std::size_t c = artificial_begin; c < cols; ++c) allowed[c] = false;
  }

  std::vector<mpq_class> cost(cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = lp.sense == Sense::kMinimize ? lp.objective[j].raw()
                                           : mpq_class(-lp.objective[j].raw());
  }
  tab.price_out(cost);
  if (run_simplex(tab, allowed, result.pivots) == PhaseResult::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.primal_solution.assign(n, Rational(0));
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basis(r) < n) {
      result.primal_solution[tab.basis(r)] = Rational(tab.rhs(r));
    }
  }
  result.optimal_value = objective_value(lp, result.primal_solution);
  const Rational tableau_value =
      lp.sense == Sense::kMinimize ? Rational(tab.value())
                                   : -Rational(tab.value());
  if (result.optimal_value != tableau_value ||
      !is_primal_feasible(lp, result.primal_solution)) {
    throw std::logic_error("simplex produced an inconsistent optimal basis");
  }
  return result;
}

}  // namespace seqauction
