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

// Exact-rational linear programs: the efficiency lower-bound LPs over the
// incremental values and a two-phase tableau simplex with Bland's rule.

#ifndef SEQAUCTION_LP_HPP_
#define SEQAUCTION_LP_HPP_

#include <string>
#include <vector>

#include "seqauction/rational.hpp"

namespace seqauction {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMinimize, kMaximize };

// Row families of the efficiency LP, in the order the builder emits them.
enum class RowFamily {
  kNormalization,   // sum_j v1(j) = 1
  kWelfare,         // sw(l | 0) <= 1, index l in [0, T)
  kValidInequality, // index l in [0, T-k)
  kConcavity1,      // v1(j+1) - v1(j) <= 0, index j in [1, T-1]
  kConcavity2,      // same for buyer 2
  kOther,
};

std::string to_string(RowFamily family);
std::string to_string(Relation relation);

struct Constraint {
  RowFamily family = RowFamily::kOther;
  int index = 0;
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;

  std::string label() const;
};

// All variables are bounded below by zero.
struct LinearProgram {
  std::vector<std::string> variable_names;
  std::vector<Rational> objective;
  Sense sense = Sense::kMinimize;
  std::vector<Constraint> constraints;

  std::size_t num_variables() const { return variable_names.size(); }
};

// Variables v1(1..T) then v2(1..T). Minimizes the welfare of endpoint
// (k, T-k) under opt = 1 normalization with optimum (T, 0), subject to the
// welfare rows, the valid inequalities for 0 <= l < T-k, and, if `concave`,
// non-increasing incremental values for both buyers.
// Throws std::out_of_range unless 0 <= k < T.
LinearProgram build_primal(int T, int k, bool concave);

// Position of v_buyer(item) in the variable vector of build_primal(T, ...).
inline std::size_t primal_variable(int T, int buyer, int item) {
  return static_cast<std::size_t>((buyer - 1) * T + item - 1);
}

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(LpStatus status);

struct LpSolveResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimal_value;
  std::vector<Rational> primal_solution;
  std::size_t pivots = 0;
};

// Two-phase primal simplex on an exact rational tableau. Entering and leaving
// variables follow Bland's smallest-index rule, so degenerate pivots cannot
// cycle. Optimal results are re-checked against every constraint exactly.
LpSolveResult solve_exact(const LinearProgram& lp);

Rational objective_value(const LinearProgram& lp,
                         const std::vector<Rational>& x);
bool is_primal_feasible(const LinearProgram& lp,
                        const std::vector<Rational>& x);

}  // namespace seqauction

#endif  // SEQAUCTION_LP_HPP_
