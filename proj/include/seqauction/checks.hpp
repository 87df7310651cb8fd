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

// Executable structural properties of equilibria. Every check returns a
// report listing violations instead of aborting, so a batch run collects a
// full inventory. Each property here is a theorem about the model: a failing
// check on a solver output means a bug in the solver or in the check.

#ifndef SEQAUCTION_CHECKS_HPP_
#define SEQAUCTION_CHECKS_HPP_

#include <string>
#include <vector>

#include "seqauction/equilibrium.hpp"

namespace seqauction {

struct Witness {
  std::string location;  // "x1,x2", "path ... @ x1,x2", or "l=..."
  std::string detail;
  Rational expected;
  Rational actual;
};

struct CheckReport {
  std::string check_name;
  bool passed = true;
  std::size_t evaluated = 0;  // number of individual conditions examined
  std::vector<Witness> witnesses;

  void fail(Witness w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }
};

// Bid, price, outcome and utility recurrences at every decision node,
// including the exact-tie utility identity for both resolutions.
CheckReport check_recurrences(const EquilibriumSolution& sol);

// At every tie node, utilities under "buyer 1 wins" and "buyer 2 wins" agree.
// `evaluated` counts the tie nodes examined.
CheckReport check_tie_invariance(const EquilibriumSolution& sol);

// b_i >= b_-i  <=>  v_i(x_i+1) + U(x+e_i) >= v_-i(x_-i+1) + U(x+e_-i).
CheckReport check_winner_condition(const EquilibriumSolution& sol);

// u_i(x) = max_j [v_j(x_j+1) + U(x+e_j)] - v_-i(x_-i+1) - u_-i(x+e_-i).
CheckReport check_max_form_utilities(const EquilibriumSolution& sol);

// u_i(x) >= u_i(x+e_-i), strict iff b_i(x) > b_-i(x).
CheckReport check_no_free_win(const EquilibriumSolution& sol);

// Prices never rise along an equilibrium step; equality iff the same buyer
// also (weakly) wins at the sibling node.
CheckReport check_declining_prices(const EquilibriumSolution& sol);

// All forward utilities and all prices are non-negative.
CheckReport check_nonnegativity(const EquilibriumSolution& sol);

// u_i(x) <= value of the items buyer i still wins along `path`, at every
// node of the path.
CheckReport check_utility_upper_bound(const EquilibriumSolution& sol,
                                      const PathReport& path);
// Same bound for every node and every endpoint reachable from it, which
// covers every equilibrium path in the lattice.
CheckReport check_utility_upper_bound_all_paths(const EquilibriumSolution& sol);

// u_i - u_-i = v_i(x_i+1) + u_i(x+e_i) - v_-i(x_-i+1) - u_-i(x+e_-i).
CheckReport check_utility_difference(const EquilibriumSolution& sol);

// Whenever dropping the first step of a path strictly raises efficiency,
// the first node's unique welfare optimum gives every remaining item to the
// buyer who lost that step.
CheckReport check_subpath_efficiency(const EquilibriumSolution& sol,
                                     const PathReport& path);
CheckReport check_subpath_efficiency_all_paths(const EquilibriumSolution& sol);

// Left side: sum_{j=0}^{t(x)} u2(x + j e1), read from the full lattice.
Rational path_inequality_lhs(const EquilibriumSolution& sol, const Node& x);
// Right side for endpoint (k, T-k):
// sum_{i=x2+1}^{T-k} [(T-x1-i+1) v2(i) - sum_{j=k+1}^{T-i+1} v1(j)].
Rational path_inequality_rhs(const AuctionInstance& inst, const Node& x,
                             int k);

// lhs <= rhs at every node of an equilibrium path ending at (k, T-k).
CheckReport check_theorem_path_inequality(const EquilibriumSolution& sol,
                                          const PathReport& path);
CheckReport check_theorem_path_inequality_all_paths(
    const EquilibriumSolution& sol);

// Both algebraic forms of the valid inequality for endpoint (k, T-k).
// Summed form: sum_{i=l+1}^{T-k} [(T-i+1) v2(i) - sum_{j=k+1}^{T-i+1} v1(j)].
Rational valid_inequality_summed(const AuctionInstance& inst, int k, int l);
// Weighted form: sum_{i=l+1}^{T-k} (T-i+1) v2(i)
//              - sum_{i=k+1}^{T-l} (T-i-l+1) v1(i).
Rational valid_inequality_weighted(const AuctionInstance& inst, int k, int l);

// For 0 <= l < T-k: both forms agree exactly and are >= 0. The caller
// guarantees that (k, T-k) is an equilibrium endpoint from the root.
CheckReport check_valid_inequalities(const AuctionInstance& inst, int k);

// Every check above, with path properties quantified over all equilibrium
// paths and the valid inequalities applied to every root-reachable endpoint.
std::vector<CheckReport> run_all_checks(const EquilibriumSolution& sol);

}  // namespace seqauction

#endif  // SEQAUCTION_CHECKS_HPP_
