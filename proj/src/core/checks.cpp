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

#include "seqauction/checks.hpp"

namespace seqauction {
namespace {

constexpr Buyer kBuyers[] = {Buyer::kOne, Buyer::kTwo};

std::string buyer_tag(Buyer b) {
  return "buyer " + std::to_string(static_cast<int>(b));
}

// Decision nodes of the lattice.
std::vector<Node> decision_nodes(const EquilibriumSolution& sol) {
  std::vector<Node> out;
  for (const auto& n : sol.nodes()) {
    if (!n.is_terminal(sol.items())) out.push_back(n);
  }
  return out;
}

const Rational& next_value(const AuctionInstance& inst, const Node& x,
                           Buyer b) {
  return inst.valuation(b).value(x.won(b) + 1);
}

Rational total_utility(const EquilibriumSolution& sol, const Node& x) {
  const auto& rec = sol.at(x);
  return rec.u1 + rec.u2;
}

// Utilities at x if `winner` takes the item at the current bids.
std::pair<Rational, Rational> utilities_if_wins(const EquilibriumSolution& sol,
                                                const Node& x, Buyer winner) {
  const auto& inst = sol.instance();
  const Round& round = sol.round(x);
  const auto& child = sol.at(x.step(winner));
  if (winner == Buyer::kOne) {
    return {next_value(inst, x, Buyer::kOne) - round.b2 + child.u1, child.u2};
  }
  return {child.u1, next_value(inst, x, Buyer::kTwo) - round.b1 + child.u2};
}

void expect_equal(CheckReport& report, const std::string& location,
                  const std::string& detail, const Rational& expected,
                  const Rational& actual) {
  ++report.evaluated;
  if (expected != actual) report.fail({location, detail, expected, actual});
}

// Records a violation of lhs <= rhs.
void expect_at_most(CheckReport& report, const std::string& location,
                    const std::string& detail, const Rational& lhs,
                    const Rational& rhs) {
  ++report.evaluated;
  if (lhs > rhs) report.fail({location, detail, rhs, lhs});
}

}  // namespace

CheckReport check_recurrences(const EquilibriumSolution& sol) {
  CheckReport report{"recurrences", true, 0, {}};
  const auto& inst = sol.instance();
  for (const auto& x : sol.nodes()) {
    const auto& rec = sol.at(x);
    const std::string loc = x.key();
    if (x.is_terminal(sol.items())) {
      expect_equal(report, loc, "terminal u1", Rational(0), rec.u1);
      expect_equal(report, loc, "terminal u2", Rational(0), rec.u2);
      continue;
    }
    const Round& round = sol.round(x);
    const Node left = x.step(Buyer::kOne);
    const Node right = x.step(Buyer::kTwo);
    expect_equal(report, loc, "b1",
                 next_value(inst, x, Buyer::kOne) + sol.utility(left, Buyer::kOne) -
                     sol.utility(right, Buyer::kOne),
                 round.b1);
    expect_equal(report, loc, "b2",
                 next_value(inst, x, Buyer::kTwo) +
                     sol.utility(right, Buyer::kTwo) -
                     sol.utility(left, Buyer::kTwo),
                 round.b2);
    expect_equal(report, loc, "price = min bid", min(round.b1, round.b2),
                 round.price);
    const Outcome expected_outcome =
        round.b1 > round.b2   ? Outcome::kBuyer1Wins
        : round.b1 < round.b2 ? Outcome::kBuyer2Wins
                              : Outcome::kTie;
    ++report.evaluated;
    if (expected_outcome != round.outcome) {
      report.fail({loc, "outcome label " + to_string(round.outcome) +
                            ", expected " + to_string(expected_outcome),
                   round.b1, round.b2});
    }
    const Buyer winner =
        round.outcome == Outcome::kBuyer2Wins ? Buyer::kTwo : Buyer::kOne;
    const auto [u1, u2] = utilities_if_wins(sol, x, winner);
    expect_equal(report, loc, "u1", u1, rec.u1);
    expect_equal(report, loc, "u2", u2, rec.u2);
    if (round.outcome == Outcome::kTie) {
      for (Buyer i : kBuyers) {
        expect_equal(report, loc,
                     "tie identity for " + buyer_tag(i),
                     next_value(inst, x, i) - round.bid(i) +
                         sol.utility(x.step(i), i),
                     sol.utility(x.step(other(i)), i));
      }
    }
  }
  return report;
}

CheckReport check_tie_invariance(const EquilibriumSolution& sol) {
  CheckReport report{"tie_invariance", true, 0, {}};
  for (const auto& x : decision_nodes(sol)) {
    if (sol.round(x).outcome != Outcome::kTie) continue;
    ++report.evaluated;
    const auto a = utilities_if_wins(sol, x, Buyer::kOne);
    const auto b = utilities_if_wins(sol, x, Buyer::kTwo);
    if (a.first != b.first) {
      report.fail({x.key(), "u1 under the two tie resolutions", a.first,
                   b.first});
    }
    if (a.second != b.second) {
      report.fail({x.key(), "u2 under the two tie resolutions", a.second,
                   b.second});
    }
    const auto& rec = sol.at(x);
    if (rec.u1 != a.first || rec.u2 != a.second) {
      report.fail({x.key(), "stored utilities differ from tie resolution",
                   a.first + a.second, rec.u1 + rec.u2});
    }
  }
  return report;
}

CheckReport check_winner_condition(const EquilibriumSolution& sol) {
  CheckReport report{"winner_condition", true, 0, {}};
  const auto& inst = sol.instance();
  for (const auto& x : decision_nodes(sol)) {
    const Round& round = sol.round(x);
    for (Buyer i : kBuyers) {
      ++report.evaluated;
      const Rational mine =
          next_value(inst, x, i) + total_utility(sol, x.step(i));
      const Rational theirs =
          next_value(inst, x, other(i)) + total_utility(sol, x.step(other(i)));
      const bool bid_side = round.bid(i) >= round.bid(other(i));
      const bool welfare_side = mine >= theirs;
      if (bid_side != welfare_side) {
        report.fail({x.key(), buyer_tag(i) + " bid-vs-welfare comparison",
                     theirs, mine});
      }
    }
  }
  return report;
}

CheckReport check_max_form_utilities(const EquilibriumSolution& sol) {
  CheckReport report{"max_form_utilities", true, 0, {}};
  const auto& inst = sol.instance();
  for (const auto& x : decision_nodes(sol)) {
    const Rational best =
        max(next_value(inst, x, Buyer::kOne) +
                total_utility(sol, x.step(Buyer::kOne)),
            next_value(inst, x, Buyer::kTwo) +
                total_utility(sol, x.step(Buyer::kTwo)));
    for (Buyer i : kBuyers) {
      const Buyer j = other(i);
      expect_equal(report, x.key(), "u of " + buyer_tag(i),
                   best - next_value(inst, x, j) - sol.utility(x.step(j), j),
                   sol.utility(x, i));
    }
  }
  return report;
}

CheckReport check_no_free_win(const EquilibriumSolution& sol) {
  CheckReport report{"no_free_win", true, 0, {}};
  for (const auto& x : decision_nodes(sol)) {
    const Round& round = sol.round(x);
    for (Buyer i : kBuyers) {
      ++report.evaluated;
      const Rational& here = sol.utility(x, i);
      const Rational& after_loss = sol.utility(x.step(other(i)), i);
      if (here < after_loss) {
        report.fail({x.key(), buyer_tag(i) + ": u_i(x) >= u_i(x+e_-i)",
                     after_loss, here});
        continue;
      }
      const bool strict = here > after_loss;
      const bool strict_win = round.bid(i) > round.bid(other(i));
      if (strict != strict_win) {
        report.fail({x.key(),
                     buyer_tag(i) + ": strictness must match strict win",
                     after_loss, here});
      }
    }
  }
  return report;
}

CheckReport check_declining_prices(const EquilibriumSolution& sol) {
  CheckReport report{"declining_prices", true, 0, {}};
  for (const auto& x : decision_nodes(sol)) {
    if (x.remaining(sol.items()) <= 1) continue;
    const Round& round = sol.round(x);
    for (Buyer i : kBuyers) {
      if (!round.wins(i)) continue;
      ++report.evaluated;
      const Rational& next_price = sol.round(x.step(i)).price;
      if (round.price < next_price) {
        report.fail({x.key(), buyer_tag(i) + " wins: p(x) >= p(x+e_i)",
                     next_price, round.price});
        continue;
      }
      const Round& sibling = sol.round(x.step(other(i)));
      const bool also_wins_sibling =
          sibling.bid(i) >= sibling.bid(other(i));
      if ((round.price == next_price) != also_wins_sibling) {
        report.fail({x.key(),
                     buyer_tag(i) +
                         ": price equality iff winner also wins at x+e_-i",
                     next_price, round.price});
      }
    }
  }
  return report;
}

CheckReport check_nonnegativity(const EquilibriumSolution& sol) {
  CheckReport report{"nonnegativity", true, 0, {}};
  for (const auto& x : sol.nodes()) {
    for (Buyer i : kBuyers) {
      expect_at_most(report, x.key(), "u of " + buyer_tag(i) + " >= 0",
                     Rational(0), sol.utility(x, i));
    }
    if (!x.is_terminal(sol.items())) {
      expect_at_most(report, x.key(), "price >= 0", Rational(0),
                     sol.round(x).price);
    }
  }
  return report;
}

namespace {

void utility_upper_bound_at(CheckReport& report, const EquilibriumSolution& sol,
                            const Node& x, int k, const std::string& loc) {
  const auto& inst = sol.instance();
  const Node end = Allocation{k}.terminal(sol.items());
  for (Buyer i : kBuyers) {
    const auto& val = inst.valuation(i);
    expect_at_most(report, loc,
                   buyer_tag(i) + " with endpoint k=" + std::to_string(k),
                   sol.utility(x, i),
                   val.cumulative(end.won(i)) - val.cumulative(x.won(i)));
  }
}

// Corollary condition for one step x -> x.step(winner) towards endpoint k.
void subpath_efficiency_at(CheckReport& report, const EquilibriumSolution& sol,
                           const Node& x, Buyer winner, int k,
                           const std::string& loc) {
  const auto& inst = sol.instance();
  const Node child = x.step(winner);
  ++report.evaluated;
  const Rational full = efficiency(inst, x, Allocation{k});
  const Rational rest = efficiency(inst, child, Allocation{k});
  if (!(full < rest)) return;
  const auto opt = opt_welfare(inst, x);
  const int t = x.remaining(sol.items());
  const bool case_a = opt.argmax == std::vector<int>{t} && winner == Buyer::kTwo;
  const bool case_b = opt.argmax == std::vector<int>{0} && winner == Buyer::kOne;
  if (case_a == case_b) {
    report.fail({loc, "efficiency drop by " + buyer_tag(winner) +
                          " step towards k=" + std::to_string(k) +
                          " without a unique all-to-loser optimum",
                 rest, full});
  }
}

}  // namespace

CheckReport check_utility_upper_bound(const EquilibriumSolution& sol,
                                      const PathReport& path) {
  CheckReport report{"utility_upper_bound", true, 0, {}};
  for (const auto& x : path.nodes) {
    utility_upper_bound_at(report, sol, x, path.endpoint.k, "path@" + x.key());
  }
  return report;
}

CheckReport check_utility_upper_bound_all_paths(
    const EquilibriumSolution& sol) {
  CheckReport report{"utility_upper_bound", true, 0, {}};
  const EndpointTable table(sol);
  for (const auto& x : sol.nodes()) {
    for (int k : table.endpoints(x)) {
      utility_upper_bound_at(report, sol, x, k, x.key());
    }
  }
  return report;
}

CheckReport check_utility_difference(const EquilibriumSolution& sol) {
  CheckReport report{"utility_difference", true, 0, {}};
  const auto& inst = sol.instance();
  for (const auto& x : decision_nodes(sol)) {
    for (Buyer i : kBuyers) {
      const Buyer j = other(i);
      expect_equal(report, x.key(), "u_i - u_-i for " + buyer_tag(i),
                   next_value(inst, x, i) + sol.utility(x.step(i), i) -
                       next_value(inst, x, j) - sol.utility(x.step(j), j),
                   sol.utility(x, i) - sol.utility(x, j));
    }
  }
  return report;
}

CheckReport check_subpath_efficiency(const EquilibriumSolution& sol,
                                     const PathReport& path) {
  CheckReport report{"subpath_efficiency", true, 0, {}};
  for (std::size_t s = 0; s + 1 < path.nodes.size(); ++s) {
    const Node& x = path.nodes[s];
    const Buyer winner =
        path.nodes[s + 1] == x.step(Buyer::kOne) ? Buyer::kOne : Buyer::kTwo;
    subpath_efficiency_at(report, sol, x, winner, path.endpoint.k,
                          "path@" + x.key());
  }
  return report;
}

CheckReport check_subpath_efficiency_all_paths(const EquilibriumSolution& sol) {
  CheckReport report{"subpath_efficiency", true, 0, {}};
  const EndpointTable table(sol);
  for (const auto& x : decision_nodes(sol)) {
    const Round& round = sol.round(x);
    for (Buyer b : kBuyers) {
      if (!round.wins(b)) continue;
      for (int k : table.endpoints(x.step(b))) {
        subpath_efficiency_at(report, sol, x, b, k, x.key());
      }
    }
  }
  return report;
}

Rational path_inequality_lhs(const EquilibriumSolution& sol, const Node& x) {
  Rational sum;
  for (int j = 0; j <= x.remaining(sol.items()); ++j) {
    sum += sol.utility(Node{x.x1 + j, x.x2}, Buyer::kTwo);
  }
  return sum;
}

Rational path_inequality_rhs(const AuctionInstance& inst, const Node& x,
                             int k) {
  const int T = inst.items;
  const auto& v1 = inst.valuation_1;
  const auto& v2 = inst.valuation_2;
  Rational sum;
  for (int i = x.x2 + 1; i <= T - k; ++i) {
    sum += Rational(T - x.x1 - i + 1) * v2.value(i);
    sum -= v1.cumulative(T - i + 1) - v1.cumulative(k);
  }
  return sum;
}

CheckReport check_theorem_path_inequality(const EquilibriumSolution& sol,
                                          const PathReport& path) {
  CheckReport report{"path_inequality", true, 0, {}};
  for (const auto& x : path.nodes) {
    expect_at_most(report, "path@" + x.key(),
                   "sum of u2 along x + j e1 vs bound for k=" +
                       std::to_string(path.endpoint.k),
                   path_inequality_lhs(sol, x),
                   path_inequality_rhs(sol.instance(), x, path.endpoint.k));
  }
  return report;
}

CheckReport check_theorem_path_inequality_all_paths(
    const EquilibriumSolution& sol) {
  CheckReport report{"path_inequality", true, 0, {}};
  const EndpointTable table(sol);
  for (const auto& x : sol.nodes()) {
    const auto endpoints = table.endpoints(x);
    if (endpoints.empty()) continue;
    const Rational lhs = path_inequality_lhs(sol, x);
    for (int k : endpoints) {
      expect_at_most(report, x.key(),
                     "sum of u2 along x + j e1 vs bound for k=" +
                         std::to_string(k),
                     lhs, path_inequality_rhs(sol.instance(), x, k));
    }
  }
  return report;
}

Rational valid_inequality_summed(const AuctionInstance& inst, int k, int l) {
  const int T = inst.items;
  const auto& v1 = inst.valuation_1;
  const auto& v2 = inst.valuation_2;
  Rational sum;
  for (int i = l + 1; i <= T - k; ++i) {
    sum += Rational(T - i + 1) * v2.value(i);
    for (int j = k + 1; j <= T - i + 1; ++j) sum -= v1.value(j);
  }
  return sum;
}

Rational valid_inequality_weighted(const AuctionInstance& inst, int k, int l) {
  const int T = inst.items;
  const auto& v1 = inst.valuation_1;
  const auto& v2 = inst.valuation_2;
  Rational sum;
  for (int i = l + 1; i <= T - k; ++i) sum += Rational(T - i + 1) * v2.value(i);
  for (int i = k + 1; i <= T - l; ++i) sum -= Rational(T - i - l + 1) * v1.value(i);
  return sum;
}

CheckReport check_valid_inequalities(const AuctionInstance& inst, int k) {
  CheckReport report{"valid_inequalities", true, 0, {}};
  for (int l = 0; l < inst.items - k; ++l) {
    const std::string loc = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
    const Rational summed = valid_inequality_summed(inst, k, l);
    const Rational weighted = valid_inequality_weighted(inst, k, l);
    expect_equal(report, loc, "summed and weighted forms agree", summed,
                 weighted);
    expect_at_most(report, loc, "weighted form >= 0", Rational(0), weighted);
  }
  return report;
}

std::vector<CheckReport> run_all_checks(const EquilibriumSolution& sol) {
  std::vector<CheckReport> reports;
  reports.push_back(check_recurrences(sol));
  reports.push_back(check_tie_invariance(sol));
  reports.push_back(check_winner_condition(sol));
  reports.push_back(check_max_form_utilities(sol));
  reports.push_back(check_no_free_win(sol));
  reports.push_back(check_declining_prices(sol));
  reports.push_back(check_nonnegativity(sol));
  reports.push_back(check_utility_upper_bound_all_paths(sol));
  reports.push_back(check_utility_difference(sol));
  reports.push_back(check_subpath_efficiency_all_paths(sol));
  reports.push_back(check_theorem_path_inequality_all_paths(sol));

  CheckReport valid{"valid_inequalities", true, 0, {}};
  for (const auto& endpoint :
       reachable_equilibrium_endpoints(sol, Node{0, 0})) {
    auto part = check_valid_inequalities(sol.instance(), endpoint.k);
    valid.evaluated += part.evaluated;
    for (auto& w : part.witnesses) valid.fail(std::move(w));
  }
  reports.push_back(std::move(valid));
  return reports;
}

}  // namespace seqauction
