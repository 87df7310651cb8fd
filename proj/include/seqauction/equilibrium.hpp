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

// Subgame-perfect equilibrium of the sequential auction by backward induction
// over the (x1, x2) lattice, and equilibrium-path enumeration.

#ifndef SEQAUCTION_EQUILIBRIUM_HPP_
#define SEQAUCTION_EQUILIBRIUM_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqauction/auction.hpp"

namespace seqauction {

enum class Outcome { kBuyer1Wins, kBuyer2Wins, kTie };

std::string to_string(Outcome outcome);

// The second-price round played at a decision node.
struct Round {
  Rational b1;
  Rational b2;
  Rational price;  // min(b1, b2)
  Outcome outcome = Outcome::kTie;

  const Rational& bid(Buyer b) const { return b == Buyer::kOne ? b1 : b2; }
  // Weak win: true for the strict winner and for both buyers at a tie.
  bool wins(Buyer b) const {
    return outcome == Outcome::kTie ||
           outcome == (b == Buyer::kOne ? Outcome::kBuyer1Wins
                                        : Outcome::kBuyer2Wins);
  }
};

struct NodeRecord {
  Rational u1;
  Rational u2;
  std::optional<Round> round;  // empty at terminal nodes

  const Rational& utility(Buyer b) const { return b == Buyer::kOne ? u1 : u2; }
};

// Raised when the two tie resolutions disagree on the forward utilities.
// Mathematically impossible; signals an arithmetic bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class EquilibriumSolution {
 public:
  const AuctionInstance& instance() const { return instance_; }
  int items() const { return instance_.items; }

  // Throws std::out_of_range for nodes outside the lattice.
  const NodeRecord& at(const Node& node) const;
  const Rational& utility(const Node& node, Buyer b) const {
    return at(node).utility(b);
  }
  // Throws std::out_of_range at terminal nodes.
  const Round& round(const Node& node) const;

  // Every lattice node, level by level from the root.
  std::vector<Node> nodes() const;
  std::size_t tie_count() const { return tie_count_; }

  friend bool operator==(const EquilibriumSolution& a,
                         const EquilibriumSolution& b);

 private:
  friend EquilibriumSolution solve(const AuctionInstance& inst);
  explicit EquilibriumSolution(AuctionInstance inst);
  std::size_t index(const Node& node) const;

  AuctionInstance instance_;
  std::vector<NodeRecord> records_;
  std::size_t tie_count_ = 0;
};

// Throws std::invalid_argument for invalid instances and
// InternalConsistencyError if tie resolutions disagree.
EquilibriumSolution solve(const AuctionInstance& inst);

// All final allocations reachable from `from` by some equilibrium path
// (both children are followed at ties), ascending in k.
std::vector<Allocation> reachable_equilibrium_endpoints(
    const EquilibriumSolution& sol, const Node& from);

// For every lattice node, the set of reachable endpoints as a bitmask over
// k = 0..T. Indexed by [x1][x2].
class EndpointTable {
 public:
  explicit EndpointTable(const EquilibriumSolution& sol);

  bool reachable(const Node& from, int k) const;
  std::vector<int> endpoints(const Node& from) const;

 private:
  int items_;
  std::vector<std::vector<std::vector<bool>>> table_;
};

enum class TiePolicy { kFavorBuyer1, kFavorBuyer2, kAlternate };

std::string to_string(TiePolicy policy);

struct PathReport {
  std::vector<Node> nodes;  // from the start node down to a terminal node
  Allocation endpoint;
  std::vector<Rational> prices_paid;
  std::vector<Buyer> winners;
  Rational efficiency;
};

// Equilibrium path realized when ties are resolved by `policy`. kAlternate
// favors buyer 1 at the first tie met on the path, buyer 2 at the next, etc.
PathReport extract_path(const EquilibriumSolution& sol, const Node& from,
                        TiePolicy policy);

// Equilibrium path whose successive ties are resolved by `tie_choices` in
// order. Throws std::invalid_argument if the path meets more ties than
// choices supplied.
PathReport extract_path_with_choices(const EquilibriumSolution& sol,
                                     const Node& from,
                                     std::span<const Buyer> tie_choices);

// An equilibrium path from `from` ending at `endpoint`, if one exists.
std::optional<PathReport> witness_path(const EquilibriumSolution& sol,
                                       const Node& from, Allocation endpoint);

// True if consecutive nodes differ by one unit step and each step's winner
// bid weakly more than the loser.
bool is_equilibrium_path(const EquilibriumSolution& sol,
                         std::span<const Node> nodes);

// Minimum efficiency from the root over every reachable equilibrium endpoint.
Rational min_equilibrium_efficiency(const EquilibriumSolution& sol);

}  // namespace seqauction

#endif  // SEQAUCTION_EQUILIBRIUM_HPP_
