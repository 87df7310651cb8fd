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

// Core model of a two-buyer sequential second-price auction of T identical
// items: valuations, the (x1, x2) history lattice, and welfare arithmetic.

#ifndef SEQAUCTION_AUCTION_HPP_
#define SEQAUCTION_AUCTION_HPP_

#include <compare>
#include <string>
#include <vector>

#include "seqauction/rational.hpp"

namespace seqauction {

enum class Buyer { kOne = 1, kTwo = 2 };

constexpr Buyer other(Buyer b) {
  return b == Buyer::kOne ? Buyer::kTwo : Buyer::kOne;
}

// Incremental values v(1..T) of one buyer. Cumulative values V(k) are kept
// as prefix sums, so V(k) = v(1) + ... + v(k) is O(1).
class IncrementalValuation {
 public:
  IncrementalValuation() = default;
  explicit IncrementalValuation(std::vector<Rational> values);

  int size() const { return static_cast<int>(values_.size()); }

  // v(item) for 1 <= item <= size(). Throws std::out_of_range otherwise.
  const Rational& value(int item) const;
  // V(count) for 0 <= count <= size(). Throws std::out_of_range otherwise.
  const Rational& cumulative(int count) const;

  const std::vector<Rational>& values() const { return values_; }

  // Non-increasing incremental values.
  bool is_concave() const;
  bool is_nonnegative() const;

  friend bool operator==(const IncrementalValuation& a,
                         const IncrementalValuation& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
  std::vector<Rational> prefix_;  // prefix_[k] = V(k)
};

struct AuctionInstance {
  int items = 0;
  IncrementalValuation valuation_1;
  IncrementalValuation valuation_2;

  const IncrementalValuation& valuation(Buyer b) const {
    return b == Buyer::kOne ? valuation_1 : valuation_2;
  }

  friend bool operator==(const AuctionInstance&,
                         const AuctionInstance&) = default;
};

// A history (x1, x2): items won so far by each buyer.
struct Node {
  int x1 = 0;
  int x2 = 0;

  int won(Buyer b) const { return b == Buyer::kOne ? x1 : x2; }
  int remaining(int items) const { return items - x1 - x2; }
  bool is_terminal(int items) const { return x1 + x2 == items; }
  // The child reached when `b` wins the item sold at this node.
  Node step(Buyer b) const {
    return b == Buyer::kOne ? Node{x1 + 1, x2} : Node{x1, x2 + 1};
  }
  std::string key() const {
    return std::to_string(x1) + "," + std::to_string(x2);
  }

  friend auto operator<=>(const Node&, const Node&) = default;
};

// Final allocation (k, T - k): buyer 1 wins k items in total.
struct Allocation {
  int k = 0;

  Node terminal(int items) const { return Node{k, items - k}; }
  friend auto operator<=>(const Allocation&, const Allocation&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool concave_1 = false;
  bool concave_2 = false;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate_instance(const AuctionInstance& inst);

// Throws std::invalid_argument listing the violations if `inst` is invalid.
void require_valid(const AuctionInstance& inst);

bool is_lattice_node(const AuctionInstance& inst, const Node& node);

// Welfare from `from` of the allocation giving buyer 1 exactly `k` more items.
// Throws std::out_of_range unless 0 <= k <= t(from).
Rational social_welfare(const AuctionInstance& inst, const Node& from, int k);

struct OptimalWelfare {
  Rational value;
  std::vector<int> argmax;  // every k attaining `value`, ascending
};

OptimalWelfare opt_welfare(const AuctionInstance& inst, const Node& from);

// Realized welfare over optimal welfare from `from`; 1 when the optimum is 0.
// Throws std::out_of_range if `endpoint` is not reachable from `from`.
Rational efficiency(const AuctionInstance& inst, const Node& from,
                    Allocation endpoint);

}  // namespace seqauction

#endif  // SEQAUCTION_AUCTION_HPP_
