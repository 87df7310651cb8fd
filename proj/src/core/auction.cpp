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

#include "seqauction/auction.hpp"

#include <stdexcept>

namespace seqauction {

IncrementalValuation::IncrementalValuation(std::vector<Rational> values)
    : values_(std::move(values)) {
  prefix_.reserve(values_.size() + 1);
  prefix_.emplace_back(0);
  for (const auto& v : values_) prefix_.push_back(prefix_.back() + v);
}

const Rational& IncrementalValuation::value(int item) const {
  if (item < 1 || item > size()) {
    throw std::out_of_range("incremental value index " + std::to_string(item) +
                            " outside [1, " + std::to_string(size()) + "]");
  }
  return values_[static_cast<std::size_t>(item - 1)];
}

const Rational& IncrementalValuation::cumulative(int count) const {
  if (count < 0 || count > size()) {
    throw std::out_of_range("cumulative value index " + std::to_string(count) +
                            " outside [0, " + std::to_string(size()) + "]");
  }
  return prefix_[static_cast<std::size_t>(count)];
}

bool IncrementalValuation::is_concave() const {
  for (std::size_t j = 1; j < values_.size(); ++j) {
    if (values_[j] > values_[j - 1]) return false;
  }
  return true;
}

bool IncrementalValuation::is_nonnegative() const {
  for (const auto& v : values_) {
    if (v.sign() < 0) return false;
  }
  return true;
}

ValidationReport validate_instance(const AuctionInstance& inst) {
  ValidationReport report;
  if (inst.items < 1) {
    report.violations.push_back("T must be a positive integer, got " +
                                std::to_string(inst.items));
  }
  for (Buyer b : {Buyer::kOne, Buyer::kTwo}) {
    const auto& val = inst.valuation(b);
    const std::string who = "v" + std::to_string(static_cast<int>(b));
    if (val.size() != inst.items) {
      report.violations.push_back(who + " has length " +
                                  std::to_string(val.size()) + ", expected " +
                                  std::to_string(inst.items));
    }
    for (int j = 1; j <= val.size(); ++j) {
      if (val.value(j).sign() < 0) {
        report.violations.push_back("negative incremental value " + who + "(" +
                                    std::to_string(j) +
                                    ") = " + val.value(j).str());
      }
    }
  }
  report.concave_1 = inst.valuation_1.is_concave();
  report.concave_2 = inst.valuation_2.is_concave();
  return report;
}

void require_valid(const AuctionInstance& inst) {
  const auto report = validate_instance(inst);
  if (report.valid()) return;
  std::string msg = "invalid auction instance:";
  for (const auto& v : report.violations) msg += " " + v + ";";
  throw std::invalid_argument(msg);
}

bool is_lattice_node(const AuctionInstance& inst, const Node& node) {
  return node.x1 >= 0 && node.x2 >= 0 && node.x1 + node.x2 <= inst.items;
}

Rational social_welfare(const AuctionInstance& inst, const Node& from, int k) {
  if (!is_lattice_node(inst, from)) {
    throw std::out_of_range("node (" + from.key() + ") outside the lattice");
  }
  const int t = from.remaining(inst.items);
  if (k < 0 || k > t) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(t) + "] at node (" + from.key() +
                            ")");
  }
  const auto& v1 = inst.valuation_1;
  const auto& v2 = inst.valuation_2;
  return v1.cumulative(from.x1 + k) - v1.cumulative(from.x1) +
         v2.cumulative(inst.items - from.x1 - k) - v2.cumulative(from.x2);
}

OptimalWelfare opt_welfare(const AuctionInstance& inst, const Node& from) {
  OptimalWelfare best;
  const int t = from.remaining(inst.items);
  for (int k = 0; k <= t; ++k) {
    Rational sw = social_welfare(inst, from, k);
    if (best.argmax.empty() || sw > best.value) {
      best.value = std::move(sw);
      best.argmax.assign(1, k);
    } else if (sw == best.value) {
      best.argmax.push_back(k);
    }
  }
  return best;
}

Rational efficiency(const AuctionInstance& inst, const Node& from,
                    Allocation endpoint) {
  if (endpoint.k < from.x1 || inst.items - endpoint.k < from.x2) {
    throw std::out_of_range("endpoint (" + endpoint.terminal(inst.items).key() +
                            ") unreachable from (" + from.key() + ")");
  }
  const auto opt = opt_welfare(inst, from);
  if (opt.value.is_zero()) return Rational(1);
  return social_welfare(inst, from, endpoint.k - from.x1) / opt.value;
}

}  // namespace seqauction
