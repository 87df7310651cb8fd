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

#include "seqauction/equilibrium.hpp"

#include <deque>
#include <set>

namespace seqauction {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kBuyer1Wins:
      return "buyer1";
    case Outcome::kBuyer2Wins:
      return "buyer2";
    case Outcome::kTie:
      return "tie";
  }
  return "unknown";
}

std::string to_string(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::kFavorBuyer1:
      return "favor-buyer1";
    case TiePolicy::kFavorBuyer2:
      return "favor-buyer2";
    case TiePolicy::kAlternate:
      return "alternate";
  }
  return "unknown";
}

EquilibriumSolution::EquilibriumSolution(AuctionInstance inst)
    : instance_(std::move(inst)) {
  const auto t = static_cast<std::size_t>(instance_.items);
  records_.resize((t + 1) * (t + 2) / 2);
}

// Level s = x1 + x2 occupies [s(s+1)/2, s(s+1)/2 + s].
std::size_t EquilibriumSolution::index(const Node& node) const {
  if (!is_lattice_node(instance_, node)) {
    throw std::out_of_range("node (" + node.key() + ") outside the lattice");
  }
  const auto level = static_cast<std::size_t>(node.x1 + node.x2);
  return level * (level + 1) / 2 + static_cast<std::size_t>(node.x1);
}

const NodeRecord& EquilibriumSolution::at(const Node& node) const {
  return records_[index(node)];
}

const Round& EquilibriumSolution::round(const Node& node) const {
  const auto& rec = at(node);
  if (!rec.round) {
    throw std::out_of_range("node (" + node.key() + ") is terminal");
  }
  return *rec.round;
}

std::vector<Node> EquilibriumSolution::nodes() const {
  std::vector<Node> out;
  out.reserve(records_.size());
  for (int level = 0; level <= items(); ++level) {
    for (int x1 = 0; x1 <= level; ++x1) out.push_back(Node{x1, level - x1});
  }
  return out;
}

bool operator==(const EquilibriumSolution& a, const EquilibriumSolution& b) {
  if (!(a.instance_ == b.instance_) || a.records_.size() != b.records_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.records_.size(); ++i) {
    const auto& ra = a.records_[i];
    const auto& rb = b.records_[i];
    if (ra.u1 != rb.u1 || ra.u2 != rb.u2 ||
        ra.round.has_value() != rb.round.has_value()) {
      return false;
    }
    if (ra.round && (ra.round->b1 != rb.round->b1 ||
                     ra.round->b2 != rb.round->b2 ||
                     ra.round->price != rb.round->price ||
                     ra.round->outcome != rb.round->outcome)) {
      return false;
    }
  }
  return true;
}

EquilibriumSolution solve(const AuctionInstance& inst) {
  require_valid(inst);
  EquilibriumSolution sol(inst);
  const int T = inst.items;
  const auto& v1 = inst.valuation_1;
  const auto& v2 = inst.valuation_2;

  // Terminal level: records default to u1 = u2 = 0 with no round.
  for (int level = T - 1; level >= 0; --level) {
    for (int x1 = 0; x1 <= level; ++x1) {
      const Node x{x1, level - x1};
      const NodeRecord& left = sol.at(x.step(Buyer::kOne));
      const NodeRecord& right = sol.at(x.step(Buyer::kTwo));
      const Rational& next1 = v1.value(x.x1 + 1);
      const Rational& next2 = v2.value(x.x2 + 1);

      Round round;
      round.b1 = next1 + left.u1 - right.u1;
      round.b2 = next2 + right.u2 - left.u2;
      round.price = min(round.b1, round.b2);

      NodeRecord rec;
      if (round.b1 > round.b2) {
        round.outcome = Outcome::kBuyer1Wins;
        rec.u1 = next1 - round.b2 + left.u1;
        rec.u2 = left.u2;
      } else if (round.b1 < round.b2) {
        round.outcome = Outcome::kBuyer2Wins;
        rec.u1 = right.u1;
        rec.u2 = next2 - round.b1 + right.u2;
      } else {
        round.outcome = Outcome::kTie;
        rec.u1 = next1 - round.b2 + left.u1;
        rec.u2 = left.u2;
        const Rational alt_u1 = right.u1;
        const Rational alt_u2 = next2 - round.b1 + right.u2;
        if (alt_u1 != rec.u1 || alt_u2 != rec.u2) {
          throw InternalConsistencyError(
              "tie resolutions disagree at node (" + x.key() + ")");
        }
        ++sol.tie_count_;
      }
      rec.round = std::move(round);
      sol.records_[sol.index(x)] = std::move(rec);
    }
  }
  return sol;
}

namespace {

std::vector<Buyer> equilibrium_winners(const Round& round) {
  switch (round.outcome) {
    case Outcome::kBuyer1Wins:
      return {Buyer::kOne};
    case Outcome::kBuyer2Wins:
      return {Buyer::kTwo};
    case Outcome::kTie:
      return {Buyer::kOne, Buyer::kTwo};
  }
  return {};
}

}  // namespace

std::vector<Allocation> reachable_equilibrium_endpoints(
    const EquilibriumSolution& sol, const Node& from) {
  std::set<Node> seen{from};
  std::deque<Node> frontier{from};
  std::set<Allocation> endpoints;
  const int T = sol.items();
  sol.at(from);  // range check
  while (!frontier.empty()) {
    const Node x = frontier.front();
    frontier.pop_front();
    if (x.is_terminal(T)) {
      endpoints.insert(Allocation{x.x1});
      continue;
    }
    for (Buyer b : equilibrium_winners(sol.round(x))) {
      const Node child = x.step(b);
      if (seen.insert(child).second) frontier.push_back(child);
    }
  }
  return {endpoints.begin(), endpoints.end()};
}

EndpointTable::EndpointTable(const EquilibriumSolution& sol)
    : items_(sol.items()) {
  const int T = items_;
  table_.assign(static_cast<std::size_t>(T + 1), {});
  for (int x1 = 0; x1 <= T; ++x1) {
    table_[static_cast<std::size_t>(x1)].assign(
        static_cast<std::size_t>(T - x1 + 1),
        std::vector<bool>(static_cast<std::size_t>(T + 1), false));
  }
  auto cell = [this](const Node& x) -> std::vector<bool>& {
    return table_[static_cast<std::size_t>(x.x1)]
                 [static_cast<std::size_t>(x.x2)];
  };
  for (int x1 = 0; x1 <= T; ++x1) {
    cell(Node{x1, T - x1})[static_cast<std::size_t>(x1)] = true;
  }
  for (int level = T - 1; level >= 0; --level) {
    for (int x1 = 0; x1 <= level; ++x1) {
      const Node x{x1, level - x1};
      auto& mine = cell(x);
      for (Buyer b : equilibrium_winners(sol.round(x))) {
        const auto& child = cell(x.step(b));
        for (std::size_t k = 0; k < mine.size(); ++k) {
          if (child[k]) mine[k] = true;
        }
      }
    }
  }
}

bool EndpointTable::reachable(const Node& from, int k) const {
  if (from.x1 < 0 || from.x2 < 0 || from.x1 + from.x2 > items_ || k < 0 ||
      k > items_) {
    return false;
  }
  return table_[static_cast<std::size_t>(from.x1)]
               [static_cast<std::size_t>(from.x2)][static_cast<std::size_t>(k)];
}

std::vector<int> EndpointTable::endpoints(const Node& from) const {
  std::vector<int> out;
  for (int k = 0; k <= items_; ++k) {
    if (reachable(from, k)) out.push_back(k);
  }
  return out;
}

namespace {

PathReport finish_path(const EquilibriumSolution& sol, PathReport path) {
  const Node& start = path.nodes.front();
  path.endpoint = Allocation{path.nodes.back().x1};
  path.efficiency = efficiency(sol.instance(), start, path.endpoint);
  return path;
}

template <typename ChooseAtTie>
PathReport walk(const EquilibriumSolution& sol, const Node& from,
                ChooseAtTie&& choose) {
  sol.at(from);  // range check
  PathReport path;
  path.nodes.push_back(from);
  Node x = from;
  while (!x.is_terminal(sol.items())) {
    const Round& round = sol.round(x);
    Buyer winner = Buyer::kOne;
    switch (round.outcome) {
      case Outcome::kBuyer1Wins:
        winner = Buyer::kOne;
        break;
      case Outcome::kBuyer2Wins:
        winner = Buyer::kTwo;
        break;
      case Outcome::kTie:
        winner = choose(x);
        break;
    }
    path.winners.push_back(winner);
    path.prices_paid.push_back(round.price);
    x = x.step(winner);
    path.nodes.push_back(x);
  }
  return finish_path(sol, std::move(path));
}

}  // namespace

PathReport extract_path(const EquilibriumSolution& sol, const Node& from,
                        TiePolicy policy) {
  int ties_seen = 0;
  return walk(sol, from, [&](const Node&) {
    switch (policy) {
      case TiePolicy::kFavorBuyer1:
        return Buyer::kOne;
      case TiePolicy::kFavorBuyer2:
        return Buyer::kTwo;
      case TiePolicy::kAlternate:
        return (ties_seen++ % 2 == 0) ? Buyer::kOne : Buyer::kTwo;
    }
    return Buyer::kOne;
  });
}

PathReport extract_path_with_choices(const EquilibriumSolution& sol,
                                     const Node& from,
                                     std::span<const Buyer> tie_choices) {
  std::size_t next = 0;
  return walk(sol, from, [&](const Node& x) {
    if (next >= tie_choices.size()) {
      throw std::invalid_argument("ran out of tie choices at node (" +
                                  x.key() + ")");
    }
    return tie_choices[next++];
  });
}

std::optional<PathReport> witness_path(const EquilibriumSolution& sol,
                                       const Node& from, Allocation endpoint) {
  const EndpointTable table(sol);
  if (!table.reachable(from, endpoint.k)) return std::nullopt;
  return walk(sol, from, [&](const Node& x) {
    return table.reachable(x.step(Buyer::kOne), endpoint.k) ? Buyer::kOne
                                                             : Buyer::kTwo;
  });
}

bool is_equilibrium_path(const EquilibriumSolution& sol,
                         std::span<const Node> nodes) {
  if (nodes.empty()) return false;
  for (const auto& n : nodes) {
    if (!is_lattice_node(sol.instance(), n)) return false;
  }
  for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
    const Node& x = nodes[s];
    const Node& next = nodes[s + 1];
    if (x.is_terminal(sol.items())) return false;
    Buyer winner;
    if (next == x.step(Buyer::kOne)) {
      winner = Buyer::kOne;
    } else if (next == x.step(Buyer::kTwo)) {
      winner = Buyer::kTwo;
    } else {
      return false;
    }
    const Round& round = sol.round(x);
    if (round.bid(winner) < round.bid(other(winner))) return false;
  }
  return nodes.back().is_terminal(sol.items());
}

Rational min_equilibrium_efficiency(const EquilibriumSolution& sol) {
  const Node root{0, 0};
  std::optional<Rational> best;
  for (const auto& endpoint : reachable_equilibrium_endpoints(sol, root)) {
    Rational eff = efficiency(sol.instance(), root, endpoint);
    if (!best || eff < *best) best = std::move(eff);
  }
  return best.value_or(Rational(1));
}

}  // namespace seqauction
