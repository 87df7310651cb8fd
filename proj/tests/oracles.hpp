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

// Reference computations for the tests. Each one takes a different route
// from the library code it checks: plain mpq arithmetic, memoized recursion
// instead of level sweeps, brute-force enumeration instead of closed forms.

#ifndef SEQAUCTION_TESTS_ORACLES_HPP_
#define SEQAUCTION_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "seqauction/auction.hpp"
#include "seqauction/lp.hpp"

namespace oracle {

using Q = mpq_class;

inline Q q(const seqauction::Rational& r) { return r.raw(); }
inline Q q(long n, long d = 1) {
  Q x(n, d);
  x.canonicalize();
  return x;
}

// Incremental values copied out of an instance, 1-based.
struct Values {
  int T = 0;
  std::vector<Q> v1, v2;  // index 0 unused

  explicit Values(const seqauction::AuctionInstance& inst) : T(inst.items) {
    v1.assign(T + 2, 0);
    v2.assign(T + 2, 0);
    for (int j = 1; j <= T; ++j) {
      v1[j] = q(inst.valuation_1.value(j));
      v2[j] = q(inst.valuation_2.value(j));
    }
  }
};

// Forward utilities from the max form
//   u_i(x) = max_j [v_j(x_j+1) + U(x+e_j)] - v_-i(x_-i+1) - u_-i(x+e_-i),
// evaluated by memoized top-down recursion.
class Utilities {
 public:
  explicit Utilities(const seqauction::AuctionInstance& inst) : vals_(inst) {}

  std::pair<Q, Q> at(int x1, int x2) {
    if (x1 + x2 == vals_.T) return {0, 0};
    const auto key = std::make_pair(x1, x2);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto left = at(x1 + 1, x2);   // buyer 1 wins
    const auto right = at(x1, x2 + 1);  // buyer 2 wins
    const Q a1 = vals_.v1[x1 + 1];
    const Q a2 = vals_.v2[x2 + 1];
    const Q best = std::max(a1 + left.first + left.second,
                            a2 + right.first + right.second);
    std::pair<Q, Q> u{best - a2 - right.second, best - a1 - left.first};
    memo_[key] = u;
    return u;
  }

  // Bids straight from their definition.
  std::pair<Q, Q> bids(int x1, int x2) {
    const auto left = at(x1 + 1, x2);
    const auto right = at(x1, x2 + 1);
    return {vals_.v1[x1 + 1] + left.first - right.first,
            vals_.v2[x2 + 1] + right.second - left.second};
  }

  const Values& values() const { return vals_; }

 private:
  Values vals_;
  std::map<std::pair<int, int>, std::pair<Q, Q>> memo_;
};

// Every equilibrium endpoint k reachable from (x1, x2), by walking every path
// in which each step's winner bids at least as much as the loser.
inline std::set<int> endpoints(Utilities& u, int x1, int x2) {
  std::set<int> out;
  std::function<void(int, int)> walk = [&](int a, int b) {
    if (a + b == u.values().T) {
      out.insert(a);
      return;
    }
    const auto [b1, b2] = u.bids(a, b);
    if (b1 >= b2) walk(a + 1, b);
    if (b2 >= b1) walk(a, b + 1);
  };
  walk(x1, x2);
  return out;
}

// Welfare of giving k of the remaining items to buyer 1, summed item by item.
inline Q welfare(const Values& v, int x1, int x2, int k) {
  Q total = 0;
  for (int j = x1 + 1; j <= x1 + k; ++j) total += v.v1[j];
  for (int j = x2 + 1; j <= v.T - x1 - k; ++j) total += v.v2[j];
  return total;
}

inline Q opt(const Values& v, int x1, int x2) {
  Q best = 0;
  for (int k = 0; k <= v.T - x1 - x2; ++k) best = std::max(best, welfare(v, x1, x2, k));
  return best;
}

inline Q min_root_efficiency(const seqauction::AuctionInstance& inst) {
  Utilities u(inst);
  const Q best = opt(u.values(), 0, 0);
  Q worst = 1;
  for (int k : endpoints(u, 0, 0)) {
    const Q e = best == 0 ? Q(1) : welfare(u.values(), 0, 0, k) / best;
    worst = std::min(worst, e);
  }
  return worst;
}

// 1 - (k/T) sum_{j=k+1}^{T} 1/j, by direct summation.
inline Q concave_bound(int T, int k) {
  Q tail = 0;
  for (int j = k + 1; j <= T; ++j) tail += Q(1, j);
  Q out = 1 - q(k, T) * tail;
  out.canonicalize();
  return out;
}

// Dense constraint matrix of an LP, row major, as mpq.
inline std::vector<std::vector<Q>> matrix(const seqauction::LinearProgram& lp) {
  std::vector<std::vector<Q>> a;
  for (const auto& c : lp.constraints) {
    std::vector<Q> row;
    for (const auto& x : c.coefficients) row.push_back(q(x));
    a.push_back(std::move(row));
  }
  return a;
}

// Feasibility of x >= 0 for the LP rows, evaluated row by row.
inline bool feasible(const seqauction::LinearProgram& lp, const std::vector<Q>& x) {
  for (const auto& xi : x) {
    if (xi < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    Q lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += q(c.coefficients[j]) * x[j];
    const Q rhs = q(c.rhs);
    switch (c.relation) {
      case seqauction::Relation::kLessEqual: if (lhs > rhs) return false; break;
      case seqauction::Relation::kEqual: if (lhs != rhs) return false; break;
      case seqauction::Relation::kGreaterEqual: if (lhs < rhs) return false; break;
    }
  }
  return true;
}

// Dual feasibility of y for "minimize c.x s.t. rows, x >= 0": every
// multiplier has the sign its row allows (<= rows: y <= 0, >= rows: y >= 0,
// = rows: free) and A^T y <= c componentwise. Returns the dual objective
// b.y if feasible.
inline std::optional<Q> dual_value(const seqauction::LinearProgram& lp,
                                   const std::vector<Q>& y) {
  const auto a = matrix(lp);
  for (std::size_t r = 0; r < a.size(); ++r) {
    const auto rel = lp.constraints[r].relation;
    if (rel == seqauction::Relation::kLessEqual && y[r] > 0) return std::nullopt;
    if (rel == seqauction::Relation::kGreaterEqual && y[r] < 0) return std::nullopt;
  }
  for (std::size_t j = 0; j < lp.num_variables(); ++j) {
    Q col = 0;
    for (std::size_t r = 0; r < a.size(); ++r) col += a[r][j] * y[r];
    if (col > q(lp.objective[j])) return std::nullopt;
  }
  Q value = 0;
  for (std::size_t r = 0; r < a.size(); ++r) value += q(lp.constraints[r].rhs) * y[r];
  return value;
}

// Solves the square system m x = b by Gaussian elimination; nullopt if
// singular.
inline std::optional<std::vector<Q>> solve_square(std::vector<std::vector<Q>> m,
                                                  std::vector<Q> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Q f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Q> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

// Optimum of a bounded minimization LP by enumerating every vertex: each
// choice of n active constraints among the rows and the bounds x_j >= 0.
// Returns nullopt if no vertex is feasible. Only for tiny LPs.
inline std::optional<Q> vertex_optimum(const seqauction::LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  std::vector<std::vector<Q>> rows = matrix(lp);
  std::vector<Q> rhs;
  for (const auto& c : lp.constraints) rhs.push_back(q(c.rhs));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Q> e(n, 0);
    e[j] = 1;
    rows.push_back(e);
    rhs.push_back(0);
  }
  std::optional<Q> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == n) {
      std::vector<std::vector<Q>> m;
      std::vector<Q> b;
      for (auto r : pick) {
        m.push_back(rows[r]);
        b.push_back(rhs[r]);
      }
      const auto x = solve_square(m, b);
      if (!x || !feasible(lp, *x)) return;
      Q value = 0;
      for (std::size_t j = 0; j < n; ++j) value += q(lp.objective[j]) * (*x)[j];
      if (!best || value < *best) best = value;
      return;
    }
    for (std::size_t r = start; r < rows.size(); ++r) {
      pick.push_back(r);
      choose(r + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return best;
}

}  // namespace oracle

#endif  // SEQAUCTION_TESTS_ORACLES_HPP_
