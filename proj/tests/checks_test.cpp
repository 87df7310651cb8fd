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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "seqauction/instances.hpp"

namespace seqauction {
namespace {

const std::vector<std::string> kCheckNames = {
    "recurrences",      "tie_invariance",     "winner_condition",
    "max_form_utilities", "no_free_win",      "declining_prices",
    "nonnegativity",    "utility_upper_bound", "utility_difference",
    "subpath_efficiency", "path_inequality",  "valid_inequalities"};

TEST(ChecksTest, AllPassOnExampleOne) {
  const auto reports = run_all_checks(solve(example_1()));
  ASSERT_EQ(reports.size(), kCheckNames.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].check_name, kCheckNames[i]);
    EXPECT_TRUE(reports[i].passed) << reports[i].check_name;
    EXPECT_TRUE(reports[i].witnesses.empty());
    EXPECT_GT(reports[i].evaluated, 0u) << reports[i].check_name;
  }
}

TEST(ChecksTest, AllPassOnTightInstances) {
  for (int T = 1; T <= 9; ++T) {
    for (const auto& inst : {tight_general(T), tight_concave(T, T / 2)}) {
      for (const auto& r : run_all_checks(solve(inst))) {
        EXPECT_TRUE(r.passed) << r.check_name << " T=" << T;
      }
    }
  }
}

TEST(ChecksTest, TieInvarianceCountsTieNodes) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto sol = solve(random_general(8, seed, 3));
    const auto r = check_tie_invariance(sol);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.evaluated, sol.tie_count());
  }
}

TEST(ChecksTest, PerPathChecksPassOnExtractedPaths) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto sol = solve(random_concave(1 + static_cast<int>(seed % 8), seed, 5));
    for (TiePolicy policy :
         {TiePolicy::kFavorBuyer1, TiePolicy::kFavorBuyer2, TiePolicy::kAlternate}) {
      const auto path = extract_path(sol, {0, 0}, policy);
      EXPECT_TRUE(check_utility_upper_bound(sol, path).passed);
      EXPECT_TRUE(check_subpath_efficiency(sol, path).passed);
      EXPECT_TRUE(check_theorem_path_inequality(sol, path).passed);
    }
  }
}

// Both sides of the path inequality against direct summation.
TEST(ChecksTest, PathInequalitySidesMatchDirectSums) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int T = 2 + static_cast<int>(seed % 7);
    const auto inst = random_general(T, seed);
    const auto sol = solve(inst);
    oracle::Utilities u(inst);
    const auto& v = u.values();
    for (const auto& x : sol.nodes()) {
      oracle::Q lhs = 0;
      for (int j = 0; j <= T - x.x1 - x.x2; ++j) lhs += u.at(x.x1 + j, x.x2).second;
      ASSERT_EQ(oracle::q(path_inequality_lhs(sol, x)), lhs);
      for (int k = x.x1; k <= T - x.x2; ++k) {
        oracle::Q rhs = 0;
        for (int i = x.x2 + 1; i <= T - k; ++i) {
          rhs += (T - x.x1 - i + 1) * v.v2[i];
          for (int j = k + 1; j <= T - i + 1; ++j) rhs -= v.v1[j];
        }
        ASSERT_EQ(oracle::q(path_inequality_rhs(inst, x, k)), rhs);
      }
    }
  }
}

TEST(ChecksTest, ValidInequalityFormsAgreeWithDirectSums) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int T = 1 + static_cast<int>(seed % 9);
    const auto inst = random_general(T, seed);
    const oracle::Values v(inst);
    for (int k = 0; k < T; ++k) {
      for (int l = 0; l < T - k; ++l) {
        oracle::Q summed = 0;
        for (int i = l + 1; i <= T - k; ++i) {
          summed += (T - i + 1) * v.v2[i];
          for (int j = k + 1; j <= T - i + 1; ++j) summed -= v.v1[j];
        }
        ASSERT_EQ(oracle::q(valid_inequality_summed(inst, k, l)), summed);
        ASSERT_EQ(oracle::q(valid_inequality_weighted(inst, k, l)), summed);
      }
    }
  }
}

// The checks are not vacuous: a random instance evaluated at an endpoint no
// equilibrium reaches usually breaks some valid inequality, and a path that
// is not an equilibrium path can break the path bound.
TEST(ChecksTest, DetectViolationsOffEquilibrium) {
  int valid_violations = 0;
  int path_violations = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int T = 2 + static_cast<int>(seed % 6);
    const auto inst = random_general(T, seed);
    const auto sol = solve(inst);
    std::set<int> reachable;
    for (const auto& a : reachable_equilibrium_endpoints(sol, {0, 0})) reachable.insert(a.k);
    for (int k = 0; k < T; ++k) {
      if (reachable.count(k)) continue;
      const auto r = check_valid_inequalities(inst, k);
      if (!r.passed) {
        ++valid_violations;
        EXPECT_FALSE(r.witnesses.empty());
        EXPECT_EQ(r.witnesses.front().location.rfind("k=", 0), 0u);
      }
      // All-buyer-2-first path ending at (k, T-k).
      PathReport fake;
      Node x{0, 0};
      fake.nodes.push_back(x);
      while (!x.is_terminal(T)) {
        x = x.x2 < T - k ? x.step(Buyer::kTwo) : x.step(Buyer::kOne);
        fake.nodes.push_back(x);
      }
      fake.endpoint = Allocation{k};
      if (!check_theorem_path_inequality(sol, fake).passed) ++path_violations;
    }
  }
  EXPECT_GT(valid_violations, 20);
  EXPECT_GT(path_violations, 20);
}

TEST(ChecksTest, ReportsCarryWitnessDetail) {
  CheckReport r{"demo", true, 0, {}};
  r.fail({"0,0", "something", Rational(1), Rational(2)});
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].actual, Rational(2));
}

}  // namespace
}  // namespace seqauction
