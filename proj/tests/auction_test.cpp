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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "seqauction/instances.hpp"

namespace seqauction {
namespace {

AuctionInstance make(int T, std::vector<Rational> v1, std::vector<Rational> v2) {
  return AuctionInstance{T, IncrementalValuation(std::move(v1)),
                         IncrementalValuation(std::move(v2))};
}

TEST(ValuationTest, PrefixSumsAndBounds) {
  const IncrementalValuation v({Rational(3), Rational(1, 2), Rational(0)});
  EXPECT_EQ(v.size(), 3);
  EXPECT_EQ(v.value(2), Rational(1, 2));
  EXPECT_EQ(v.cumulative(0), Rational(0));
  EXPECT_EQ(v.cumulative(2), Rational(7, 2));
  EXPECT_EQ(v.cumulative(3), Rational(7, 2));
  EXPECT_THROW(v.value(0), std::out_of_range);
  EXPECT_THROW(v.value(4), std::out_of_range);
  EXPECT_THROW(v.cumulative(-1), std::out_of_range);
  EXPECT_THROW(v.cumulative(4), std::out_of_range);
  EXPECT_TRUE(v.is_concave());
  EXPECT_TRUE(v.is_nonnegative());
  EXPECT_FALSE(IncrementalValuation({Rational(0), Rational(1)}).is_concave());
}

TEST(ValidationTest, AcceptsExampleAndFlagsConcavity) {
  const auto report = validate_instance(example_1());
  EXPECT_TRUE(report.valid());
  EXPECT_TRUE(report.concave_1);
  EXPECT_TRUE(report.concave_2);
  const auto general = validate_instance(tight_general(3));
  EXPECT_TRUE(general.valid());
  EXPECT_FALSE(general.concave_1);
  EXPECT_TRUE(general.concave_2);
}

TEST(ValidationTest, ReportsEveryViolation) {
  const auto report = validate_instance(
      make(3, {Rational(1), Rational(-1)}, {Rational(0), Rational(0), Rational(-2)}));
  EXPECT_FALSE(report.valid());
  EXPECT_GE(report.violations.size(), 3u);  // length of v1, v1(2) < 0, v2(3) < 0
  EXPECT_THROW(require_valid(make(0, {}, {})), std::invalid_argument);
  EXPECT_NO_THROW(require_valid(example_1()));
}

TEST(WelfareTest, ExampleOneWelfare) {
  const auto inst = example_1();
  const Node root{0, 0};
  // Endpoint (1,1): 10 + 5; endpoint (2,0): 10 + 10.
  EXPECT_EQ(social_welfare(inst, root, 1), Rational(15));
  EXPECT_EQ(social_welfare(inst, root, 2), Rational(20));
  EXPECT_EQ(social_welfare(inst, root, 0), Rational(5));
  const auto opt = opt_welfare(inst, root);
  EXPECT_EQ(opt.value, Rational(20));
  EXPECT_EQ(opt.argmax, std::vector<int>{2});
  EXPECT_EQ(efficiency(inst, root, Allocation{1}), Rational(3, 4));
  EXPECT_EQ(efficiency(inst, root, Allocation{2}), Rational(1));
}

TEST(WelfareTest, MatchesItemByItemSumsOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int T = 1 + static_cast<int>(seed % 9);
    const auto inst = seed % 2 ? random_general(T, seed) : random_concave(T, seed);
    const oracle::Values vals(inst);
    for (int x1 = 0; x1 <= T; ++x1) {
      for (int x2 = 0; x1 + x2 <= T; ++x2) {
        const Node x{x1, x2};
        const auto opt = opt_welfare(inst, x);
        const oracle::Q expected_opt = oracle::opt(vals, x1, x2);
        ASSERT_EQ(oracle::q(opt.value), expected_opt);
        for (int k = 0; k <= T - x1 - x2; ++k) {
          const oracle::Q sw = oracle::welfare(vals, x1, x2, k);
          ASSERT_EQ(oracle::q(social_welfare(inst, x, k)), sw);
          const bool is_argmax =
              std::find(opt.argmax.begin(), opt.argmax.end(), k) != opt.argmax.end();
          ASSERT_EQ(is_argmax, sw == expected_opt);
          const Rational e = efficiency(inst, x, Allocation{x1 + k});
          if (expected_opt == 0) {
            ASSERT_EQ(e, Rational(1));
          } else {
            ASSERT_EQ(oracle::q(e), sw / expected_opt);
          }
          ASSERT_GE(e, Rational(0));
          ASSERT_LE(e, Rational(1));
        }
      }
    }
  }
}

TEST(WelfareTest, ZeroOptimumHasFullEfficiency) {
  const auto inst = make(2, {Rational(0), Rational(0)}, {Rational(0), Rational(0)});
  EXPECT_EQ(efficiency(inst, Node{0, 0}, Allocation{1}), Rational(1));
}

TEST(WelfareTest, RejectsOutOfRangeArguments) {
  const auto inst = example_1();
  EXPECT_THROW(social_welfare(inst, Node{0, 0}, 3), std::out_of_range);
  EXPECT_THROW(social_welfare(inst, Node{0, 0}, -1), std::out_of_range);
  EXPECT_THROW(social_welfare(inst, Node{2, 1}, 0), std::out_of_range);
  EXPECT_THROW(efficiency(inst, Node{1, 0}, Allocation{0}), std::out_of_range);
  EXPECT_NO_THROW(social_welfare(inst, Node{1, 1}, 0));
}

TEST(NodeTest, StepsAndKeys) {
  const Node x{1, 2};
  EXPECT_EQ(x.step(Buyer::kOne), (Node{2, 2}));
  EXPECT_EQ(x.step(Buyer::kTwo), (Node{1, 3}));
  EXPECT_EQ(x.key(), "1,2");
  EXPECT_EQ(x.remaining(5), 2);
  EXPECT_TRUE((Node{2, 3}).is_terminal(5));
  EXPECT_EQ(Allocation{2}.terminal(5), (Node{2, 3}));
  EXPECT_EQ(other(Buyer::kOne), Buyer::kTwo);
}

}  // namespace
}  // namespace seqauction
