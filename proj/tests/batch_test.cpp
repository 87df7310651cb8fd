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


#include "seqauction/batch.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "oracles.hpp"

namespace seqauction {
namespace {

TEST(BoundTest, MethodsAgree) {
  for (int T = 1; T <= 8; ++T) {
    for (int k = 0; k <= T; ++k) {
      for (auto cls : {ValuationClass::kConcave, ValuationClass::kGeneral}) {
        const Rational f = compute_bound(T, k, cls, BoundMethod::kFormula);
        ASSERT_EQ(compute_bound(T, k, cls, BoundMethod::kLp), f);
        ASSERT_EQ(compute_bound(T, k, cls, BoundMethod::kCertificate), f);
        if (k == T) {
          ASSERT_EQ(f, Rational(1));
        } else if (cls == ValuationClass::kGeneral) {
          ASSERT_EQ(f, Rational(1, T));
        } else {
          ASSERT_EQ(oracle::q(f), oracle::concave_bound(T, k));
        }
      }
    }
  }
  EXPECT_THROW(compute_bound(3, 4, ValuationClass::kConcave, BoundMethod::kLp),
               std::out_of_range);
}

TEST(BoundTest, MinimumOverK) {
  for (int T = 1; T <= 8; ++T) {
    const auto formula = compute_bound_min(T, ValuationClass::kConcave, BoundMethod::kFormula);
    EXPECT_EQ(compute_bound_min(T, ValuationClass::kConcave, BoundMethod::kLp), formula);
    EXPECT_EQ(compute_bound_min(T, ValuationClass::kConcave, BoundMethod::kCertificate),
              formula);
    const auto general = compute_bound_min(T, ValuationClass::kGeneral, BoundMethod::kLp);
    EXPECT_EQ(general.first, Rational(1, T));
    EXPECT_EQ(general.second, 0);
  }
}

TEST(BoundTest, CertifyUsesTheRightCertificate) {
  EXPECT_TRUE(certify(7, 3, ValuationClass::kConcave).report.passed);
  EXPECT_TRUE(certify(7, 3, ValuationClass::kGeneral).report.passed);
  EXPECT_EQ(certify(7, 3, ValuationClass::kGeneral).report.check_name,
            "dual_feasibility_general");
}

TEST(FuzzTest, SummaryCountsAndDeterminism) {
  FuzzConfig config;
  config.family = "random-general";
  config.count = 60;
  config.t_max = 6;
  const auto a = run_fuzz(config);
  EXPECT_TRUE(a.all_passed());
  EXPECT_EQ(a.instances, 60u);
  EXPECT_EQ(a.checks.size(), 12u);
  for (const auto& [name, counts] : a.checks) {
    EXPECT_EQ(counts.first, 60u) << name;
    EXPECT_EQ(counts.second, 0u) << name;
  }
  EXPECT_EQ(a.tie_nodes, a.tie_nodes_checked);
  EXPECT_GT(a.tie_nodes, 0u);
  config.threads = 3;
  const auto b = run_fuzz(config);
  EXPECT_EQ(fuzz_summary_to_json(a).dump(), fuzz_summary_to_json(b).dump());
}

TEST(FuzzTest, RejectsBadConfigs) {
  FuzzConfig config;
  config.family = "example1";
  EXPECT_THROW(run_fuzz(config), std::invalid_argument);
  config.family = "random-concave";
  config.t_min = 5;
  config.t_max = 4;
  EXPECT_THROW(run_fuzz(config), std::out_of_range);
}

TEST(FuzzTest, QuarantineDirectoryIsCreated) {
  const auto dir = std::filesystem::temp_directory_path() / "seqauction_quarantine_test";
  std::filesystem::remove_all(dir);
  FuzzConfig config;
  config.count = 5;
  config.quarantine_dir = dir.string();
  EXPECT_TRUE(run_fuzz(config).all_passed());
  EXPECT_TRUE(std::filesystem::is_directory(dir));
  EXPECT_TRUE(std::filesystem::is_empty(dir));  // nothing failed
  std::filesystem::remove_all(dir);
}

TEST(PoaTableTest, ColumnsAndAgreement) {
  const std::string csv = poa_table_csv({1, 6, 6, 2});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line,
            "T,k,formula,formula_approx,lp_opt,dual_obj,tight_instance_eff,"
            "min_over_k,min_over_k_approx,argmin_k");
  int rows = 0;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    ASSERT_EQ(f.size(), 10u) << line;
    EXPECT_EQ(f[2], f[4]);
    EXPECT_EQ(f[2], f[5]);
    EXPECT_EQ(f[2], f[6]);
    ++rows;
  }
  EXPECT_EQ(rows, 2 + 3 + 4 + 5 + 6 + 7);
  EXPECT_EQ(poa_table_csv({1, 6, 6, 1}), csv);
  // Past lp_max_t the exact columns are empty.
  const std::string big = poa_table_csv({30, 30, 25, 1});
  EXPECT_NE(big.find("30,0,1,1.000000000000,,,,"), std::string::npos);
}

}  // namespace
}  // namespace seqauction
