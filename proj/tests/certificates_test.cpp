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


#include "seqauction/certificates.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "seqauction/lp.hpp"

namespace seqauction {
namespace {

using oracle::Q;

TEST(ConcaveBoundTest, MatchesHarmonicTailSum) {
  for (int T = 1; T <= 40; ++T) {
    for (int k = 0; k <= T; ++k) {
      ASSERT_EQ(oracle::q(poa_bound_concave(T, k)), oracle::concave_bound(T, k));
    }
    EXPECT_EQ(poa_bound_concave(T, T), Rational(1));
    EXPECT_EQ(poa_bound_concave(T, 0), Rational(1));
  }
  // T = 2, k = 1: 1 - (1/2)(1/2) = 3/4, the worst efficiency of example 1.
  EXPECT_EQ(poa_bound_concave(2, 1), Rational(3, 4));
  EXPECT_THROW(poa_bound_concave(3, 4), std::out_of_range);
  EXPECT_THROW(poa_bound_concave(0, 0), std::out_of_range);
}

TEST(ConcaveBoundTest, HarmonicNumbersCache) {
  HarmonicNumbers h;
  Q direct = 0;
  for (int n = 1; n <= 60; ++n) {
    direct += Q(1, n);
    ASSERT_EQ(oracle::q(h(n)), direct);
  }
  EXPECT_EQ(h(0), Rational(0));
  EXPECT_EQ(h(3), Rational(11, 6));
}

TEST(ConcaveBoundTest, MinimumMatchesEnumeration) {
  HarmonicNumbers h;
  for (int T = 1; T <= 150; ++T) {
    Q best = oracle::concave_bound(T, 0);
    int argmin = 0;
    for (int k = 1; k <= T; ++k) {
      const Q v = oracle::concave_bound(T, k);
      if (v < best) {
        best = v;
        argmin = k;
      }
    }
    const auto [value, k] = poa_bound_concave_min(T, h);
    ASSERT_EQ(oracle::q(value), best) << "T=" << T;
    ASSERT_EQ(k, argmin) << "T=" << T;
    ASSERT_EQ(poa_bound_concave_min(T), std::make_pair(value, k));
  }
}

TEST(ConcaveBoundTest, InverseEBracket) {
  const Rational lo = one_minus_inv_e_lower();
  const Rational hi = one_minus_inv_e_upper();
  EXPECT_LT(lo, hi);
  EXPECT_LT(hi - lo, Rational(1, 1000000000));
  const double target = 1.0 - std::exp(-1.0);
  EXPECT_LE(lo.to_double(), target);
  EXPECT_GE(hi.to_double(), target);
  // Coarser brackets nest around finer ones.
  EXPECT_LE(one_minus_inv_e_lower(6), lo);
  EXPECT_GE(one_minus_inv_e_upper(6), hi);
  EXPECT_LE(one_minus_inv_e_lower(5), lo);
  EXPECT_GE(one_minus_inv_e_upper(5), hi);
}

TEST(ConcaveBoundTest, MinimumStaysAboveLimitAndDecreases) {
  HarmonicNumbers h;
  const Rational lo = one_minus_inv_e_lower();
  Rational previous = 1;
  for (int T = 1; T <= 300; ++T) {
    const auto [value, k] = poa_bound_concave_min(T, h);
    ASSERT_GE(value, lo) << T;
    ASSERT_LE(value, previous) << T;
    previous = value;
  }
}

TEST(CertificateTest, ConcaveValuesMatchClosedForm) {
  for (int T = 1; T <= 12; ++T) {
    for (int k = 0; k < T; ++k) {
      const auto cert = concave_dual_certificate(T, k);
      const Q st = oracle::concave_bound(T, k);
      ASSERT_EQ(oracle::q(cert.sigma[T]), st);
      for (int l = 0; l < T; ++l) ASSERT_TRUE(cert.sigma[l].is_zero());
      ASSERT_EQ(cert.mu.size(), static_cast<std::size_t>(T - k));
      ASSERT_EQ(oracle::q(cert.mu[0]), Q(1, T));
      for (int l = 1; l < T - k; ++l) {
        ASSERT_EQ(oracle::q(cert.mu[l]), Q(1, T - l) - Q(1, T - l + 1));
      }
      for (int i = 0; i <= T; ++i) {
        Q expected = 0;
        if (i > 0 && i <= k) {
          expected = i * (st - 1);
        } else if (i > k && i < T) {
          expected = -(T - i) * st;
          for (int j = 0; j <= T - i - 1; ++j) expected += oracle::q(T - i - j, T - j);
        }
        ASSERT_EQ(oracle::q(cert.kappa[0][i]), expected) << T << "," << k << "," << i;
        ASSERT_TRUE(cert.kappa[1][i].is_zero());
      }
      // Both kappa branches meet at i = k.
      if (k > 0) {
        Q tail = -(T - k) * st;
        for (int j = 0; j <= T - k - 1; ++j) tail += oracle::q(T - k - j, T - j);
        ASSERT_EQ(tail, k * (st - 1));
      }
    }
  }
  EXPECT_THROW(concave_dual_certificate(3, 3), std::out_of_range);
  EXPECT_THROW(general_dual_certificate(3, -1), std::out_of_range);
}

TEST(CertificateTest, ConcaveRowsTightAndSignsHold) {
  for (int T = 1; T <= 20; ++T) {
    for (int k = 0; k < T; ++k) {
      const auto v = verify_dual(concave_dual_certificate(T, k), T, k, true, true);
      ASSERT_TRUE(v.report.passed) << T << "," << k;
      ASSERT_TRUE(v.feasible);
      ASSERT_TRUE(v.structural_rows_tight);
      int c1 = 0, c2 = 0, c3 = 0, c4 = 0;
      for (const auto& row : v.rows) {
        c1 += row.family == "cons:1";
        c2 += row.family == "cons:2";
        c3 += row.family == "cons:3";
        c4 += row.family == "cons:4";
      }
      ASSERT_EQ(c1, k);
      ASSERT_EQ(c2, T - k);
      ASSERT_EQ(c3, T - k);
      ASSERT_EQ(c4, k);
      ASSERT_EQ(oracle::q(dual_objective(concave_dual_certificate(T, k), T)),
                oracle::concave_bound(T, k));
    }
  }
}

// Each structural row's left side is the column of A^T y for the matching
// primal variable, and its right side the objective coefficient.
TEST(CertificateTest, RowsMatchTransposeOfPrimal) {
  for (int T = 1; T <= 9; ++T) {
    for (int k = 0; k < T; ++k) {
      for (bool concave : {true, false}) {
        const auto cert =
            concave ? concave_dual_certificate(T, k) : general_dual_certificate(T, k);
        const auto lp = build_primal(T, k, concave);
        const auto a = oracle::matrix(lp);
        std::vector<Q> y;
        for (const auto& c : lp.constraints) {
          switch (c.family) {
            case RowFamily::kNormalization: y.push_back(oracle::q(cert.sigma[T])); break;
            case RowFamily::kWelfare: y.push_back(oracle::q(cert.sigma[c.index])); break;
            case RowFamily::kValidInequality: y.push_back(oracle::q(cert.mu[c.index])); break;
            case RowFamily::kConcavity1: y.push_back(oracle::q(cert.kappa[0][c.index])); break;
            case RowFamily::kConcavity2: y.push_back(oracle::q(cert.kappa[1][c.index])); break;
            default: y.push_back(0);
          }
        }
        const auto v = verify_dual(cert, T, k, concave);
        for (const auto& row : v.rows) {
          if (row.family == "cons:5") continue;
          const int buyer = row.family == "cons:1" || row.family == "cons:2" ? 1 : 2;
          const auto j = primal_variable(T, buyer, row.index);
          Q col = 0;
          for (std::size_t r = 0; r < a.size(); ++r) col += a[r][j] * y[r];
          ASSERT_EQ(oracle::q(row.lhs), col) << row.family << "[" << row.index << "]";
          ASSERT_EQ(oracle::q(row.rhs), oracle::q(lp.objective[j]));
        }
      }
    }
  }
}

TEST(CertificateTest, GeneralCertificateFeasibleWithValueOneOverT) {
  for (int T = 1; T <= 25; ++T) {
    for (int k = 0; k < T; ++k) {
      const auto cert = general_dual_certificate(T, k);
      const auto v = verify_dual(cert, T, k, false);
      ASSERT_TRUE(v.report.passed);
      ASSERT_EQ(v.report.check_name, "dual_feasibility_general");
      ASSERT_EQ(dual_objective(cert, T), Rational(1, T));
    }
  }
}

TEST(CertificateTest, PerturbationsAreCaught) {
  const int T = 6, k = 2;
  {
    auto cert = concave_dual_certificate(T, k);
    cert.mu[0] += Rational(1, 100);
    const auto v = verify_dual(cert, T, k, true, true);
    EXPECT_FALSE(v.report.passed);
  }
  {
    auto cert = concave_dual_certificate(T, k);
    cert.mu[1] = Rational(-1);
    const auto v = verify_dual(cert, T, k, true);
    EXPECT_FALSE(v.feasible);
    EXPECT_FALSE(v.report.passed);
  }
  {
    auto cert = concave_dual_certificate(T, k);
    cert.sigma[0] = Rational(1, 2);  // welfare multiplier must be <= 0
    EXPECT_FALSE(verify_dual(cert, T, k, true).feasible);
  }
  {
    // kappa is not available without concavity rows.
    const auto cert = concave_dual_certificate(T, k);
    EXPECT_FALSE(verify_dual(cert, T, k, false).feasible);
  }
  {
    // Scaling the certificate down keeps it feasible but loosens the rows.
    auto cert = concave_dual_certificate(T, k);
    for (auto& s : cert.sigma) s *= Rational(1, 2);
    for (auto& b : cert.kappa) for (auto& x : b) x *= Rational(1, 2);
    for (auto& m : cert.mu) m *= Rational(1, 2);
    const auto v = verify_dual(cert, T, k, true);
    EXPECT_TRUE(v.feasible);
    EXPECT_FALSE(v.structural_rows_tight);
    EXPECT_TRUE(v.report.passed);
    EXPECT_FALSE(verify_dual(cert, T, k, true, true).report.passed);
  }
  EXPECT_THROW(verify_dual(concave_dual_certificate(T, k), T, k + 1, true),
               std::out_of_range);
  const auto zero = DualCertificate::zero(T, k);
  EXPECT_EQ(zero.mu.size(), static_cast<std::size_t>(T - k));
  EXPECT_TRUE(dual_objective(zero, T).is_zero());
}

}  // namespace
}  // namespace seqauction
