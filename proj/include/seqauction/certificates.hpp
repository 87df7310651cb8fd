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

// Closed-form dual solutions for the efficiency LPs, their exact
// verification, and the resulting price-of-anarchy bounds.

#ifndef SEQAUCTION_CERTIFICATES_HPP_
#define SEQAUCTION_CERTIFICATES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "seqauction/checks.hpp"
#include "seqauction/rational.hpp"

namespace seqauction {

// Dual multipliers of build_primal(T, k, concave):
//   sigma[l]    welfare row l (l < T, sign <= 0), normalization row (l = T, free)
//   kappa[b][j] concavity row j of buyer b+1 (j in [1, T-1], sign <= 0);
//               kappa[b][0] = kappa[b][T] = 0
//   mu[l]       valid-inequality row l (l in [0, T-k), sign >= 0)
struct DualCertificate {
  int items = 0;
  int k = 0;
  std::vector<Rational> sigma;
  std::vector<Rational> kappa[2];
  std::vector<Rational> mu;

  static DualCertificate zero(int T, int k);
};

// Throws std::out_of_range unless 0 <= k < T.
DualCertificate concave_dual_certificate(int T, int k);
DualCertificate general_dual_certificate(int T, int k);

// One dual constraint. Families "cons:1".."cons:4" are the rows attached to
// v1(i) for i <= k, v1(i) for i > k, v2(i) for i <= T-k and v2(i) for
// i > T-k; "cons:5" rows are the sign and fixed-zero conditions.
struct DualRow {
  std::string family;
  int index = 0;
  Rational lhs;
  std::string relation;  // "<=", ">=", "="
  Rational rhs;
  Rational slack;  // rhs - lhs for "<=", lhs - rhs for ">=", |lhs - rhs| for "="
  bool satisfied = true;
  bool tight = true;
};

struct DualVerification {
  CheckReport report;
  std::vector<DualRow> rows;
  bool feasible = true;
  bool structural_rows_tight = true;  // every cons:1..cons:4 row has zero slack
};

// Checks every dual row of the concave (with kappa) or general (no kappa)
// dual LP. With `require_tight`, report.passed also demands that rows
// cons:1..cons:4 hold with equality.
// Throws std::out_of_range if the certificate dimensions do not match (T, k).
DualVerification verify_dual(const DualCertificate& cert, int T, int k,
                             bool concave, bool require_tight = false);

// Lagrangian value b^T y of the certificate: sigma_T + sum_{l<T} sigma_l.
// Welfare rows have right-hand side 1 and the valid-inequality rows 0.
Rational dual_objective(const DualCertificate& cert, int T);

// (1/T) (k + sum_{j=1}^{T-k} j / (k + j)); equals 1 when k = T.
// Throws std::out_of_range unless 0 <= k <= T.
Rational poa_bound_concave(int T, int k);

// H_n = 1 + 1/2 + ... + 1/n, grown on demand and cached.
class HarmonicNumbers {
 public:
  HarmonicNumbers() : values_{Rational(0)} {}
  const Rational& operator()(int n);

 private:
  std::vector<Rational> values_;
};

// Minimum of poa_bound_concave(T, k) over 0 <= k <= T and the smallest
// minimizing k.
std::pair<Rational, int> poa_bound_concave_min(int T);
std::pair<Rational, int> poa_bound_concave_min(int T, HarmonicNumbers& h);

// Rational brackets of 1 - 1/e: lower <= 1 - 1/e <= upper, from truncated
// alternating series for 1/e with `terms` terms (terms >= 2).
Rational one_minus_inv_e_lower(int terms = 30);
Rational one_minus_inv_e_upper(int terms = 30);

}  // namespace seqauction

#endif  // SEQAUCTION_CERTIFICATES_HPP_
