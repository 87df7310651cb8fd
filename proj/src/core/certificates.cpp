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

#include <stdexcept>

namespace seqauction {
namespace {

void require_k_below_t(int T, int k, const char* what) {
  if (T < 1 || k < 0 || k >= T) {
    throw std::out_of_range(std::string(what) + " requires 0 <= k < T, got T=" +
                            std::to_string(T) + ", k=" + std::to_string(k));
  }
}

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

DualCertificate DualCertificate::zero(int T, int k) {
  require_k_below_t(T, k, "DualCertificate");
  DualCertificate cert;
  cert.items = T;
  cert.k = k;
  cert.sigma.assign(at(T + 1), Rational(0));
  cert.kappa[0].assign(at(T + 1), Rational(0));
  cert.kappa[1].assign(at(T + 1), Rational(0));
  cert.mu.assign(at(T - k), Rational(0));
  return cert;
}

DualCertificate concave_dual_certificate(int T, int k) {
  DualCertificate cert = DualCertificate::zero(T, k);
  const Rational sigma_T = poa_bound_concave(T, k);
  cert.sigma[at(T)] = sigma_T;

  cert.mu[0] = Rational(1, T);
  for (int l = 1; l < T - k; ++l) {
    cert.mu[at(l)] = Rational(1, T - l) - Rational(1, T - l + 1);
  }

  // Second branch of kappa_{1,i}, valid for k <= i <= T-1 (and 0 at i = T).
  auto tail_branch = [&](int i) {
    Rational value = Rational(-(T - i)) * sigma_T;
    for (int j = 0; j <= T - i - 1; ++j) value += Rational(T - i - j, T - j);
    return value;
  };
  for (int i = 1; i <= k; ++i) cert.kappa[0][at(i)] = Rational(i) * (sigma_T - 1);
  for (int i = k + 1; i <= T - 1; ++i) cert.kappa[0][at(i)] = tail_branch(i);

  // Both branches define kappa_{1,k}; for k = 0 the tail branch must give
  // the fixed boundary value kappa_{1,0} = 0.
  const Rational head = Rational(k) * (sigma_T - 1);
  if (head != tail_branch(k)) {
    throw std::logic_error("kappa_1 branches disagree at i = k = " +
                           std::to_string(k) + " for T = " + std::to_string(T));
  }
  return cert;
}

DualCertificate general_dual_certificate(int T, int k) {
  DualCertificate cert = DualCertificate::zero(T, k);
  cert.sigma[at(T)] = Rational(1, T);
  cert.mu[0] = Rational(1, T);
  return cert;
}

DualVerification verify_dual(const DualCertificate& cert, int T, int k,
                             bool concave, bool require_tight) {
  require_k_below_t(T, k, "verify_dual");
  if (cert.items != T || cert.k != k || cert.sigma.size() != at(T + 1) ||
      cert.kappa[0].size() != at(T + 1) || cert.kappa[1].size() != at(T + 1) ||
      cert.mu.size() != at(T - k)) {
    throw std::out_of_range("dual certificate dimensions do not match T=" +
                            std::to_string(T) + ", k=" + std::to_string(k));
  }
  DualVerification out;
  out.report.check_name = concave ? "dual_feasibility_concave"
                                  : "dual_feasibility_general";

  auto add_row = [&](std::string family, int index, Rational lhs,
                     std::string relation, Rational rhs) {
    DualRow row;
    row.family = std::move(family);
    row.index = index;
    row.relation = std::move(relation);
    if (row.relation == "<=") {
      row.slack = rhs - lhs;
      row.satisfied = row.slack.sign() >= 0;
    } else if (row.relation == ">=") {
      row.slack = lhs - rhs;
      row.satisfied = row.slack.sign() >= 0;
    } else {
      row.slack = abs(lhs - rhs);
      row.satisfied = row.slack.is_zero();
    }
    row.tight = row.slack.is_zero();
    row.lhs = std::move(lhs);
    row.rhs = std::move(rhs);
    ++out.report.evaluated;
    const bool structural = row.family != "cons:5";
    if (!row.satisfied) {
      out.feasible = false;
      out.report.fail({row.family + "[" + std::to_string(row.index) + "]",
                       "violated " + row.relation, row.rhs, row.lhs});
    } else if (structural && !row.tight) {
      out.structural_rows_tight = false;
      if (require_tight) {
        out.report.fail({row.family + "[" + std::to_string(row.index) + "]",
                         "not tight", row.rhs, row.lhs});
      }
    }
    out.rows.push_back(std::move(row));
  };

  const auto& sigma = cert.sigma;
  const auto& mu = cert.mu;
  auto kappa_step = [&](int buyer, int i) {
    if (!concave) return Rational(0);
    const auto& kap = cert.kappa[buyer - 1];
    return kap[at(i - 1)] - kap[at(i)];
  };
  auto sigma_sum = [&](int from, int to) {
    Rational s;
    for (int l = from; l <= to; ++l) s += sigma[at(l)];
    return s;
  };

  // Rows attached to v1(i).
  for (int i = 1; i <= T; ++i) {
    Rational lhs = sigma_sum(i, T) + kappa_step(1, i);
    if (i <= k) {
      add_row("cons:1", i, std::move(lhs), "<=", Rational(1));
    } else {
      for (int l = 0; l <= T - i; ++l) lhs -= Rational(T - i - l + 1) * mu[at(l)];
      add_row("cons:2", i, std::move(lhs), "<=", Rational(0));
    }
  }
  // Rows attached to v2(i).
  for (int i = 1; i <= T; ++i) {
    Rational lhs = sigma_sum(0, T - i) + kappa_step(2, i);
    if (i <= T - k) {
      for (int l = 0; l <= i - 1; ++l) lhs += Rational(T - i + 1) * mu[at(l)];
      add_row("cons:3", i, std::move(lhs), "<=", Rational(1));
    } else {
      add_row("cons:4", i, std::move(lhs), "<=", Rational(0));
    }
  }
  // Sign and fixed-value rows, indexed as sigma_l -> l,
  // kappa_{b,j} -> 1000 b + j, mu_l -> 3000 + l.
  for (int l = 0; l < T; ++l) add_row("cons:5", l, sigma[at(l)], "<=", Rational(0));
  for (int b = 0; b < 2; ++b) {
    const auto& kap = cert.kappa[b];
    for (int j = 0; j <= T; ++j) {
      const bool fixed = !concave || j == 0 || j == T;
      add_row("cons:5", 1000 * (b + 1) + j, kap[at(j)], fixed ? "=" : "<=",
              Rational(0));
    }
  }
  for (int l = 0; l < T - k; ++l) add_row("cons:5", 3000 + l, mu[at(l)], ">=", Rational(0));
  return out;
}

Rational dual_objective(const DualCertificate& cert, int T) {
  if (cert.sigma.size() != at(T + 1)) {
    throw std::out_of_range("sigma must have T + 1 entries");
  }
  Rational value = cert.sigma[at(T)];
  for (int l = 0; l < T; ++l) value += cert.sigma[at(l)];
  return value;
}

Rational poa_bound_concave(int T, int k) {
  if (T < 1 || k < 0 || k > T) {
    throw std::out_of_range("poa_bound_concave requires 0 <= k <= T, got T=" +
                            std::to_string(T) + ", k=" + std::to_string(k));
  }
  Rational sum(k);
  for (int j = 1; j <= T - k; ++j) sum += Rational(j, k + j);
  return sum / Rational(T);
}

const Rational& HarmonicNumbers::operator()(int n) {
  if (n < 0) throw std::out_of_range("harmonic number of negative index");
  while (values_.size() <= at(n)) {
    const auto next = static_cast<long>(values_.size());
    values_.push_back(values_.back() + Rational(1, next));
  }
  return values_[at(n)];
}

std::pair<Rational, int> poa_bound_concave_min(int T) {
  HarmonicNumbers h;
  return poa_bound_concave_min(T, h);
}

// poa(T, k) = 1 - (k/T)(H_T - H_k). With f(k) = k (H_T - H_k),
// f(k+1) - f(k) = H_T - H_{k+1} - k/(k+1), which is strictly decreasing in k,
// so f is unimodal and the smallest maximizer is the first k where the
// increment is <= 0. The increment at k = T-1 is -(T-1)/T <= 0.
std::pair<Rational, int> poa_bound_concave_min(int T, HarmonicNumbers& h) {
  if (T < 1) throw std::out_of_range("poa_bound_concave_min requires T >= 1");
  const Rational H_T = h(T);
  auto increment_nonpositive = [&](int k) {
    return H_T - h(k + 1) <= Rational(k, k + 1);
  };
  int lo = 0;
  int hi = T - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (increment_nonpositive(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const int k = lo;
  Rational value = Rational(1) - Rational(k, T) * (H_T - h(k));
  return {std::move(value), k};
}

namespace {

// Partial sum of sum_{n=0}^{last} (-1)^n / n!.
Rational inv_e_partial(int last) {
  Rational sum;
  mpz_class factorial = 1;
  for (int n = 0; n <= last; ++n) {
    if (n > 0) factorial *= n;
    const Rational term(mpq_class(mpz_class(1), factorial));
    if (n % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

// Partial sums ending on an even index over-estimate 1/e, odd ones under.
Rational one_minus_inv_e_lower(int terms) {
  if (terms < 2) throw std::invalid_argument("need at least two terms");
  const int last = terms % 2 == 0 ? terms : terms + 1;
  return Rational(1) - inv_e_partial(last);
}

Rational one_minus_inv_e_upper(int terms) {
  if (terms < 2) throw std::invalid_argument("need at least two terms");
  const int last = terms % 2 == 1 ? terms : terms + 1;
  return Rational(1) - inv_e_partial(last);
}

}  // namespace seqauction
