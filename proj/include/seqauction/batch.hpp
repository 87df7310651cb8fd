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

// Drivers behind the command-line tool: bound evaluation by formula, exact
// LP or dual certificate; fuzzing over random instances; the (T, k) table.

#ifndef SEQAUCTION_BATCH_HPP_
#define SEQAUCTION_BATCH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqauction/certificates.hpp"
#include "seqauction/json_io.hpp"

namespace seqauction {

enum class ValuationClass { kConcave, kGeneral };
enum class BoundMethod { kFormula, kLp, kCertificate };

// Conditional efficiency bound for endpoint (k, T-k), 0 <= k <= T. The
// endpoint k = T is fully efficient and handled outside the LP.
Rational compute_bound(int T, int k, ValuationClass cls, BoundMethod method);

// Minimum over 0 <= k <= T and the smallest minimizing k.
std::pair<Rational, int> compute_bound_min(int T, ValuationClass cls,
                                           BoundMethod method);

// The closed-form certificate of the class, verified row by row.
DualVerification certify(int T, int k, ValuationClass cls);

struct FuzzConfig {
  std::string family = "random-concave";  // or "random-general"
  int count = 1000;
  int t_min = 1;
  int t_max = 12;
  std::uint64_t base_seed = 1;
  int scale = 20;
  int threads = 1;
  // Failing instances are written here as <family>-seed<seed>.json.
  std::optional<std::string> quarantine_dir;
};

struct FuzzFailure {
  std::uint64_t seed = 0;
  int items = 0;
  std::vector<std::string> failed_checks;
  std::string error;  // exception text, if solving itself failed
};

struct FuzzSummary {
  FuzzConfig config;
  std::size_t instances = 0;
  std::size_t tie_nodes = 0;
  std::size_t tie_nodes_checked = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> checks;  // passed, failed
  std::vector<FuzzFailure> failures;

  bool all_passed() const { return failures.empty(); }
};

// Instance i uses seed base_seed + i and T = t_min + i mod (t_max - t_min + 1).
FuzzSummary run_fuzz(const FuzzConfig& config);
Json fuzz_summary_to_json(const FuzzSummary& summary);

struct PoaTableConfig {
  int t_min = 1;
  int t_max = 25;
  int lp_max_t = 25;  // lp_opt / dual_obj / tight_instance_eff above this are left empty
  int threads = 1;
};

// Columns: T,k,formula,formula_approx,lp_opt,dual_obj,tight_instance_eff,
// min_over_k,min_over_k_approx,argmin_k. One row per 0 <= k <= T.
std::string poa_table_csv(const PoaTableConfig& config);

}  // namespace seqauction

#endif  // SEQAUCTION_BATCH_HPP_
