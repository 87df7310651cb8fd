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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "seqauction/instances.hpp"
#include "seqauction/lp.hpp"

namespace seqauction {
namespace {

// Runs fn(i) for i in [0, count) on `threads` workers with a static stride.
// fn must only write to per-index state.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

bool is_concave_class(ValuationClass cls) {
  return cls == ValuationClass::kConcave;
}

}  // namespace

Rational compute_bound(int T, int k, ValuationClass cls, BoundMethod method) {
  if (T < 1 || k < 0 || k > T) {
    throw std::out_of_range("bound requires 0 <= k <= T, got T=" +
                            std::to_string(T) + ", k=" + std::to_string(k));
  }
  if (k == T) return Rational(1);
  const bool concave = is_concave_class(cls);
  switch (method) {
    case BoundMethod::kFormula:
      return concave ? poa_bound_concave(T, k) : Rational(1, T);
    case BoundMethod::kLp: {
      const auto result = solve_exact(build_primal(T, k, concave));
      if (result.status != LpStatus::kOptimal) {
        throw std::logic_error("efficiency LP for T=" + std::to_string(T) +
                               ", k=" + std::to_string(k) + " is " +
                               to_string(result.status));
      }
      return result.optimal_value;
    }
    case BoundMethod::kCertificate: {
      const auto cert = concave ? concave_dual_certificate(T, k)
                                : general_dual_certificate(T, k);
      return dual_objective(cert, T);
    }
  }
  throw std::invalid_argument("unknown bound method");
}

std::pair<Rational, int> compute_bound_min(int T, ValuationClass cls,
                                           BoundMethod method) {
  if (T < 1) throw std::out_of_range("bound requires T >= 1");
  if (method == BoundMethod::kFormula && is_concave_class(cls)) {
    return poa_bound_concave_min(T);
  }
  std::pair<Rational, int> best{compute_bound(T, 0, cls, method), 0};
  for (int k = 1; k <= T; ++k) {
    Rational value = compute_bound(T, k, cls, method);
    if (value < best.first) best = {std::move(value), k};
  }
  return best;
}

DualVerification certify(int T, int k, ValuationClass cls) {
  const bool concave = is_concave_class(cls);
  const auto cert = concave ? concave_dual_certificate(T, k)
                            : general_dual_certificate(T, k);
  return verify_dual(cert, T, k, concave, /*require_tight=*/concave);
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  if (config.family != "random-concave" && config.family != "random-general") {
    throw std::invalid_argument("fuzz family must be random-concave or "
                                "random-general, got \"" + config.family + "\"");
  }
  if (config.t_min < 1 || config.t_max < config.t_min || config.count < 0) {
    throw std::out_of_range("fuzz requires 1 <= t_min <= t_max and count >= 0");
  }
  if (config.quarantine_dir) {
    std::filesystem::create_directories(*config.quarantine_dir);
  }

  struct Outcome {
    int items = 0;
    std::size_t ties = 0;
    std::size_t ties_checked = 0;
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<FuzzFailure> failure;
  };
  const auto count = static_cast<std::size_t>(config.count);
  const int span = config.t_max - config.t_min + 1;
  std::vector<Outcome> outcomes(count);

  parallel_for(count, config.threads, [&](std::size_t i) {
    const std::uint64_t seed = config.base_seed + i;
    const int T = config.t_min + static_cast<int>(i % static_cast<std::size_t>(span));
    InstanceFamily family{config.family, T, 0, seed, config.scale};
    const AuctionInstance inst = generate(family);
    Outcome& out = outcomes[i];
    out.items = T;
    FuzzFailure failure{seed, T, {}, {}};
    try {
      const auto sol = solve(inst);
      out.ties = sol.tie_count();
      for (const auto& report : run_all_checks(sol)) {
        out.checks.emplace_back(report.check_name, report.passed);
        if (report.check_name == "tie_invariance") {
          out.ties_checked = report.evaluated;
        }
        if (!report.passed) failure.failed_checks.push_back(report.check_name);
      }
    } catch (const std::exception& e) {
      failure.error = e.what();
    }
    if (!failure.failed_checks.empty() || !failure.error.empty()) {
      if (config.quarantine_dir) {
        const auto path = std::filesystem::path(*config.quarantine_dir) /
                          (config.family + "-seed" + std::to_string(seed) +
                           ".json");
        std::ofstream(path) << instance_to_json(inst).dump(2) << '\n';
      }
      out.failure = std::move(failure);
    }
  });

  FuzzSummary summary;
  summary.config = config;
  for (auto& out : outcomes) {
    ++summary.instances;
    summary.tie_nodes += out.ties;
    summary.tie_nodes_checked += out.ties_checked;
    for (const auto& [name, passed] : out.checks) {
      auto& counter = summary.checks[name];
      (passed ? counter.first : counter.second) += 1;
    }
    if (out.failure) summary.failures.push_back(std::move(*out.failure));
  }
  return summary;
}

Json fuzz_summary_to_json(const FuzzSummary& summary) {
  Json doc;
  doc["family"] = summary.config.family;
  doc["count"] = summary.config.count;
  doc["T_min"] = summary.config.t_min;
  doc["T_max"] = summary.config.t_max;
  doc["base_seed"] = summary.config.base_seed;
  doc["scale"] = summary.config.scale;
  doc["grid_denominator"] = kRandomGridDenominator;
  doc["instances"] = summary.instances;
  doc["tie_nodes"] = summary.tie_nodes;
  doc["tie_nodes_checked"] = summary.tie_nodes_checked;
  Json checks = Json::object();
  for (const auto& [name, counter] : summary.checks) {
    checks[name] = {{"passed", counter.first}, {"failed", counter.second}};
  }
  doc["checks"] = std::move(checks);
  Json failures = Json::array();
  for (const auto& f : summary.failures) {
    Json entry;
    entry["seed"] = f.seed;
    entry["T"] = f.items;
    entry["failed_checks"] = f.failed_checks;
    if (!f.error.empty()) entry["error"] = f.error;
    failures.push_back(std::move(entry));
  }
  doc["failures"] = std::move(failures);
  doc["all_passed"] = summary.all_passed();
  return doc;
}

std::string poa_table_csv(const PoaTableConfig& config) {
  if (config.t_min < 1 || config.t_max < config.t_min) {
    throw std::out_of_range("poa table requires 1 <= t_min <= t_max");
  }
  const auto count = static_cast<std::size_t>(config.t_max - config.t_min + 1);
  std::vector<std::string> blocks(count);
  parallel_for(count, config.threads, [&](std::size_t i) {
    const int T = config.t_min + static_cast<int>(i);
    const auto [min_value, argmin] = poa_bound_concave_min(T);
    const bool exact_columns = T <= config.lp_max_t;
    std::ostringstream out;
    for (int k = 0; k <= T; ++k) {
      const Rational formula = poa_bound_concave(T, k);
      out << T << ',' << k << ',' << formula.str() << ','
          << formula.decimal(kApproxPlaces) << ',';
      if (exact_columns) {
        const Rational lp = compute_bound(T, k, ValuationClass::kConcave,
                                          BoundMethod::kLp);
        const Rational dual = compute_bound(T, k, ValuationClass::kConcave,
                                            BoundMethod::kCertificate);
        const Rational tight =
            k == T ? Rational(1)
                   : min_equilibrium_efficiency(solve(tight_concave(T, k)));
        out << lp.str() << ',' << dual.str() << ',' << tight.str();
      } else {
        out << ",,";
      }
      out << ',' << min_value.str() << ',' << min_value.decimal(kApproxPlaces)
          << ',' << argmin << '\n';
    }
    blocks[i] = out.str();
  });
  std::string csv =
      "T,k,formula,formula_approx,lp_opt,dual_obj,tight_instance_eff,"
      "min_over_k,min_over_k_approx,argmin_k\n";
  for (const auto& b : blocks) csv += b;
  return csv;
}

}  // namespace seqauction
