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

#include "seqauction/seqauction.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <sstream>
#include <string>

#include "seqauction/batch.hpp"
#include "seqauction/instances.hpp"

struct sqa_instance {
  seqauction::AuctionInstance inst;
};

struct sqa_solution {
  seqauction::EquilibriumSolution sol;
};

namespace {

using namespace seqauction;

thread_local std::string g_last_error;

sqa_status fail(sqa_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Hands a std::string to the caller as a malloc'd C string.
sqa_status emit(const std::string& text, char** out) {
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (buf == nullptr) return fail(SQA_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  *out = buf;
  return SQA_OK;
}

// Runs body, translating exceptions to status codes. `invalid_as` lets
// parsing entry points report std::invalid_argument as SQA_ERR_PARSE.
template <typename Body>
sqa_status guarded(Body&& body,
                   sqa_status invalid_as = SQA_ERR_INVALID_ARGUMENT) {
  g_last_error.clear();
  try {
    return body();
  } catch (const InternalConsistencyError& e) {
    return fail(SQA_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(invalid_as, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SQA_ERR_RANGE, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(SQA_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SQA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SQA_ERR_INTERNAL, "unknown exception");
  }
}

bool parse_class(const char* name, ValuationClass* cls) {
  if (name == nullptr) return false;
  if (std::strcmp(name, "concave") == 0) {
    *cls = ValuationClass::kConcave;
  } else if (std::strcmp(name, "general") == 0) {
    *cls = ValuationClass::kGeneral;
  } else {
    return false;
  }
  return true;
}

bool parse_method(const char* name, BoundMethod* method) {
  if (name == nullptr) return false;
  if (std::strcmp(name, "formula") == 0) {
    *method = BoundMethod::kFormula;
  } else if (std::strcmp(name, "lp") == 0) {
    *method = BoundMethod::kLp;
  } else if (std::strcmp(name, "certificate") == 0) {
    *method = BoundMethod::kCertificate;
  } else {
    return false;
  }
  return true;
}

bool parse_policy(const std::string& name, TiePolicy* policy) {
  for (TiePolicy p : {TiePolicy::kFavorBuyer1, TiePolicy::kFavorBuyer2,
                      TiePolicy::kAlternate}) {
    if (name == to_string(p)) {
      *policy = p;
      return true;
    }
  }
  return false;
}

#define SQA_REQUIRE(cond, what)                                    \
  do {                                                             \
    if (!(cond)) return fail(SQA_ERR_INVALID_ARGUMENT, (what));    \
  } while (0)

}  // namespace

extern "C" {

const char* sqa_version(void) { return "0.1.0"; }

const char* sqa_status_name(sqa_status status) {
  switch (status) {
    case SQA_OK: return "ok";
    case SQA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SQA_ERR_PARSE: return "parse error";
    case SQA_ERR_VALIDATION: return "invalid instance";
    case SQA_ERR_RANGE: return "out of range";
    case SQA_ERR_INTERNAL: return "internal error";
    case SQA_ERR_IO: return "I/O error";
  }
  return "unknown status";
}

const char* sqa_last_error(void) { return g_last_error.c_str(); }

void sqa_free_string(char* s) { std::free(s); }

sqa_status sqa_instance_parse_json(const char* text, sqa_instance** out) {
  SQA_REQUIRE(text != nullptr && out != nullptr, "null argument");
  return guarded(
      [&] {
        *out = new sqa_instance{parse_instance(text)};
        return SQA_OK;
      },
      SQA_ERR_PARSE);
}

sqa_status sqa_instance_generate(const char* family, int T, int k,
                                 uint64_t seed, int scale,
                                 sqa_instance** out) {
  SQA_REQUIRE(family != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new sqa_instance{generate(InstanceFamily{family, T, k, seed, scale})};
    return SQA_OK;
  });
}

void sqa_instance_free(sqa_instance* inst) { delete inst; }

sqa_status sqa_instance_items(const sqa_instance* inst, int* T) {
  SQA_REQUIRE(inst != nullptr && T != nullptr, "null argument");
  *T = inst->inst.items;
  return SQA_OK;
}

sqa_status sqa_instance_to_json(const sqa_instance* inst, char** out) {
  SQA_REQUIRE(inst != nullptr && out != nullptr, "null argument");
  return guarded([&] { return emit(instance_to_json(inst->inst).dump(2), out); });
}

sqa_status sqa_instance_validate(const sqa_instance* inst, int* valid,
                                 char** report_json) {
  SQA_REQUIRE(inst != nullptr && valid != nullptr, "null argument");
  return guarded([&] {
    const auto report = validate_instance(inst->inst);
    *valid = report.valid() ? 1 : 0;
    if (report_json != nullptr) {
      return emit(validation_to_json(report).dump(2), report_json);
    }
    return SQA_OK;
  });
}

sqa_status sqa_solve(const sqa_instance* inst, sqa_solution** out) {
  SQA_REQUIRE(inst != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const auto report = validate_instance(inst->inst);
    if (!report.valid()) {
      std::string message = "invalid instance:";
      for (const auto& v : report.violations) message += " " + v + ";";
      return fail(SQA_ERR_VALIDATION, message);
    }
    *out = new sqa_solution{solve(inst->inst)};
    return SQA_OK;
  });
}

void sqa_solution_free(sqa_solution* sol) { delete sol; }

sqa_status sqa_solution_to_json(const sqa_solution* sol, char** out) {
  SQA_REQUIRE(sol != nullptr && out != nullptr, "null argument");
  return guarded([&] { return emit(solution_to_json(sol->sol).dump(2), out); });
}

sqa_status sqa_solution_paths_json(const sqa_solution* sol, const char* policy,
                                   char** out) {
  SQA_REQUIRE(sol != nullptr && policy != nullptr && out != nullptr,
              "null argument");
  return guarded([&] {
    const std::string name = policy;
    TiePolicy tie_policy{};
    if (name != "all" && !parse_policy(name, &tie_policy)) {
      return fail(SQA_ERR_INVALID_ARGUMENT, "unknown tie policy \"" + name +
                                                "\"; expected all, "
                                                "favor-buyer1, favor-buyer2 "
                                                "or alternate");
    }
    const Node root{0, 0};
    const int T = sol->sol.items();
    Json doc;
    doc["T"] = T;
    Json endpoints = Json::array();
    const auto reachable = reachable_equilibrium_endpoints(sol->sol, root);
    for (const auto& a : reachable) endpoints.push_back({a.k, T - a.k});
    doc["endpoints"] = std::move(endpoints);
    const Rational worst = min_equilibrium_efficiency(sol->sol);
    doc["min_efficiency"] = worst.str();
    doc["min_efficiency_approx"] = worst.decimal(kApproxPlaces);
    Json paths = Json::array();
    if (name == "all") {
      for (const auto& a : reachable) {
        const auto path = witness_path(sol->sol, root, a);
        if (!path) {
          return fail(SQA_ERR_INTERNAL,
                      "no witness path for reachable endpoint k=" +
                          std::to_string(a.k));
        }
        paths.push_back(path_to_json(*path, "witness"));
      }
    } else {
      paths.push_back(path_to_json(extract_path(sol->sol, root, tie_policy),
                                   name));
    }
    doc["paths"] = std::move(paths);
    return emit(doc.dump(2), out);
  });
}

sqa_status sqa_solution_min_efficiency(const sqa_solution* sol, char** exact) {
  SQA_REQUIRE(sol != nullptr && exact != nullptr, "null argument");
  return guarded([&] { return emit(min_equilibrium_efficiency(sol->sol).str(), exact); });
}

sqa_status sqa_solution_verify(const sqa_solution* sol, int* all_passed,
                               char** jsonl) {
  SQA_REQUIRE(sol != nullptr && all_passed != nullptr && jsonl != nullptr,
              "null argument");
  return guarded([&] {
    std::string lines;
    bool ok = true;
    for (const auto& report : run_all_checks(sol->sol)) {
      ok = ok && report.passed;
      lines += check_report_to_json(report).dump();
      lines += '\n';
    }
    *all_passed = ok ? 1 : 0;
    return emit(lines, jsonl);
  });
}

sqa_status sqa_bound(int T, int k, const char* cls, const char* method,
                     char** exact) {
  SQA_REQUIRE(exact != nullptr, "null argument");
  ValuationClass c{};
  BoundMethod m{};
  SQA_REQUIRE(parse_class(cls, &c), "class must be concave or general");
  SQA_REQUIRE(parse_method(method, &m),
              "method must be formula, lp or certificate");
  return guarded([&] { return emit(compute_bound(T, k, c, m).str(), exact); });
}

sqa_status sqa_bound_min_over_k(int T, const char* cls, const char* method,
                                char** exact, int* argmin_k) {
  SQA_REQUIRE(exact != nullptr && argmin_k != nullptr, "null argument");
  ValuationClass c{};
  BoundMethod m{};
  SQA_REQUIRE(parse_class(cls, &c), "class must be concave or general");
  SQA_REQUIRE(parse_method(method, &m),
              "method must be formula, lp or certificate");
  return guarded([&] {
    const auto [value, k] = compute_bound_min(T, c, m);
    *argmin_k = k;
    return emit(value.str(), exact);
  });
}

sqa_status sqa_certify_csv(int T, int k, const char* cls, int* feasible,
                           char** csv) {
  SQA_REQUIRE(feasible != nullptr && csv != nullptr, "null argument");
  ValuationClass c{};
  SQA_REQUIRE(parse_class(cls, &c), "class must be concave or general");
  return guarded([&] {
    const auto verification = certify(T, k, c);
    *feasible = verification.report.passed ? 1 : 0;
    return emit(dual_rows_csv(verification), csv);
  });
}

sqa_status sqa_poa_table_csv(int t_min, int t_max, int lp_max_t, int threads,
                             char** csv) {
  SQA_REQUIRE(csv != nullptr, "null argument");
  return guarded([&] {
    return emit(poa_table_csv(PoaTableConfig{t_min, t_max, lp_max_t, threads}),
                csv);
  });
}

sqa_status sqa_fuzz(const char* family, int count, int t_min, int t_max,
                    uint64_t base_seed, int scale, int threads,
                    const char* quarantine_dir, int* all_passed,
                    char** summary_json) {
  SQA_REQUIRE(family != nullptr && all_passed != nullptr &&
                  summary_json != nullptr,
              "null argument");
  return guarded([&] {
    FuzzConfig config;
    config.family = family;
    config.count = count;
    config.t_min = t_min;
    config.t_max = t_max;
    config.base_seed = base_seed;
    config.scale = scale;
    config.threads = threads;
    if (quarantine_dir != nullptr) config.quarantine_dir = quarantine_dir;
    const auto summary = run_fuzz(config);
    *all_passed = summary.all_passed() ? 1 : 0;
    return emit(fuzz_summary_to_json(summary).dump(2), summary_json);
  });
}

sqa_status sqa_rational_decimal(const char* exact, int places, char** out) {
  SQA_REQUIRE(exact != nullptr && out != nullptr, "null argument");
  SQA_REQUIRE(places >= 0 && places <= 1000, "places must be in [0, 1000]");
  return guarded(
      [&] { return emit(Rational::parse(exact).decimal(places), out); },
      SQA_ERR_PARSE);
}

}  // extern "C"
