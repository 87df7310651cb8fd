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

// seqauction: command-line front end over the libseqauction C API.
//
// Exit status: 0 success, 1 a check or certificate failed, 2 usage error or
// invalid instance, 3 I/O error, 4 internal error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <list>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqauction/seqauction.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

constexpr const char* kOutputDirEnv = "SEQAUCTION_OUTPUT_DIR";

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(sqa_status status) {
  switch (status) {
    case SQA_OK: return kExitOk;
    case SQA_ERR_IO: return kExitIo;
    case SQA_ERR_INTERNAL: return kExitInternal;
    default: return kExitUsage;
  }
}

void check(sqa_status status) {
  if (status != SQA_OK) {
    throw CliError{exit_code_for(status), std::string(sqa_status_name(status)) +
                                              ": " + sqa_last_error()};
  }
}

// Owns a string allocated by the library.
struct CString {
  char* ptr = nullptr;
  ~CString() { sqa_free_string(ptr); }
  char** out() { return &ptr; }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct InstanceDeleter {
  void operator()(sqa_instance* p) const { sqa_instance_free(p); }
};
struct SolutionDeleter {
  void operator()(sqa_solution* p) const { sqa_solution_free(p); }
};
using InstancePtr = std::unique_ptr<sqa_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<sqa_solution, SolutionDeleter>;

std::optional<std::filesystem::path> output_dir_from_env() {
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

std::string decimal(const std::string& exact, int places = 12) {
  CString out;
  check(sqa_rational_decimal(exact.c_str(), places, out.out()));
  return out.str();
}

// Options shared by every subcommand.
struct Common {
  std::string format;
  std::string out;
};

// One input source: a file or a generated family.
struct InputSpec {
  std::string path;
  std::string family;
  int items = 2;
  int k = 0;
  std::uint64_t seed = 1;
  int scale = 20;
};

void add_common(CLI::App* cmd, Common& common, const std::string& default_format,
                std::initializer_list<std::string> formats) {
  common.format = default_format;
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember(std::vector<std::string>(formats)))
      ->capture_default_str();
  cmd->add_option("--out", common.out,
                  "Write output to this file instead of stdout (relative "
                  "paths resolve against $" + std::string(kOutputDirEnv) +
                      " when set)");
}

void add_family_options(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--T", in.items, "Number of items")->capture_default_str();
  cmd->add_option("--k", in.k, "Endpoint index for tight-concave")
      ->capture_default_str();
  cmd->add_option("--seed", in.seed, "Seed for random families")
      ->capture_default_str();
  cmd->add_option("--scale", in.scale,
                  "Random grid size: values are n/4 with 0 <= n <= scale")
      ->capture_default_str();
}

void add_input(CLI::App* cmd, InputSpec& in) {
  auto* file = cmd->add_option("--input,-i", in.path, "Instance JSON file");
  auto* family = cmd->add_option("--family", in.family,
                                 "Generate the instance instead: example1, "
                                 "tight-concave, tight-general, "
                                 "random-concave, random-general");
  file->excludes(family);
  family->excludes(file);
  add_family_options(cmd, in);
}

InstancePtr load_instance(const InputSpec& in) {
  sqa_instance* raw = nullptr;
  if (!in.path.empty()) {
    std::ifstream file(in.path);
    if (!file) throw CliError{kExitIo, "cannot read input file: " + in.path};
    std::stringstream buffer;
    buffer << file.rdbuf();
    const sqa_status status =
        sqa_instance_parse_json(buffer.str().c_str(), &raw);
    if (status != SQA_OK) {
      throw CliError{exit_code_for(status), in.path + ": " + sqa_last_error()};
    }
  } else if (!in.family.empty()) {
    check(sqa_instance_generate(in.family.c_str(), in.items, in.k, in.seed,
                                in.scale, &raw));
  } else {
    throw CliError{kExitUsage, "exactly one of --input or --family is required"};
  }
  return InstancePtr(raw);
}

// Validates and solves; an invalid instance prints its report and exits 2.
SolutionPtr solve_or_report(const InstancePtr& inst) {
  int valid = 0;
  CString report;
  check(sqa_instance_validate(inst.get(), &valid, report.out()));
  if (!valid) throw CliError{kExitUsage, "invalid instance\n" + report.str()};
  sqa_solution* raw = nullptr;
  check(sqa_solve(inst.get(), &raw));
  return SolutionPtr(raw);
}

void write_output(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::filesystem::path path(common.out);
  if (path.is_relative()) {
    if (auto dir = output_dir_from_env()) path = *dir / path;
  }
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream file(path);
  if (!file) throw CliError{kExitIo, "cannot write output file: " + path.string()};
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
  if (!file) throw CliError{kExitIo, "failed writing output file: " + path.string()};
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// ---- subcommands ----------------------------------------------------------

int run_solve(const InputSpec& in, const Common& common) {
  const auto inst = load_instance(in);
  const auto sol = solve_or_report(inst);
  CString text;
  check(sqa_solution_to_json(sol.get(), text.out()));
  if (common.format == "json") {
    write_output(common, text.str());
    return kExitOk;
  }
  const Json doc = Json::parse(text.str());
  const auto cell = [](const Json& v) {
    return v.is_null() ? std::string("-") : v.get<std::string>();
  };
  std::ostringstream out;
  if (common.format == "csv") {
    out << "x1,x2,u1,u2,b1,b2,p,outcome\n";
    for (const auto& [key, node] : doc["nodes"].items()) {
      out << key << ',' << node["u1"].get<std::string>() << ','
          << node["u2"].get<std::string>() << ','
          << (node["b1"].is_null() ? "" : node["b1"].get<std::string>()) << ','
          << (node["b2"].is_null() ? "" : node["b2"].get<std::string>()) << ','
          << (node["p"].is_null() ? "" : node["p"].get<std::string>()) << ','
          << node["outcome"].get<std::string>() << '\n';
    }
  } else {
    out << "T = " << doc["T"] << ", tie nodes = " << doc["tie_nodes"] << "\n";
    out << pad("node", 10) << pad("u1", 14) << pad("u2", 14) << pad("b1", 14)
        << pad("b2", 14) << pad("p", 14) << "outcome\n";
    for (const auto& [key, node] : doc["nodes"].items()) {
      out << pad("(" + key + ")", 10) << pad(cell(node["u1"]), 14)
          << pad(cell(node["u2"]), 14) << pad(cell(node["b1"]), 14)
          << pad(cell(node["b2"]), 14) << pad(cell(node["p"]), 14)
          << node["outcome"].get<std::string>() << '\n';
    }
  }
  write_output(common, out.str());
  return kExitOk;
}

Json paths_doc(const InputSpec& in, const std::string& policy) {
  const auto inst = load_instance(in);
  const auto sol = solve_or_report(inst);
  CString text;
  check(sqa_solution_paths_json(sol.get(), policy.c_str(), text.out()));
  return Json::parse(text.str());
}

int run_paths(const InputSpec& in, const Common& common,
              const std::string& policy) {
  const Json doc = paths_doc(in, policy);
  if (common.format == "json") {
    write_output(common, doc.dump(2));
    return kExitOk;
  }
  std::ostringstream out;
  if (common.format == "csv") {
    out << "policy,endpoint_k,endpoint_x2,efficiency,efficiency_approx,"
           "winners,prices_paid\n";
    for (const auto& p : doc["paths"]) {
      std::string winners, prices;
      for (const auto& w : p["winners"]) winners += std::to_string(w.get<int>());
      for (const auto& price : p["prices_paid"]) {
        if (!prices.empty()) prices += ' ';
        prices += price.get<std::string>();
      }
      out << p["policy"].get<std::string>() << ',' << p["endpoint"][0] << ','
          << p["endpoint"][1] << ',' << p["efficiency"].get<std::string>()
          << ',' << p["efficiency_approx"].get<std::string>() << ',' << winners
          << ',' << prices << '\n';
    }
  } else {
    out << "reachable endpoints:";
    for (const auto& e : doc["endpoints"]) {
      out << " (" << e[0] << ',' << e[1] << ')';
    }
    out << "\nmin efficiency: " << doc["min_efficiency"].get<std::string>()
        << " ~ " << doc["min_efficiency_approx"].get<std::string>() << '\n';
    for (const auto& p : doc["paths"]) {
      out << p["policy"].get<std::string>() << ": ";
      bool first = true;
      for (const auto& n : p["nodes"]) {
        out << (first ? "" : " -> ") << '(' << n.get<std::string>() << ')';
        first = false;
      }
      out << "  efficiency " << p["efficiency"].get<std::string>() << '\n';
    }
  }
  write_output(common, out.str());
  return kExitOk;
}

int run_enumerate(const InputSpec& in, const Common& common) {
  const Json doc = paths_doc(in, "all");
  if (common.format == "json") {
    Json out;
    out["T"] = doc["T"];
    Json endpoints = Json::array();
    for (const auto& p : doc["paths"]) {
      endpoints.push_back({{"endpoint", p["endpoint"]},
                           {"efficiency", p["efficiency"]},
                           {"efficiency_approx", p["efficiency_approx"]}});
    }
    out["endpoints"] = std::move(endpoints);
    out["min_efficiency"] = doc["min_efficiency"];
    write_output(common, out.dump(2));
    return kExitOk;
  }
  std::ostringstream out;
  if (common.format == "csv") out << "k,x2,efficiency,efficiency_approx\n";
  for (const auto& p : doc["paths"]) {
    if (common.format == "csv") {
      out << p["endpoint"][0] << ',' << p["endpoint"][1] << ','
          << p["efficiency"].get<std::string>() << ','
          << p["efficiency_approx"].get<std::string>() << '\n';
    } else {
      out << '(' << p["endpoint"][0] << ',' << p["endpoint"][1]
          << ")  efficiency " << p["efficiency"].get<std::string>() << " ~ "
          << p["efficiency_approx"].get<std::string>() << '\n';
    }
  }
  write_output(common, out.str());
  return kExitOk;
}

int run_verify(const InputSpec& in, const Common& common) {
  const auto inst = load_instance(in);
  const auto sol = solve_or_report(inst);
  int all_passed = 0;
  CString lines;
  check(sqa_solution_verify(sol.get(), &all_passed, lines.out()));
  if (common.format == "json") {
    write_output(common, lines.str());
  } else {
    std::ostringstream out;
    std::istringstream in_lines(lines.str());
    std::string line;
    while (std::getline(in_lines, line)) {
      const Json r = Json::parse(line);
      out << (r["passed"].get<bool>() ? "PASS " : "FAIL ")
          << pad(r["check"].get<std::string>(), 22) << r["evaluated"]
          << " conditions\n";
      for (const auto& w : r["witnesses"]) {
        out << "    at " << w["location"].get<std::string>() << ": "
            << w["detail"].get<std::string>() << " (expected "
            << w["expected"].get<std::string>() << ", actual "
            << w["actual"].get<std::string>() << ")\n";
      }
    }
    write_output(common, out.str());
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

struct BoundArgs {
  int items = 0;
  std::optional<int> k;
  std::string cls = "concave";
  std::string method = "formula";
  bool min_over_k = false;
};

int run_bound(const BoundArgs& args, const Common& common) {
  CString exact;
  int k = 0;
  if (args.min_over_k) {
    check(sqa_bound_min_over_k(args.items, args.cls.c_str(),
                               args.method.c_str(), exact.out(), &k));
  } else {
    if (!args.k) throw CliError{kExitUsage, "--k is required unless --min-over-k"};
    k = *args.k;
    check(sqa_bound(args.items, k, args.cls.c_str(), args.method.c_str(),
                    exact.out()));
  }
  const std::string approx = decimal(exact.str());
  std::ostringstream out;
  if (common.format == "json") {
    Json doc;
    doc["T"] = args.items;
    doc[args.min_over_k ? "argmin_k" : "k"] = k;
    doc["class"] = args.cls;
    doc["method"] = args.method;
    doc["min_over_k"] = args.min_over_k;
    doc["exact"] = exact.str();
    doc["approx"] = approx;
    out << doc.dump(2);
  } else if (common.format == "csv") {
    out << "T,k,class,method,min_over_k,exact,approx\n"
        << args.items << ',' << k << ',' << args.cls << ',' << args.method
        << ',' << (args.min_over_k ? 1 : 0) << ',' << exact.str() << ','
        << approx << '\n';
  } else {
    out << exact.str() << '\n' << "~ " << approx;
    if (args.min_over_k) out << "  (argmin k = " << k << ")";
    out << '\n';
  }
  write_output(common, out.str());
  return kExitOk;
}

int run_certify(int items, int k, const std::string& cls, const Common& common) {
  int feasible = 0;
  CString csv;
  check(sqa_certify_csv(items, k, cls.c_str(), &feasible, csv.out()));
  if (common.format == "csv") {
    write_output(common, csv.str());
  } else {
    // Re-shape the CSV for the other formats.
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    Json rows = Json::array();
    std::ostringstream pretty;
    while (std::getline(in, line)) {
      std::vector<std::string> f;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) f.push_back(cell);
      rows.push_back({{"family", f[0]}, {"index", std::stoi(f[1])},
                      {"lhs", f[2]}, {"relation", f[3]}, {"rhs", f[4]},
                      {"slack", f[5]}, {"tight", f[6] == "1"},
                      {"satisfied", f[7] == "1"}});
      pretty << pad(f[0], 8) << pad(f[1], 6) << pad(f[2], 16) << pad(f[3], 4)
             << pad(f[4], 6) << "slack " << pad(f[5], 14)
             << (f[7] == "1" ? "ok" : "VIOLATED") << '\n';
    }
    if (common.format == "json") {
      Json doc;
      doc["T"] = items;
      doc["k"] = k;
      doc["class"] = cls;
      doc["feasible"] = feasible == 1;
      doc["rows"] = std::move(rows);
      write_output(common, doc.dump(2));
    } else {
      pretty << (feasible ? "certificate feasible\n" : "certificate INFEASIBLE\n");
      write_output(common, pretty.str());
    }
  }
  return feasible ? kExitOk : kExitCheckFailed;
}

int run_generate(const InputSpec& in, const Common& common) {
  InputSpec spec = in;
  if (spec.family.empty()) throw CliError{kExitUsage, "--family is required"};
  const auto inst = load_instance(spec);
  CString text;
  check(sqa_instance_to_json(inst.get(), text.out()));
  write_output(common, text.str());
  return kExitOk;
}

struct FuzzArgs {
  std::string family = "random-concave";
  int count = 1000;
  int t_min = 1;
  int t_max = 12;
  std::uint64_t seed = 1;
  int scale = 20;
  int threads = 1;
  std::string quarantine_dir;
};

int run_fuzz(const FuzzArgs& args, const Common& common) {
  std::string quarantine = args.quarantine_dir;
  if (quarantine.empty()) {
    if (auto dir = output_dir_from_env()) quarantine = (*dir / "quarantine").string();
  }
  int all_passed = 0;
  CString summary;
  check(sqa_fuzz(args.family.c_str(), args.count, args.t_min, args.t_max,
                 args.seed, args.scale, args.threads,
                 quarantine.empty() ? nullptr : quarantine.c_str(), &all_passed,
                 summary.out()));
  if (common.format == "json") {
    write_output(common, summary.str());
  } else {
    const Json doc = Json::parse(summary.str());
    std::ostringstream out;
    out << doc["family"].get<std::string>() << ": " << doc["instances"]
        << " instances, T in [" << doc["T_min"] << ", " << doc["T_max"]
        << "], " << doc["tie_nodes"] << " tie nodes\n";
    for (const auto& [name, counts] : doc["checks"].items()) {
      out << pad(name, 22) << "passed " << pad(counts["passed"].dump(), 8)
          << "failed " << counts["failed"] << '\n';
    }
    for (const auto& f : doc["failures"]) {
      out << "FAILED seed " << f["seed"] << " (T=" << f["T"] << ")";
      for (const auto& c : f["failed_checks"]) out << ' ' << c.get<std::string>();
      if (f.contains("error")) out << " error: " << f["error"].get<std::string>();
      out << '\n';
    }
    out << (all_passed ? "all checks passed\n" : "FAILURES FOUND\n");
    write_output(common, out.str());
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria and efficiency bounds for two-buyer sequential "
               "second-price auctions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sqa_version()));

  // One Common per subcommand so format defaults do not collide.
  std::list<Common> commons;
  const auto common_for = [&](CLI::App* cmd, const std::string& default_format,
                              std::initializer_list<std::string> formats)
      -> const Common& {
    add_common(cmd, commons.emplace_back(), default_format, formats);
    return commons.back();
  };
  InputSpec input;
  std::string policy = "all";
  BoundArgs bound;
  int cert_items = 0;
  int cert_k = 0;
  std::string cert_class = "concave";
  FuzzArgs fuzz;
  int table_t_min = 1, table_t_max = 25, table_lp_max = 25, table_threads = 1;

  auto* solve = app.add_subcommand("solve", "Full equilibrium node table");
  add_input(solve, input);
  const Common& solve_common = common_for(solve, "pretty", {"json", "csv", "pretty"});

  auto* paths = app.add_subcommand(
      "paths", "Reachable endpoints and equilibrium paths under a tie policy");
  add_input(paths, input);
  const Common& paths_common = common_for(paths, "pretty", {"json", "csv", "pretty"});
  paths->add_option("--policy", policy,
                    "all (a witness path per endpoint), favor-buyer1, "
                    "favor-buyer2 or alternate")
      ->check(CLI::IsMember({"all", "favor-buyer1", "favor-buyer2", "alternate"}))
      ->capture_default_str();

  auto* enumerate = app.add_subcommand(
      "enumerate", "Every reachable equilibrium endpoint with its efficiency");
  add_input(enumerate, input);
  const Common& enumerate_common = common_for(enumerate, "pretty", {"json", "csv", "pretty"});

  auto* verify = app.add_subcommand(
      "verify", "Run every structural check; exit 1 if any fails");
  add_input(verify, input);
  const Common& verify_common = common_for(verify, "pretty", {"json", "pretty"});

  auto* bound_cmd = app.add_subcommand(
      "bound", "Conditional efficiency bound by formula, exact LP or certificate");
  bound_cmd->add_option("--T", bound.items, "Number of items")->required();
  bound_cmd->add_option("--k", bound.k, "Endpoint (k, T-k), 0 <= k <= T");
  bound_cmd->add_option("--class", bound.cls, "Valuation class")
      ->check(CLI::IsMember({"concave", "general"}))
      ->capture_default_str();
  bound_cmd->add_option("--method", bound.method, "Evaluation method")
      ->check(CLI::IsMember({"formula", "lp", "certificate"}))
      ->capture_default_str();
  bound_cmd->add_flag("--min-over-k", bound.min_over_k,
                      "Minimize over 0 <= k <= T instead");
  const Common& bound_common = common_for(bound_cmd, "pretty", {"json", "csv", "pretty"});

  auto* certify = app.add_subcommand(
      "certify", "Dual certificate slack table; exit 1 if infeasible");
  certify->add_option("--T", cert_items, "Number of items")->required();
  certify->add_option("--k", cert_k, "Endpoint (k, T-k), 0 <= k < T")->required();
  certify->add_option("--class", cert_class, "Valuation class")
      ->check(CLI::IsMember({"concave", "general"}))
      ->capture_default_str();
  const Common& certify_common = common_for(certify, "csv", {"json", "csv", "pretty"});

  auto* generate = app.add_subcommand("generate", "Emit an instance as JSON");
  generate->add_option("--family", input.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"example1", "tight-concave", "tight-general",
                             "random-concave", "random-general"}));
  add_family_options(generate, input);
  const Common& generate_common = common_for(generate, "json", {"json"});

  auto* fuzz_cmd = app.add_subcommand(
      "fuzz", "Run every check on random instances; exit 1 on any failure");
  fuzz_cmd->add_option("--family", fuzz.family, "Random family")
      ->check(CLI::IsMember({"random-concave", "random-general"}))
      ->capture_default_str();
  fuzz_cmd->add_option("--count", fuzz.count, "Number of instances")
      ->capture_default_str();
  fuzz_cmd->add_option("--T-min", fuzz.t_min, "Smallest T")->capture_default_str();
  fuzz_cmd->add_option("--T-max", fuzz.t_max, "Largest T")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed, "Seed of the first instance")
      ->capture_default_str();
  fuzz_cmd->add_option("--scale", fuzz.scale, "Random grid size")
      ->capture_default_str();
  fuzz_cmd->add_option("--threads", fuzz.threads, "Worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  fuzz_cmd->add_option("--quarantine-dir", fuzz.quarantine_dir,
                       "Directory for failing instances (default "
                       "$" + std::string(kOutputDirEnv) + "/quarantine)");
  const Common& fuzz_common = common_for(fuzz_cmd, "pretty", {"json", "pretty"});

  auto* table = app.add_subcommand(
      "poa-table", "CSV of the concave bound over a (T, k) grid");
  table->add_option("--T-min", table_t_min, "Smallest T")->capture_default_str();
  table->add_option("--T-max", table_t_max, "Largest T")->capture_default_str();
  table->add_option("--lp-max-T", table_lp_max,
                    "Solve LPs and tight instances only up to this T")
      ->capture_default_str();
  table->add_option("--threads", table_threads, "Worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  const Common& table_common = common_for(table, "csv", {"csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return run_solve(input, solve_common);
    if (*paths) return run_paths(input, paths_common, policy);
    if (*enumerate) return run_enumerate(input, enumerate_common);
    if (*verify) return run_verify(input, verify_common);
    if (*bound_cmd) return run_bound(bound, bound_common);
    if (*certify) return run_certify(cert_items, cert_k, cert_class, certify_common);
    if (*generate) return run_generate(input, generate_common);
    if (*fuzz_cmd) return run_fuzz(fuzz, fuzz_common);
    if (*table) {
      CString csv;
      check(sqa_poa_table_csv(table_t_min, table_t_max, table_lp_max,
                              table_threads, csv.out()));
      write_output(table_common, csv.str());
      return kExitOk;
    }
  } catch (const CliError& e) {
    std::cerr << "seqauction: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "seqauction: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
