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

#include "seqauction/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace seqauction {
namespace {

std::vector<Rational> rationals_from_json(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  const Json& arr = doc.at(key);
  if (!arr.is_array()) {
    throw std::invalid_argument(std::string("field \"") + key +
                                "\" must be an array");
  }
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    try {
      out.push_back(rational_from_json(arr[i]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(key) + "[" + std::to_string(i) +
                                  "]: " + e.what());
    }
  }
  return out;
}

Json exact_array(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    return Rational::parse(value.dump());
  }
  if (value.is_string()) {
    return Rational::parse(value.get<std::string>());
  }
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " +
                              value.dump());
}

AuctionInstance instance_from_json(const Json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("instance must be a JSON object");
  }
  if (!doc.contains("T") || !doc.at("T").is_number_integer()) {
    throw std::invalid_argument("field \"T\" must be an integer");
  }
  const auto items = doc.at("T").get<long long>();
  if (items < 1 || items > 1'000'000) {
    throw std::invalid_argument("field \"T\" must be in [1, 1000000]");
  }
  return AuctionInstance{static_cast<int>(items),
                         IncrementalValuation(rationals_from_json(doc, "v1")),
                         IncrementalValuation(rationals_from_json(doc, "v2"))};
}

AuctionInstance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

Json instance_to_json(const AuctionInstance& inst) {
  Json doc;
  doc["T"] = inst.items;
  doc["v1"] = exact_array(inst.valuation_1.values());
  doc["v2"] = exact_array(inst.valuation_2.values());
  return doc;
}

Json validation_to_json(const ValidationReport& report) {
  Json doc;
  doc["valid"] = report.valid();
  doc["violations"] = report.violations;
  doc["concave"] = {{"v1", report.concave_1}, {"v2", report.concave_2}};
  return doc;
}

Json solution_to_json(const EquilibriumSolution& sol) {
  Json doc;
  doc["T"] = sol.items();
  doc["instance"] = instance_to_json(sol.instance());
  doc["tie_nodes"] = sol.tie_count();
  Json nodes = Json::object();
  for (const auto& x : sol.nodes()) {
    const auto& rec = sol.at(x);
    Json entry;
    Json approx;
    entry["u1"] = rec.u1.str();
    entry["u2"] = rec.u2.str();
    approx["u1"] = rec.u1.decimal(kApproxPlaces);
    approx["u2"] = rec.u2.decimal(kApproxPlaces);
    if (rec.round) {
      entry["b1"] = rec.round->b1.str();
      entry["b2"] = rec.round->b2.str();
      entry["p"] = rec.round->price.str();
      entry["outcome"] = to_string(rec.round->outcome);
      approx["b1"] = rec.round->b1.decimal(kApproxPlaces);
      approx["b2"] = rec.round->b2.decimal(kApproxPlaces);
      approx["p"] = rec.round->price.decimal(kApproxPlaces);
    } else {
      entry["b1"] = nullptr;
      entry["b2"] = nullptr;
      entry["p"] = nullptr;
      entry["outcome"] = "terminal";
    }
    entry["approx"] = std::move(approx);
    nodes[x.key()] = std::move(entry);
  }
  doc["nodes"] = std::move(nodes);
  return doc;
}

Json path_to_json(const PathReport& path, std::string_view policy) {
  Json doc;
  doc["policy"] = std::string(policy);
  Json nodes = Json::array();
  for (const auto& n : path.nodes) nodes.push_back(n.key());
  doc["nodes"] = std::move(nodes);
  doc["endpoint"] = {path.endpoint.k,
                     path.nodes.empty() ? 0 : path.nodes.back().x2};
  doc["prices_paid"] = exact_array(path.prices_paid);
  Json winners = Json::array();
  for (Buyer b : path.winners) winners.push_back(static_cast<int>(b));
  doc["winners"] = std::move(winners);
  doc["efficiency"] = path.efficiency.str();
  doc["efficiency_approx"] = path.efficiency.decimal(kApproxPlaces);
  return doc;
}

Json check_report_to_json(const CheckReport& report) {
  Json doc;
  doc["check"] = report.check_name;
  doc["passed"] = report.passed;
  doc["evaluated"] = report.evaluated;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back({{"location", w.location},
                         {"detail", w.detail},
                         {"expected", w.expected.str()},
                         {"actual", w.actual.str()}});
  }
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

std::string dual_rows_csv(const DualVerification& verification) {
  std::ostringstream out;
  out << "family,index,lhs,relation,rhs,slack,tight,satisfied\n";
  for (const auto& row : verification.rows) {
    out << row.family << ',' << row.index << ',' << row.lhs.str() << ','
        << row.relation << ',' << row.rhs.str() << ',' << row.slack.str()
        << ',' << (row.tight ? 1 : 0) << ',' << (row.satisfied ? 1 : 0)
        << '\n';
  }
  return out.str();
}

}  // namespace seqauction
