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

// JSON and CSV encodings shared by the C API and the tests.
//
// Instance format: {"T": int, "v1": [rat, ...], "v2": [rat, ...]} where a rat
// is a JSON integer or a string "p/q" (q > 0) or "p". Exact values are always
// written as strings; decimal companions are rounded to 12 places and only
// ever appear under keys marked "approx".

#ifndef SEQAUCTION_JSON_IO_HPP_
#define SEQAUCTION_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "seqauction/certificates.hpp"
#include "seqauction/checks.hpp"
#include "seqauction/equilibrium.hpp"

namespace seqauction {

using Json = nlohmann::ordered_json;

inline constexpr int kApproxPlaces = 12;

// Throws std::invalid_argument with a description of the first problem.
Rational rational_from_json(const Json& value);
AuctionInstance instance_from_json(const Json& doc);
AuctionInstance parse_instance(std::string_view text);

Json instance_to_json(const AuctionInstance& inst);
Json validation_to_json(const ValidationReport& report);
Json solution_to_json(const EquilibriumSolution& sol);
Json path_to_json(const PathReport& path, std::string_view policy);
Json check_report_to_json(const CheckReport& report);

// Header: family,index,lhs,relation,rhs,slack,tight,satisfied
std::string dual_rows_csv(const DualVerification& verification);

}  // namespace seqauction

#endif  // SEQAUCTION_JSON_IO_HPP_
