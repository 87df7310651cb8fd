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

#ifndef SEQAUCTION_INSTANCES_HPP_
#define SEQAUCTION_INSTANCES_HPP_

#include <cstdint>
#include <string>

#include "seqauction/auction.hpp"

namespace seqauction {

// Random incremental values are drawn from the grid {0, 1/D, ..., scale/D}
// with D = kRandomGridDenominator. A coarse grid keeps rational sizes small
// and makes exact bid ties common enough to exercise tie handling.
inline constexpr int kRandomGridDenominator = 4;
inline constexpr int kDefaultRandomScale = 20;

// T = 2, v1 = (10, 10), v2 = (5, 0).
AuctionInstance example_1();

// v1 = 1 everywhere; v2(j) = (T-k-j+1)/(T-j+1) for j <= T-k, else 0.
// Its worst equilibrium endpoint is (k, T-k). Throws std::out_of_range
// unless 0 <= k < T.
AuctionInstance tight_concave(int T, int k);

// v1 = (0, ..., 0, 1), v2 = (1/T, 0, ..., 0). Throws unless T >= 1.
AuctionInstance tight_general(int T);

// Non-increasing draws (sorted grid values) for both buyers. Deterministic in
// (T, seed, scale). Throws std::out_of_range for T < 1 or scale < 0.
AuctionInstance random_concave(int T, std::uint64_t seed,
                               int scale = kDefaultRandomScale);
// Independent grid draws.
AuctionInstance random_general(int T, std::uint64_t seed,
                               int scale = kDefaultRandomScale);

struct InstanceFamily {
  std::string name;  // example1 | tight-concave | tight-general |
                     // random-concave | random-general
  int items = 1;
  int k = 0;
  std::uint64_t seed = 0;
  int scale = kDefaultRandomScale;
};

// Throws std::invalid_argument for unknown family names.
AuctionInstance generate(const InstanceFamily& family);

}  // namespace seqauction

#endif  // SEQAUCTION_INSTANCES_HPP_
