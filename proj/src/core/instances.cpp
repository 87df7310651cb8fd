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

#include "seqauction/instances.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace seqauction {
namespace {

AuctionInstance make(int T, std::vector<Rational> v1, std::vector<Rational> v2) {
  return AuctionInstance{T, IncrementalValuation(std::move(v1)),
                         IncrementalValuation(std::move(v2))};
}

void check_random_args(int T, int scale) {
  if (T < 1) throw std::out_of_range("random instance needs T >= 1");
  if (scale < 0) throw std::out_of_range("random instance needs scale >= 0");
}

// mt19937_64 output is fully specified by the standard; the reduction below
// avoids std::uniform_int_distribution, whose algorithm is not.
std::vector<Rational> grid_draws(std::mt19937_64& rng, int T, int scale) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(T));
  const auto buckets = static_cast<std::uint64_t>(scale) + 1;
  for (int j = 0; j < T; ++j) {
    const auto n = static_cast<long>(rng() % buckets);
    out.emplace_back(n, kRandomGridDenominator);
  }
  return out;
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

}  // namespace

AuctionInstance example_1() {
  return make(2, {10, 10}, {5, 0});
}

AuctionInstance tight_concave(int T, int k) {
  if (T < 1 || k < 0 || k >= T) {
    throw std::out_of_range("tight_concave requires 0 <= k < T, got T=" +
                            std::to_string(T) + ", k=" + std::to_string(k));
  }
  std::vector<Rational> v1(static_cast<std::size_t>(T), Rational(1));
  std::vector<Rational> v2;
  v2.reserve(static_cast<std::size_t>(T));
  for (int j = 1; j <= T; ++j) {
    v2.push_back(j <= T - k ? Rational(T - k - j + 1, T - j + 1) : Rational(0));
  }
  return make(T, std::move(v1), std::move(v2));
}

AuctionInstance tight_general(int T) {
  if (T < 1) throw std::out_of_range("tight_general requires T >= 1");
  std::vector<Rational> v1(static_cast<std::size_t>(T), Rational(0));
  std::vector<Rational> v2(static_cast<std::size_t>(T), Rational(0));
  v1.back() = 1;
  v2.front() = Rational(1, T);
  return make(T, std::move(v1), std::move(v2));
}

AuctionInstance random_concave(int T, std::uint64_t seed, int scale) {
  check_random_args(T, scale);
  auto rng = seeded(seed, 1);
  auto v1 = grid_draws(rng, T, scale);
  auto v2 = grid_draws(rng, T, scale);
  std::sort(v1.begin(), v1.end(), std::greater<>());
  std::sort(v2.begin(), v2.end(), std::greater<>());
  return make(T, std::move(v1), std::move(v2));
}

AuctionInstance random_general(int T, std::uint64_t seed, int scale) {
  check_random_args(T, scale);
  auto rng = seeded(seed, 2);
  auto v1 = grid_draws(rng, T, scale);
  auto v2 = grid_draws(rng, T, scale);
  return make(T, std::move(v1), std::move(v2));
}

AuctionInstance generate(const InstanceFamily& family) {
  if (family.name == "example1") return example_1();
  if (family.name == "tight-concave") return tight_concave(family.items, family.k);
  if (family.name == "tight-general") return tight_general(family.items);
  if (family.name == "random-concave") {
    return random_concave(family.items, family.seed, family.scale);
  }
  if (family.name == "random-general") {
    return random_general(family.items, family.seed, family.scale);
  }
  throw std::invalid_argument("unknown instance family \"" + family.name + "\"");
}

}  // namespace seqauction
