// Copyright 2026 The nakamura Authors
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

#ifndef NAKAMURA_TESTS_HELPERS_HPP
#define NAKAMURA_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/simple_game.hpp"
#include "nakamura/weighted.hpp"
#include "oracle.hpp"

namespace testing_support {

using nakamura::Coalition;
using nakamura::SimpleGame;
using nakamura::WeightedRep;

inline std::vector<oracle::Mask> masks(const std::vector<Coalition>& cs) {
  std::vector<oracle::Mask> out;
  for (Coalition c : cs) out.push_back(c.bits());
  return out;
}

inline std::vector<Coalition> coalitions(const std::vector<oracle::Mask>& ms) {
  std::vector<Coalition> out;
  for (auto m : ms) out.emplace_back(m);
  nakamura::sort_coalitions(out);
  return out;
}

inline oracle::Table table_of(const SimpleGame& g) {
  return oracle::generated_table(g.players(), masks(g.min_winning()));
}

/// Coalition from 1-based player numbers.
inline Coalition C(std::initializer_list<int> one_based) {
  Coalition c;
  for (int p : one_based) c = c.with(p - 1);
  return c;
}

/// w repeated: {{9,10},{2,4}} -> 9 x10, 2 x4.
inline std::vector<std::int64_t> repeat(std::initializer_list<std::pair<std::int64_t, int>> parts) {
  std::vector<std::int64_t> out;
  for (auto [w, k] : parts) out.insert(out.end(), k, w);
  return out;
}

/// Random integral weighted representation without vetoers: n in [2, max_n],
/// weights in [0, max_w], quota in [1, w(N)].
inline WeightedRep random_weighted(std::mt19937_64& rng, int max_n, int max_w, bool vetoer_free) {
  while (true) {
    const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
    std::vector<std::int64_t> w(n);
    std::int64_t total = 0;
    for (auto& x : w) {
      x = std::uniform_int_distribution<int>(0, max_w)(rng);
      total += x;
    }
    if (total == 0) continue;
    const std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, total)(rng);
    WeightedRep rep(q, w);
    if (vetoer_free && !rep.vetoers().empty()) continue;
    return rep;
  }
}

/// Random monotone game on n players from a few random generators.
inline SimpleGame random_simple(std::mt19937_64& rng, int n, int generators) {
  std::vector<Coalition> gens;
  for (int k = 0; k < generators; ++k) {
    std::uint64_t bits = 0;
    while (bits == 0) bits = rng() & Coalition::all(n).bits();
    gens.emplace_back(bits);
  }
  return SimpleGame::from_generators(n, gens);
}

}  // namespace testing_support

#endif  // NAKAMURA_TESTS_HELPERS_HPP
