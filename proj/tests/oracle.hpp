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

// Brute-force reference implementations over explicit truth tables. They
// share nothing with the library beyond plain integers and are only meant
// for small player counts.

#ifndef NAKAMURA_TESTS_ORACLE_HPP
#define NAKAMURA_TESTS_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

/// Truth table of a monotone game: table[s] == true iff s wins.
struct Table {
  int n = 0;
  std::vector<char> win;

  bool operator()(Mask s) const { return win[s] != 0; }
  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

inline Table weighted_table(long long q, const std::vector<long long>& w) {
  Table t;
  t.n = static_cast<int>(w.size());
  t.win.assign(std::size_t{1} << t.n, 0);
  for (Mask s = 0; s < t.win.size(); ++s) {
    long long total = 0;
    for (int i = 0; i < t.n; ++i)
      if (s >> i & 1) total += w[i];
    t.win[s] = total >= q;
  }
  return t;
}

inline Table generated_table(int n, const std::vector<Mask>& generators) {
  Table t;
  t.n = n;
  t.win.assign(std::size_t{1} << n, 0);
  for (Mask s = 0; s < t.win.size(); ++s)
    for (Mask g : generators)
      if ((g & ~s) == 0) {
        t.win[s] = 1;
        break;
      }
  return t;
}

inline std::vector<Mask> minimal_winning(const Table& t) {
  std::vector<Mask> out;
  for (Mask s = 0; s < t.win.size(); ++s) {
    if (!t(s)) continue;
    bool minimal = true;
    for (int i = 0; i < t.n && minimal; ++i)
      if ((s >> i & 1) && t(s & ~(Mask{1} << i))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> maximal_losing(const Table& t) {
  std::vector<Mask> out;
  for (Mask s = 0; s < t.win.size(); ++s) {
    if (t(s)) continue;
    bool maximal = true;
    for (int i = 0; i < t.n && maximal; ++i)
      if (!(s >> i & 1) && !t(s | (Mask{1} << i))) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

/// i is at least as desirable as j, by the definition over all coalitions.
inline bool at_least(const Table& t, int i, int j) {
  for (Mask s = 0; s < t.win.size(); ++s) {
    if (!(s >> j & 1) || (s >> i & 1)) continue;
    const Mask swapped = (s & ~(Mask{1} << j)) | (Mask{1} << i);
    if (t(s) && !t(swapped)) return false;
  }
  return true;
}

inline bool is_complete(const Table& t) {
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      if (!at_least(t, i, j) && !at_least(t, j, i)) return false;
  return true;
}

inline bool proper(const Table& t) {
  for (Mask s = 0; s < t.win.size(); ++s)
    if (t(s) && t(t.all() & ~s)) return false;
  return true;
}

inline bool strong(const Table& t) {
  for (Mask s = 0; s < t.win.size(); ++s)
    if (!t(s) && !t(t.all() & ~s)) return false;
  return true;
}

/// Nakamura number by iterative deepening over all winning coalitions;
/// 0 encodes infinity.
inline int nakamura(const Table& t) {
  std::vector<Mask> winning;
  for (Mask s = 0; s < t.win.size(); ++s)
    if (t(s)) winning.push_back(s);
  Mask inter = t.all();
  for (Mask s : winning) inter &= s;
  if (inter != 0) return 0;
  std::function<bool(std::size_t, int, Mask)> reach = [&](std::size_t from, int left, Mask acc) {
    if (acc == 0) return true;
    if (left == 0) return false;
    for (std::size_t k = from; k < winning.size(); ++k)
      if (reach(k + 1, left - 1, acc & winning[k])) return true;
    return false;
  };
  for (int k = 1;; ++k)
    if (reach(0, k, t.all())) return k;
}

/// Same, restricted to minimal winning coalitions (the search the oracle
/// equivalence property compares with).
inline int nakamura_minimal(const Table& t) {
  const auto mw = minimal_winning(t);
  Mask inter = t.all();
  for (Mask s : mw) inter &= s;
  if (inter != 0) return 0;
  std::function<bool(std::size_t, int, Mask)> reach = [&](std::size_t from, int left, Mask acc) {
    if (acc == 0) return true;
    if (left == 0) return false;
    for (std::size_t k = from; k < mw.size(); ++k)
      if (reach(k + 1, left - 1, acc & mw[k])) return true;
    return false;
  };
  for (int k = 1;; ++k)
    if (reach(0, k, t.all())) return k;
}

/// Least number of pairwise disjoint blocks with union `all`, each block
/// accepted by `block_ok` (assumed closed under subsets); 0 if impossible.
inline int min_partition(int n, const std::function<bool(Mask)>& block_ok) {
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  const int none = 1 << 20;
  std::vector<int> best(std::size_t{1} << n, none);
  best[0] = 0;
  for (Mask s = 1; s <= all; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s & ~low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask block = sub | low;
      if (block_ok(block) && best[s & ~block] + 1 < best[s]) best[s] = best[s & ~block] + 1;
      if (sub == 0) break;
    }
  }
  return best[all] >= none ? 0 : best[all];
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace oracle

#endif  // NAKAMURA_TESTS_ORACLE_HPP
