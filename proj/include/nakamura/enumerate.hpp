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

#ifndef NAKAMURA_ENUMERATE_HPP
#define NAKAMURA_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nakamura/bounds.hpp"
#include "nakamura/coalition.hpp"
#include "nakamura/common.hpp"
#include "nakamura/complete_game.hpp"
#include "nakamura/nakamura.hpp"
#include "nakamura/rational.hpp"
#include "nakamura/simple_game.hpp"
#include "nakamura/weighted.hpp"

namespace nakamura {

// ---------------------------------------------------------------------------
// Compositions and games with one shift-minimal winning vector

/// Calls fn on every composition of n into t positive parts, in
/// lexicographic order.
template <typename Fn>
void for_each_composition(int n, int t, Fn&& fn) {
  if (t < 1 || n < t) return;
  std::vector<int> parts(t, 1);
  parts.back() = n - t + 1;
  while (true) {
    fn(static_cast<const std::vector<int>&>(parts));
    // Rightmost part (before the last) whose tail still has slack grows by
    // one; the parts after it reset to 1 and the last takes the rest.
    int j = t - 2;
    int tail = parts[t - 1];
    while (j >= 0 && tail == t - 1 - j) tail += parts[j--];
    if (j < 0) return;
    ++parts[j];
    for (int i = j + 1; i < t - 1; ++i) parts[i] = 1;
    parts[t - 1] = tail - 1 - (t - 2 - j);
  }
}

/// Deterministic partition of an enumeration into `count` shards by the
/// index of the class-size composition.
struct ShardSpec {
  int count = 1;
  int index = 0;

  void validate() const {
    if (count < 1) throw invalid_game_error("shard count must be positive");
    if (index < 0 || index >= count)
      throw invalid_game_error("shard index " + std::to_string(index) + " outside [0, " + std::to_string(count) + ")");
  }
  bool owns(std::uint64_t k) const { return static_cast<int>(k % static_cast<std::uint64_t>(count)) == index; }
};

/// Calls fn(sizes, row) for every complete game on n players with a unique
/// shift-minimal winning vector: t ascending, sizes lexicographic, rows
/// lexicographic. Admissible rows have m_1 in [1, n_1], m_j in [1, n_j - 1]
/// for 1 < j < t and m_t in [0, n_t - 1] when t > 1.
template <typename Fn>
void for_each_r1_raw(int n, Fn&& fn, const ShardSpec& shard = {}) {
  shard.validate();
  if (n < 1) throw invalid_game_error("player count must be positive");
  std::uint64_t composition = 0;
  for (int t = 1; t <= n; ++t) {
    for_each_composition(n, t, [&](const std::vector<int>& sizes) {
      if (!shard.owns(composition++)) return;
      std::vector<int> lo(t), hi(t);
      for (int j = 0; j < t; ++j) {
        lo[j] = (j == t - 1 && t > 1) ? 0 : 1;
        hi[j] = j == 0 ? sizes[0] : sizes[j] - 1;
      }
      if (t == 1) hi[0] = sizes[0];
      for (int j = 0; j < t; ++j)
        if (lo[j] > hi[j]) return;
      CoalitionVector row(lo.begin(), lo.end());
      while (true) {
        fn(sizes, static_cast<const CoalitionVector&>(row));
        int j = t - 1;
        while (j >= 0 && row[j] == hi[j]) {
          row[j] = lo[j];
          --j;
        }
        if (j < 0) break;
        ++row[j];
      }
    });
  }
}

template <typename Fn>
void for_each_r1(int n, Fn&& fn, const ShardSpec& shard = {}) {
  for_each_r1_raw(
      n, [&](const std::vector<int>& sizes, const CoalitionVector& row) { fn(CompleteGame::make(sizes, {row})); },
      shard);
}

inline std::vector<CompleteGame> enumerate_r1(int n, const ShardSpec& shard = {}) {
  std::vector<CompleteGame> out;
  for_each_r1(n, [&](const CompleteGame& g) { out.push_back(g); }, shard);
  return out;
}

// ---------------------------------------------------------------------------
// Census

enum class CensusClass { complete_r1, weighted_r1 };

inline std::string to_string(CensusClass c) { return c == CensusClass::complete_r1 ? "complete_r1" : "weighted_r1"; }

inline CensusClass parse_census_class(const std::string& s) {
  if (s == "complete_r1") return CensusClass::complete_r1;
  if (s == "weighted_r1") return CensusClass::weighted_r1;
  throw invalid_game_error("unknown census class '" + s + "' (expected complete_r1 or weighted_r1)");
}

/// Number of games per Nakamura value for one player count.
struct CensusRow {
  int n = 0;
  CensusClass cls = CensusClass::complete_r1;
  std::uint64_t infinite = 0;
  std::vector<std::uint64_t> finite;  // finite[k] for k = 0..n, only k >= 2 used

  std::uint64_t count(ExtendedCount v) const {
    if (v.is_infinite()) return infinite;
    const auto k = static_cast<std::size_t>(v.value());
    return k < finite.size() ? finite[k] : 0;
  }
  std::uint64_t total() const { return std::accumulate(finite.begin(), finite.end(), infinite); }
  void add(ExtendedCount v) {
    if (v.is_infinite()) {
      ++infinite;
      return;
    }
    const auto k = static_cast<std::size_t>(v.value());
    if (finite.size() <= k) finite.resize(k + 1, 0);
    ++finite[k];
  }
  /// Associative merge of shard results for the same n and class.
  CensusRow& merge(const CensusRow& o) {
    if (o.n != n || o.cls != cls) throw invalid_game_error("merging census rows of different kinds");
    infinite += o.infinite;
    if (finite.size() < o.finite.size()) finite.resize(o.finite.size(), 0);
    for (std::size_t k = 0; k < o.finite.size(); ++k) finite[k] += o.finite[k];
    return *this;
  }
  /// Counts in table order: infinite, then 2, 3, ..., up to `columns` values.
  std::vector<std::uint64_t> table_row(int last_value) const {
    std::vector<std::uint64_t> out{infinite};
    for (int k = 2; k <= last_value; ++k) out.push_back(count(ExtendedCount(k)));
    return out;
  }
  bool operator==(const CensusRow& o) const {
    return n == o.n && cls == o.cls && table_row(std::max(n, 2)) == o.table_row(std::max(o.n, 2));
  }
};

struct CensusOptions {
  ShardSpec shard;
  int max_complete_n = 16;
  int max_weighted_n = 12;
};

inline CensusRow census(int n, CensusClass cls, const CensusOptions& options = {}) {
  const int cap = cls == CensusClass::complete_r1 ? options.max_complete_n : options.max_weighted_n;
  if (n > cap)
    throw capacity_error(to_string(cls) + " census limited to n <= " + std::to_string(cap) + ", got " +
                         std::to_string(n));
  CensusRow row;
  row.n = n;
  row.cls = cls;
  row.finite.assign(static_cast<std::size_t>(n) + 1, 0);
  for_each_r1_raw(
      n,
      [&](const std::vector<int>& sizes, const CoalitionVector& m) {
        if (cls == CensusClass::weighted_r1 && !is_weighted_complete(CompleteGame::make(sizes, {m}))) return;
        row.add(nakamura_r1(sizes, m));
      },
      options.shard);
  return row;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of small games

namespace detail {

// Up-sets of a finite poset whose elements are indexed so that everything
// strictly above an element has a smaller index. above[x] lists elements
// strictly above x. fn receives the membership vector.
template <typename Fn>
void for_each_upset(const std::vector<std::vector<int>>& above, Fn&& fn) {
  const int size = static_cast<int>(above.size());
  std::vector<char> in(size, 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == size) {
      fn(static_cast<const std::vector<char>&>(in));
      return;
    }
    in[x] = 0;
    rec(x + 1);
    if (std::all_of(above[x].begin(), above[x].end(), [&](int y) { return in[y] != 0; })) {
      in[x] = 1;
      rec(x + 1);
      in[x] = 0;
    }
  };
  rec(0);
}

}  // namespace detail

inline constexpr int kMaxAllGamesPlayers = 6;

/// Calls fn on every simple game on n players (empty coalition losing, grand
/// coalition winning), through the up-sets of the subset lattice.
template <typename Fn>
void for_each_simple_game(int n, Fn&& fn) {
  if (n < 1) throw invalid_game_error("player count must be positive");
  if (n > kMaxAllGamesPlayers)
    throw capacity_error("enumeration of all simple games limited to n <= " + std::to_string(kMaxAllGamesPlayers));
  const std::uint64_t full = Coalition::all(n).bits();
  // Subsets by decreasing size, so supersets come first.
  std::vector<std::uint64_t> order(full + 1);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
  std::vector<int> index(full + 1);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> above(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int p = 0; p < n; ++p)
      if (!(order[i] >> p & 1)) above[i].push_back(index[order[i] | (std::uint64_t{1} << p)]);
  detail::for_each_upset(above, [&](const std::vector<char>& in) {
    if (!in[index[full]] || in[index[0]]) return;
    std::vector<Coalition> minimal;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (!in[i]) continue;
      bool is_min = true;
      for (int p = 0; p < n && is_min; ++p)
        if ((order[i] >> p & 1) && in[index[order[i] & ~(std::uint64_t{1} << p)]]) is_min = false;
      if (is_min) minimal.emplace_back(order[i]);
    }
    fn(SimpleGame::from_antichain_unchecked(n, std::move(minimal)));
  });
}

/// Calls fn on every complete simple game on n players with any number of
/// shift-minimal winning vectors, through the up-sets of the shift order on
/// coalition vectors. With t > 0 only games with t classes are visited.
template <typename Fn>
void for_each_complete_game(int n, int t, Fn&& fn) {
  if (n < 1) throw invalid_game_error("player count must be positive");
  if (n > kMaxAllGamesPlayers)
    throw capacity_error("enumeration of complete games limited to n <= " + std::to_string(kMaxAllGamesPlayers));
  for (int parts = 1; parts <= n; ++parts) {
    if (t > 0 && parts != t) continue;
    for_each_composition(n, parts, [&](const std::vector<int>& sizes) {
      std::vector<CoalitionVector> vectors;
      for_each_vector(sizes, [&](const CoalitionVector& c) { vectors.push_back(c); });
      auto rank = [](const CoalitionVector& c) {
        int s = 0, acc = 0;
        for (int x : c) s += (acc += x);
        return s;
      };
      std::stable_sort(vectors.begin(), vectors.end(),
                       [&](const CoalitionVector& a, const CoalitionVector& b) { return rank(a) > rank(b); });
      const std::size_t size = vectors.size();
      std::vector<std::vector<int>> above(size);
      for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < x; ++y)
          if (shift_leq(vectors[x], vectors[y])) above[x].push_back(static_cast<int>(y));
      detail::for_each_upset(above, [&](const std::vector<char>& in) {
        if (!in[0] || in[size - 1]) return;
        std::vector<CoalitionVector> rows;
        for (std::size_t x = 0; x < size; ++x) {
          if (!in[x]) continue;
          bool minimal = true;
          for (std::size_t y = x + 1; y < size && minimal; ++y)
            if (in[y] && shift_leq(vectors[y], vectors[x])) minimal = false;
          if (minimal) rows.push_back(vectors[x]);
        }
        std::sort(rows.begin(), rows.end(), std::greater<>());
        if (!check_complete_parameters(sizes, rows).empty()) return;
        fn(CompleteGame::make(sizes, std::move(rows)));
      });
    });
  }
}

inline constexpr int kMaxCanonicalPlayers = 8;

/// Lexicographically least sorted list of minimal winning masks over all
/// relabelings of the players.
inline std::vector<std::uint64_t> canonical_form(const SimpleGame& game) {
  const int n = game.players();
  if (n > kMaxCanonicalPlayers)
    throw capacity_error("canonical form limited to n <= " + std::to_string(kMaxCanonicalPlayers));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> image;
    for (Coalition m : game.min_winning()) {
      std::uint64_t b = 0;
      for (int p : m.members()) b |= std::uint64_t{1} << perm[p];
      image.push_back(b);
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const SimpleGame& a, const SimpleGame& b) {
  return a.players() == b.players() && a.min_winning().size() == b.min_winning().size() &&
         canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Constructions

struct FamilySpec {
  std::string tag;
  int n = 0;
  int k = 0;
  int t = 0;
  int r = 0;
  std::vector<std::int64_t> w;
  Rational qbar;
  std::vector<int> sizes;  // optional class sizes for the circular construction
};

inline FamilySpec family_spec(std::string tag, int n, int k = 0, int t = 0) {
  FamilySpec s;
  s.tag = std::move(tag);
  s.n = n;
  s.k = k;
  s.t = t;
  return s;
}

struct FamilyGame {
  std::string tag;
  SimpleGame game;
  std::optional<WeightedRep> weighted;
  std::vector<int> class_sizes;          // vector description, when given
  std::vector<CoalitionVector> vectors;  // minimal winning vectors, when given
  ExtendedCount stated;                  // value the construction is known to give
  bool stated_is_lower_bound = false;
};

inline const std::vector<std::string>& family_tags() {
  static const std::vector<std::string> tags{"lemma9-1", "lemma9-2", "lemma9-3", "lemma9-4", "lemma9-5",
                                             "prop6-a",  "prop6-b",  "prop6-c",  "prop6-d",  "prop7",
                                             "prop8",    "theorem3a", "theorem3b"};
  return tags;
}

namespace detail {

inline void require_param(bool ok, const std::string& tag, const std::string& constraint) {
  if (!ok) throw invalid_game_error(tag + ": parameters violate " + constraint);
}

inline FamilyGame weighted_family(const std::string& tag, std::int64_t q, std::vector<std::int64_t> w,
                                  ExtendedCount stated) {
  WeightedRep rep(q, w);
  FamilyGame out{tag, game_from_weighted(rep), rep, {}, {}, stated, false};
  return out;
}

inline std::vector<std::int64_t> weights_of(std::initializer_list<std::pair<std::int64_t, int>> parts) {
  std::vector<std::int64_t> out;
  for (auto [w, count] : parts) out.insert(out.end(), static_cast<std::size_t>(std::max(count, 0)), w);
  return out;
}

inline FamilyGame star_with_isolated(const std::string& tag, int n, int k, ExtendedCount stated) {
  require_param(n >= 4, tag, "n >= 4");
  require_param(k >= 2 && k <= n - 2, tag, "2 <= k <= n - 2");
  return weighted_family(tag, 5LL * n - 2LL * k - 9, weights_of({{5, n - k - 1}, {3, k}, {1, 1}}), stated);
}

}  // namespace detail

/// Weight-1 padding: [ceil(qbar (W + r)); w_1, ..., w_n, 1^r] with W = sum w.
inline WeightedRep padding_game(const std::vector<std::int64_t>& w, const Rational& qbar, int r) {
  if (w.empty()) throw invalid_game_error("theorem3a: no weights given");
  for (auto x : w)
    if (x < 1) throw invalid_game_error("theorem3a: weights must be positive integers");
  if (!(sgn(qbar) > 0 && qbar < 1)) throw invalid_game_error("theorem3a: qbar must lie in (0, 1)");
  if (r < 1) throw invalid_game_error("theorem3a: r must be positive");
  std::vector<std::int64_t> weights = w;
  weights.insert(weights.end(), static_cast<std::size_t>(r), 1);
  const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
  return WeightedRep(to_int64(ceil(Rational(qbar * Rational(static_cast<long>(total))))), weights);
}

/// r-fold replica: [ceil(qbar W r); w_1^r, ..., w_n^r].
inline WeightedRep replica_game(const std::vector<std::int64_t>& w, const Rational& qbar, int r) {
  if (w.empty()) throw invalid_game_error("theorem3b: no weights given");
  for (auto x : w)
    if (x < 1) throw invalid_game_error("theorem3b: weights must be positive integers");
  if (!(sgn(qbar) > 0 && qbar < 1)) throw invalid_game_error("theorem3b: qbar must lie in (0, 1)");
  if (r < 1) throw invalid_game_error("theorem3b: r must be positive");
  std::vector<std::int64_t> weights;
  for (auto x : w) weights.insert(weights.end(), static_cast<std::size_t>(r), x);
  const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
  return WeightedRep(to_int64(ceil(Rational(qbar * Rational(static_cast<long>(total))))), weights);
}

/// ceil(1 / (1 - q)) with q the relative quota of an integral representation.
inline ExtendedCount relative_quota_value(const WeightedRep& rep) {
  return ceil_ratio(rep.total(), rep.total() - rep.quota);
}

/// Game on t classes whose minimal winning vectors drop one player of class
/// 1, or one player of each of two neighbouring classes among 2..t on a cycle.
inline FamilyGame circular_game(int n, int t, std::vector<int> sizes = {}) {
  const std::string tag = "prop7";
  detail::require_param(t >= 6, tag, "t >= 6");
  detail::require_param(n >= t, tag, "n >= t");
  if (sizes.empty()) {
    sizes.assign(static_cast<std::size_t>(t), 1);
    sizes[0] = n - t + 1;
  }
  detail::require_param(static_cast<int>(sizes.size()) == t, tag, "one class size per class");
  detail::require_param(std::all_of(sizes.begin(), sizes.end(), [](int s) { return s >= 1; }), tag,
                        "positive class sizes");
  detail::require_param(std::accumulate(sizes.begin(), sizes.end(), 0) == n, tag, "class sizes summing to n");
  std::vector<CoalitionVector> vectors;
  CoalitionVector full(sizes.begin(), sizes.end());
  auto drop = [&](std::initializer_list<int> classes) {
    CoalitionVector v = full;
    for (int j : classes) --v[j];
    vectors.push_back(v);
  };
  drop({0});
  for (int j = 1; j + 1 < t; ++j) drop({j, j + 1});
  drop({1, t - 1});
  auto coalitions = expand_vectors(consecutive_classes(sizes), vectors);
  return {tag, SimpleGame::from_generators(n, std::move(coalitions)), std::nullopt, sizes, vectors,
          ExtendedCount(n - (t - 1) / 2), true};
}

/// Game on n players with a k-set V: all (n-1)-sets win, N \ V wins, and
/// N \ {v_i, u} wins for u in U_i, where U_1, ..., U_{t-k} are distinct
/// subsets of V: the empty set, the singletons, then further subsets by
/// size and bit order.
inline FamilyGame veto_set_game(int n, int k, int t) {
  const std::string tag = "prop8";
  detail::require_param(k >= 3, tag, "k >= 3");
  detail::require_param(k < 20 && t >= 2 * k + 1 && t <= k + (1 << k), tag, "2k + 1 <= t <= k + 2^k");
  detail::require_param(n >= t, tag, "n >= t");
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  subsets.resize(static_cast<std::size_t>(t - k));
  const Coalition all = Coalition::all(n);
  const Coalition v_set = Coalition::all(k);
  std::vector<Coalition> generators;
  for (int p = 0; p < n; ++p) generators.push_back(all.without(p));
  generators.push_back(all - v_set);
  for (int i = 0; i < t - k; ++i) {
    const int v = k + i;
    for (int u = 0; u < k; ++u)
      if (subsets[i] >> u & 1) generators.push_back(all.without(v).without(u));
  }
  return {tag, SimpleGame::from_generators(n, std::move(generators)), std::nullopt, {}, {},
          ExtendedCount(n - k), true};
}

inline FamilyGame construct_family(const FamilySpec& spec) {
  const std::string& tag = spec.tag;
  const int n = spec.n;
  using detail::require_param;
  using detail::weights_of;
  if (tag == "lemma9-1") {
    require_param(n >= 3, tag, "n >= 3");
    return detail::weighted_family(tag, 2LL * n - 4, weights_of({{2, n - 2}, {1, 2}}), ExtendedCount(n - 1));
  }
  if (tag == "lemma9-2") {
    require_param(n == 0 || n == 3, tag, "n = 3");
    return detail::weighted_family(tag, 1, {1, 1, 1}, ExtendedCount(2));
  }
  if (tag == "lemma9-3") {
    require_param(n >= 4, tag, "n >= 4");
    return detail::weighted_family(tag, 2LL * n - 5, weights_of({{2, n - 3}, {1, 3}}), ExtendedCount(n - 1));
  }
  if (tag == "lemma9-4" || tag == "prop6-b") {
    require_param(n >= 3, tag, "n >= 3");
    return detail::weighted_family(tag, n - 2, weights_of({{1, n - 1}, {0, 1}}), ExtendedCount(n - 1));
  }
  if (tag == "lemma9-5" || tag == "prop6-c") return detail::star_with_isolated(tag, n, spec.k == 0 ? 2 : spec.k, ExtendedCount(n - 1));
  if (tag == "prop6-a") {
    require_param(n >= 2, tag, "n >= 2");
    return detail::weighted_family(tag, n - 1, weights_of({{1, n}}), ExtendedCount(n));
  }
  if (tag == "prop6-d") {
    require_param(n >= 5, tag, "n >= 5");
    const int k = spec.k == 0 ? 2 : spec.k;
    require_param(k >= 2 && k <= n - 3, tag, "2 <= k <= n - 3");
    auto w = weights_of({{5, n - k - 2}, {3, k}, {1, 1}, {0, 1}});
    return detail::weighted_family(tag, 5LL * (n - 1) - 2LL * k - 9, w, ExtendedCount(n - 2));
  }
  if (tag == "prop7") return circular_game(n, spec.t, spec.sizes);
  if (tag == "prop8") return veto_set_game(n, spec.k, spec.t);
  if (tag == "theorem3a" || tag == "theorem3b") {
    const WeightedRep rep =
        tag == "theorem3a" ? padding_game(spec.w, spec.qbar, spec.r) : replica_game(spec.w, spec.qbar, spec.r);
    return {tag, game_from_weighted(rep), rep, {}, {}, relative_quota_value(rep), false};
  }
  std::string known;
  for (const auto& t : family_tags()) known += (known.empty() ? "" : ", ") + t;
  throw invalid_game_error("unknown family '" + tag + "' (known: " + known + ")");
}

// ---------------------------------------------------------------------------
// Maximum Nakamura numbers

enum class GameClass { simple, complete, weighted };

inline std::string to_string(GameClass c) {
  switch (c) {
    case GameClass::simple: return "S";
    case GameClass::complete: return "C";
    case GameClass::weighted: return "T";
  }
  return "?";
}

inline GameClass parse_game_class(const std::string& s) {
  if (s == "S" || s == "simple") return GameClass::simple;
  if (s == "C" || s == "complete") return GameClass::complete;
  if (s == "T" || s == "weighted") return GameClass::weighted;
  throw invalid_game_error("unknown game class '" + s + "' (expected S, C or T)");
}

enum class SearchMode { automatic, exhaustive, construction };

struct MaxNakamuraOptions {
  SearchMode mode = SearchMode::automatic;
  int complete_cap = 6;  // exhaustive limit for C and T
  int simple_cap = 5;    // exhaustive limit for S
};

struct MaxNakamuraResult {
  int n = 0;
  int t = 0;
  GameClass cls = GameClass::simple;
  bool exhaustive = false;
  bool found = false;      // some vetoer-free game (or construction) exists
  std::int64_t value = 0;  // the maximum, or a lower bound in construction mode
  std::optional<SimpleGame> witness;
  std::string witness_label;
  std::uint64_t games = 0;  // vetoer-free games examined
};

namespace detail {

inline void offer(MaxNakamuraResult& out, std::int64_t nu, const SimpleGame& g, const std::string& label) {
  if (!out.found || nu > out.value) {
    out.found = true;
    out.value = nu;
    out.witness = g;
    out.witness_label = label;
  }
}

inline std::string describe(const CompleteGame& g) {
  std::string s = "n=(";
  for (std::size_t j = 0; j < g.class_sizes().size(); ++j) s += (j ? "," : "") + std::to_string(g.class_sizes()[j]);
  s += ") M=";
  for (std::size_t i = 0; i < g.shift_min().size(); ++i) s += (i ? ";" : "") + vector_to_string(g.shift_min()[i]);
  return s;
}

}  // namespace detail

inline MaxNakamuraResult max_nakamura(int n, int t, GameClass cls, const MaxNakamuraOptions& options = {}) {
  if (n < 2) throw invalid_game_error("maximum Nakamura numbers need n >= 2");
  if (t < 1 || t > n) throw invalid_game_error("class count t must lie in [1, n]");
  const int cap = cls == GameClass::simple ? options.simple_cap : options.complete_cap;
  bool exhaustive = options.mode == SearchMode::exhaustive || (options.mode == SearchMode::automatic && n <= cap);
  if (exhaustive && n > cap)
    throw capacity_error("exhaustive search for class " + to_string(cls) + " limited to n <= " + std::to_string(cap));
  if (options.mode == SearchMode::construction) exhaustive = false;

  MaxNakamuraResult out;
  out.n = n;
  out.t = t;
  out.cls = cls;
  out.exhaustive = exhaustive;
  if (exhaustive && cls == GameClass::simple) {
    for_each_simple_game(n, [&](const SimpleGame& g) {
      if (static_cast<int>(desirability_classes(g).classes.size()) != t) return;
      const ExtendedCount nu = nakamura_exact(g).value;
      if (nu.is_infinite()) return;
      ++out.games;
      detail::offer(out, nu.value(), g, "exhaustive");
    });
    return out;
  }
  if (exhaustive) {
    for_each_complete_game(n, t, [&](const CompleteGame& g) {
      if (g.has_vetoers()) return;
      if (cls == GameClass::weighted && !is_weighted_complete(g)) return;
      ++out.games;
      const ExtendedCount nu = nakamura_complete(g).value;
      if (!out.found || nu.value() > out.value) detail::offer(out, nu.value(), expand_complete(g), detail::describe(g));
    });
    return out;
  }

  // Constructions: each candidate is kept only if it really has t classes.
  std::vector<FamilySpec> candidates;
  if (t == 1) candidates.push_back(family_spec("prop6-a", n));
  if (t == 2 && n >= 3) candidates.push_back(family_spec("prop6-b", n));
  if (t == 3 && n >= 4) candidates.push_back(family_spec("prop6-c", n, 2));
  if (t == 4 && n >= 5) candidates.push_back(family_spec("prop6-d", n, 2));
  if (cls == GameClass::simple) {
    if (t >= 6) candidates.push_back(family_spec("prop7", n, 0, t));
    for (int k = 3; 2 * k + 1 <= t && k < 20; ++k)
      if (t <= k + (1 << k)) candidates.push_back(family_spec("prop8", n, k, t));
  }
  for (const auto& spec : candidates) {
    const FamilyGame f = construct_family(spec);
    if (static_cast<int>(desirability_classes(f.game).classes.size()) != t) continue;
    const ExtendedCount nu = nakamura_exact(f.game).value;
    if (nu.is_infinite()) continue;
    ++out.games;
    detail::offer(out, nu.value(), f.game, spec.tag);
  }
  return out;
}

struct BandEntry {
  int n = 0;
  int t = 0;
  MaxNakamuraResult result;
  std::int64_t band_low = 0;   // n - t + 1
  std::int64_t band_high = 0;  // n - t + 2
  bool inside = false;
};

/// Maximum Nakamura numbers of weighted games against the band
/// [n - t + 1, n - t + 2]; reports only.
inline std::vector<BandEntry> band_probe(int n_min, int n_max, int t,
                                                       const MaxNakamuraOptions& options = {}) {
  std::vector<BandEntry> out;
  for (int n = std::max(n_min, std::max(2, t)); n <= n_max; ++n) {
    BandEntry e;
    e.n = n;
    e.t = t;
    e.result = max_nakamura(n, t, GameClass::weighted, options);
    e.band_low = n - t + 1;
    e.band_high = n - t + 2;
    e.inside = e.result.found && e.result.value >= e.band_low && e.result.value <= e.band_high;
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Games with Nakamura number at least n - 1

struct TopValueCensus {
  int n = 0;
  std::uint64_t games = 0;
  std::uint64_t nu_n = 0;
  std::uint64_t nu_n_minus_1 = 0;
  std::map<std::string, std::uint64_t> matched;  // family tag -> games
  std::vector<SimpleGame> unmatched;
};

/// The families a game with Nakamura number n or n - 1 must belong to.
inline std::vector<FamilyGame> top_value_families(int n) {
  std::vector<FamilyGame> out;
  if (n >= 2) out.push_back(construct_family(family_spec("prop6-a", n)));
  if (n >= 3) out.push_back(construct_family(family_spec("lemma9-1", n)));
  if (n == 3) out.push_back(construct_family(family_spec("lemma9-2", n)));
  if (n >= 4) out.push_back(construct_family(family_spec("lemma9-3", n)));
  if (n >= 3) out.push_back(construct_family(family_spec("lemma9-4", n)));
  for (int k = 2; n >= 4 && k <= n - 2; ++k) out.push_back(construct_family(family_spec("lemma9-5", n, k)));
  return out;
}

/// Classifies every simple game on n players with Nakamura number n or n - 1.
inline TopValueCensus top_value_census(int n) {
  TopValueCensus out;
  out.n = n;
  std::vector<std::pair<std::string, std::vector<std::uint64_t>>> forms;
  for (const auto& f : top_value_families(n)) forms.emplace_back(f.tag, canonical_form(f.game));
  for_each_simple_game(n, [&](const SimpleGame& g) {
    ++out.games;
    const ExtendedCount nu = nakamura_exact(g).value;
    if (nu.is_infinite() || nu.value() < n - 1) return;
    const bool top = nu.value() == n;
    (top ? out.nu_n : out.nu_n_minus_1) += 1;
    const auto form = canonical_form(g);
    for (const auto& [tag, f] : forms) {
      if (f != form) continue;
      if ((tag == "prop6-a") != top) break;
      ++out.matched[tag];
      return;
    }
    out.unmatched.push_back(g);
  });
  return out;
}

}  // namespace nakamura

#endif  // NAKAMURA_ENUMERATE_HPP
