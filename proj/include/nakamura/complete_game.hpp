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

#ifndef NAKAMURA_COMPLETE_GAME_HPP
#define NAKAMURA_COMPLETE_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/common.hpp"
#include "nakamura/simple_game.hpp"

namespace nakamura {

/// Number of members taken from each equivalence class, strongest class first.
using CoalitionVector = std::vector<int>;

/// Prefix sums (u_1, u_1 + u_2, ...).
inline std::vector<int> prefix_sums(const CoalitionVector& u) {
  std::vector<int> out(u.size());
  std::partial_sum(u.begin(), u.end(), out.begin());
  return out;
}

/// Shift order: u is dominated by v iff every prefix sum of u is at most the
/// matching prefix sum of v.
inline bool shift_leq(const CoalitionVector& u, const CoalitionVector& v) {
  int su = 0;
  int sv = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    su += u[j];
    sv += v[j];
    if (su > sv) return false;
  }
  return true;
}

inline bool componentwise_leq(const CoalitionVector& u, const CoalitionVector& v) {
  for (std::size_t j = 0; j < u.size(); ++j)
    if (u[j] > v[j]) return false;
  return true;
}

inline std::string vector_to_string(const CoalitionVector& v) {
  std::string s = "(";
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s + ")";
}

/// A violated condition of the parameterisation of complete simple games.
/// Conditions: 0 = shape, 1 = bounds, 2 = incomparability, 3 = class
/// separation, 4 = lexicographic order. Rows and columns are 1-based; 0 when
/// not applicable.
struct ConditionViolation {
  int condition = 0;
  int row = 0;
  int other_row = 0;
  int column = 0;
  std::string message;
};

/// Violations of the parameterisation conditions for (sizes, rows).
inline std::vector<ConditionViolation> check_complete_parameters(
    const std::vector<int>& sizes, const std::vector<CoalitionVector>& rows) {
  std::vector<ConditionViolation> out;
  const int t = static_cast<int>(sizes.size());
  if (t == 0) out.push_back({0, 0, 0, 0, "no equivalence classes"});
  if (rows.empty()) out.push_back({0, 0, 0, 0, "no shift-minimal winning vector"});
  for (int j = 0; j < t; ++j)
    if (sizes[j] <= 0)
      out.push_back({0, 0, 0, j + 1, "class size n_" + std::to_string(j + 1) + " must be positive"});
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (static_cast<int>(rows[i].size()) != t)
      out.push_back({0, static_cast<int>(i) + 1, 0, 0,
                     "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                         " entries, expected " + std::to_string(t)});
  if (!out.empty()) return out;

  const int r = static_cast<int>(rows.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < t; ++j)
      if (rows[i][j] < 0 || rows[i][j] > sizes[j])
        out.push_back({1, i + 1, 0, j + 1,
                       "m[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                           "] = " + std::to_string(rows[i][j]) + " outside [0, " +
                           std::to_string(sizes[j]) + "]"});
  for (int i = 0; i < r; ++i)
    for (int k = i + 1; k < r; ++k)
      if (shift_leq(rows[i], rows[k]) || shift_leq(rows[k], rows[i]))
        out.push_back({2, i + 1, k + 1, 0,
                       "rows " + std::to_string(i + 1) + " and " + std::to_string(k + 1) +
                           " are comparable in the shift order"});
  if (t == 1) {
    if (rows[0][0] <= 0) out.push_back({3, 1, 0, 1, "m[1][1] must be positive when t = 1"});
  } else {
    for (int j = 0; j + 1 < t; ++j) {
      bool separated = false;
      for (int i = 0; i < r; ++i)
        if (rows[i][j] > 0 && rows[i][j + 1] < sizes[j + 1]) separated = true;
      if (!separated)
        out.push_back({3, 0, 0, j + 1,
                       "no row has m[i][" + std::to_string(j + 1) + "] > 0 and m[i][" +
                           std::to_string(j + 2) + "] < n_" + std::to_string(j + 2)});
    }
  }
  for (int i = 0; i + 1 < r; ++i)
    if (!std::lexicographical_compare(rows[i + 1].begin(), rows[i + 1].end(), rows[i].begin(),
                                      rows[i].end()))
      out.push_back({4, i + 1, i + 2, 0,
                     "row " + std::to_string(i + 1) + " does not lexicographically exceed row " +
                         std::to_string(i + 2)});
  return out;
}

/// Raised by CompleteGame::make; carries the individual violations.
class complete_parameters_error : public invalid_game_error {
 public:
  explicit complete_parameters_error(std::vector<ConditionViolation> v)
      : invalid_game_error(summary(v)), violations_(std::move(v)) {}
  const std::vector<ConditionViolation>& violations() const { return violations_; }

 private:
  static std::string summary(const std::vector<ConditionViolation>& v) {
    std::string s = "invalid complete game parameters:";
    for (const auto& x : v) s += " [" + std::to_string(x.condition) + "] " + x.message + ";";
    return s;
  }
  std::vector<ConditionViolation> violations_;
};

/// A complete simple game given by class sizes and its matrix of
/// shift-minimal winning vectors (rows in decreasing lexicographic order).
class CompleteGame {
 public:
  static CompleteGame make(std::vector<int> sizes, std::vector<CoalitionVector> rows) {
    auto violations = check_complete_parameters(sizes, rows);
    if (!violations.empty()) throw complete_parameters_error(std::move(violations));
    return CompleteGame(std::move(sizes), std::move(rows));
  }

  const std::vector<int>& class_sizes() const { return sizes_; }
  const std::vector<CoalitionVector>& shift_min() const { return rows_; }
  int classes() const { return static_cast<int>(sizes_.size()); }
  int players() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

  /// Vetoers exist iff every row takes the whole strongest class.
  bool has_vetoers() const {
    return std::all_of(rows_.begin(), rows_.end(), [&](const auto& m) { return m[0] == sizes_[0]; });
  }

  bool operator==(const CompleteGame&) const = default;

 private:
  CompleteGame(std::vector<int> sizes, std::vector<CoalitionVector> rows)
      : sizes_(std::move(sizes)), rows_(std::move(rows)) {}

  std::vector<int> sizes_;
  std::vector<CoalitionVector> rows_;
};

inline CompleteGame complete_from_parameters(std::vector<int> sizes, std::vector<CoalitionVector> rows) {
  return CompleteGame::make(std::move(sizes), std::move(rows));
}

/// True iff some shift-minimal winning vector is shift-dominated by `c`.
inline bool vector_is_winning(const CompleteGame& g, const CoalitionVector& c) {
  if (static_cast<int>(c.size()) != g.classes())
    throw invalid_game_error("coalition vector has " + std::to_string(c.size()) + " entries, game has " +
                             std::to_string(g.classes()) + " classes");
  for (int j = 0; j < g.classes(); ++j)
    if (c[j] < 0 || c[j] > g.class_sizes()[j])
      throw invalid_game_error("coalition vector " + vector_to_string(c) + " out of bounds");
  return std::any_of(g.shift_min().begin(), g.shift_min().end(),
                     [&](const auto& m) { return shift_leq(m, c); });
}

inline constexpr std::uint64_t kMaxVectorBox = 20'000'000;

/// Calls fn on every vector 0 <= c <= sizes (last coordinate fastest).
template <typename Fn>
void for_each_vector(const std::vector<int>& sizes, Fn&& fn) {
  std::uint64_t box = 1;
  for (int s : sizes) {
    box *= static_cast<std::uint64_t>(s) + 1;
    if (box > kMaxVectorBox) throw capacity_error("coalition vector lattice too large");
  }
  CoalitionVector c(sizes.size(), 0);
  while (true) {
    fn(static_cast<const CoalitionVector&>(c));
    std::size_t j = sizes.size();
    while (j > 0 && c[j - 1] == sizes[j - 1]) c[--j] = 0;
    if (j == 0) return;
    ++c[j - 1];
  }
}

/// Componentwise-minimal winning vectors under a winning predicate on vectors,
/// in decreasing lexicographic order.
template <typename Winning>
std::vector<CoalitionVector> minimal_winning_vectors(const std::vector<int>& sizes, Winning&& winning) {
  std::vector<CoalitionVector> out;
  for_each_vector(sizes, [&](const CoalitionVector& c) {
    if (!winning(c)) return;
    CoalitionVector d = c;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      --d[j];
      const bool still = winning(d);
      ++d[j];
      if (still) return;
    }
    out.push_back(c);
  });
  std::reverse(out.begin(), out.end());
  return out;
}

/// Componentwise-maximal losing vectors, in decreasing lexicographic order.
template <typename Winning>
std::vector<CoalitionVector> maximal_losing_vectors(const std::vector<int>& sizes, Winning&& winning) {
  std::vector<CoalitionVector> out;
  for_each_vector(sizes, [&](const CoalitionVector& c) {
    if (winning(c)) return;
    CoalitionVector d = c;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == sizes[j]) continue;
      ++d[j];
      const bool wins = winning(d);
      --d[j];
      if (!wins) return;
    }
    out.push_back(c);
  });
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::vector<CoalitionVector> minimal_winning_vectors(const CompleteGame& g) {
  return minimal_winning_vectors(g.class_sizes(),
                                 [&](const CoalitionVector& c) { return vector_is_winning(g, c); });
}

inline std::vector<CoalitionVector> maximal_losing_vectors(const CompleteGame& g) {
  return maximal_losing_vectors(g.class_sizes(),
                                [&](const CoalitionVector& c) { return vector_is_winning(g, c); });
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

/// Calls fn on every k-subset of `pool` (as a coalition), in lexicographic order.
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int k, Fn&& fn) {
  const int n = static_cast<int>(pool.size());
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Coalition c;
    for (int i : idx) c = c.with(pool[i]);
    fn(c);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline constexpr std::uint64_t kMaxExpandedCoalitions = 5'000'000;

/// All coalitions whose vector is one of `vectors`, over the given classes.
inline std::vector<Coalition> expand_vectors(const std::vector<std::vector<int>>& class_members,
                                             const std::vector<CoalitionVector>& vectors) {
  std::uint64_t total = 0;
  for (const auto& v : vectors) {
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < v.size(); ++j)
      count *= binomial(static_cast<int>(class_members[j].size()), v[j]);
    total += count;
    if (total > kMaxExpandedCoalitions) throw capacity_error("expansion exceeds coalition limit");
  }
  std::vector<Coalition> out;
  out.reserve(total);
  for (const auto& v : vectors) {
    std::vector<Coalition> partial{Coalition{}};
    for (std::size_t j = 0; j < v.size(); ++j) {
      std::vector<Coalition> next;
      for_each_subset(class_members[j], v[j], [&](Coalition part) {
        for (Coalition c : partial) next.push_back(c | part);
      });
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

/// Consecutive player blocks: class j holds players n_1 + ... + n_{j-1} onward.
inline std::vector<std::vector<int>> consecutive_classes(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> out;
  int next = 0;
  for (int s : sizes) {
    out.emplace_back(s);
    std::iota(out.back().begin(), out.back().end(), next);
    next += s;
  }
  return out;
}

/// The simple game on n_1 + ... + n_t players (classes in consecutive blocks).
inline SimpleGame expand_complete(const CompleteGame& g) {
  SimpleGame::check_player_count(g.players());
  auto coalitions = expand_vectors(consecutive_classes(g.class_sizes()), minimal_winning_vectors(g));
  return SimpleGame::from_antichain_unchecked(g.players(), std::move(coalitions));
}

/// Coalition vector of s with respect to `class_of`.
inline CoalitionVector coalition_vector(Coalition s, const std::vector<int>& class_of, int classes) {
  CoalitionVector v(classes, 0);
  for (int p : s.members()) ++v[class_of[p]];
  return v;
}

/// Shift-minimal vectors among a set of winning vectors, decreasing lexicographic.
inline std::vector<CoalitionVector> shift_minimal(std::vector<CoalitionVector> winning_vectors) {
  std::sort(winning_vectors.begin(), winning_vectors.end(), std::greater<>());
  winning_vectors.erase(std::unique(winning_vectors.begin(), winning_vectors.end()), winning_vectors.end());
  std::vector<CoalitionVector> out;
  for (const auto& v : winning_vectors) {
    bool dominated = false;
    for (const auto& u : winning_vectors)
      if (u != v && shift_leq(u, v)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(v);
  }
  return out;
}

/// Parameters (class sizes, shift-minimal rows) of a complete simple game.
/// Throws invalid_game_error for incomplete games.
inline CompleteGame complete_from_simple(const SimpleGame& game) {
  const auto cls = desirability_classes(game);
  if (!cls.is_complete) throw invalid_game_error("game is not complete");
  const int t = static_cast<int>(cls.classes.size());
  const auto class_of = cls.class_of(game.players());
  std::vector<CoalitionVector> vectors;
  for (Coalition m : game.min_winning()) vectors.push_back(coalition_vector(m, class_of, t));
  return CompleteGame::make(cls.class_sizes(), shift_minimal(std::move(vectors)));
}

}  // namespace nakamura

#endif  // NAKAMURA_COMPLETE_GAME_HPP
