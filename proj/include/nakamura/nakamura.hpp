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

#ifndef NAKAMURA_NAKAMURA_HPP
#define NAKAMURA_NAKAMURA_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/common.hpp"
#include "nakamura/complete_game.hpp"
#include "nakamura/covering_ilp.hpp"
#include "nakamura/rational.hpp"
#include "nakamura/set_cover.hpp"
#include "nakamura/simple_game.hpp"

namespace nakamura {

/// Minimum number of winning coalitions with empty intersection, or infinite
/// when a vetoer exists. The witness lists that many winning coalitions.
struct NakamuraResult {
  ExtendedCount value = ExtendedCount::infinite();
  std::vector<Coalition> witness;
  std::uint64_t nodes = 0;  // search nodes, 0 for closed forms
};

struct NakamuraOptions {
  /// Solve the covering LP at the root when there are at most this many
  /// minimal winning coalitions (0 disables it).
  std::size_t lp_root_limit = 400;
  /// Solve over coalition vectors of the desirability classes when that at
  /// least halves the number of candidates. Players of one class are
  /// interchangeable, so the optimum is the same.
  bool use_classes = true;
};

/// True iff every coalition is winning and their intersection is empty.
inline bool verify_witness(const SimpleGame& game, const std::vector<Coalition>& coalitions) {
  if (coalitions.empty()) return false;
  Coalition inter = game.grand();
  for (Coalition c : coalitions) {
    if (!c.subset_of(game.grand()) || !game.is_winning(c)) return false;
    inter = inter & c;
  }
  return inter.empty();
}

/// [q; 1, ..., 1] on n players: ceil(n / (n - q)).
inline NakamuraResult nakamura_symmetric(int n, int qhat) {
  SimpleGame::check_player_count(n);
  if (n < 1 || qhat < 1 || qhat > n)
    throw invalid_game_error("symmetric quota " + std::to_string(qhat) + " outside [1, " + std::to_string(n) + "]");
  NakamuraResult out;
  if (qhat == n) return out;
  const int block = n - qhat;
  const int k = (n + block - 1) / block;
  const Coalition all = Coalition::all(n);
  for (int i = 0; i < k; ++i) {
    Coalition removed;
    for (int j = 0; j < block; ++j) removed = removed.with((i * block + j) % n);
    out.witness.push_back(all - removed);
  }
  out.value = ExtendedCount(k);
  return out;
}

/// Coalition vectors of the minimal winning coalitions over the
/// desirability classes, with the players of each class.
struct VectorIlpInstance {
  std::vector<int> class_sizes;
  std::vector<CoalitionVector> generators;
  std::vector<std::vector<int>> class_members;  // may be empty: consecutive blocks
};

inline VectorIlpInstance vector_instance(const SimpleGame& game) {
  const auto cls = desirability_classes(game);
  const int t = static_cast<int>(cls.classes.size());
  const auto class_of = cls.class_of(game.players());
  VectorIlpInstance inst;
  inst.class_sizes = cls.class_sizes();
  inst.class_members = cls.classes;
  for (Coalition m : game.min_winning()) inst.generators.push_back(coalition_vector(m, class_of, t));
  std::sort(inst.generators.begin(), inst.generators.end(), std::greater<>());
  inst.generators.erase(std::unique(inst.generators.begin(), inst.generators.end()), inst.generators.end());
  return inst;
}

namespace detail {

// Class j contributes players to k coalitions with the given counts. Each
// coalition omits the next n_j - count players of the class, cyclically, so
// every player is omitted at least once when the omissions add up to n_j.
inline std::vector<Coalition> realize_vectors(const std::vector<CoalitionVector>& vectors,
                                              const std::vector<std::vector<int>>& class_members) {
  std::vector<Coalition> out(vectors.size());
  for (std::size_t j = 0; j < class_members.size(); ++j) {
    const auto& members = class_members[j];
    const int size = static_cast<int>(members.size());
    int cursor = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const int omit = size - vectors[i][j];
      std::vector<bool> dropped(size, false);
      for (int k = 0; k < omit; ++k) dropped[(cursor + k) % size] = true;
      cursor = size == 0 ? 0 : (cursor + omit) % size;
      for (int k = 0; k < size; ++k)
        if (!dropped[k]) out[i] = out[i].with(members[k]);
    }
  }
  return out;
}

// Moves class memberships towards stronger classes (which keeps every
// vector winning in a complete game) until no class is used more than
// (k - 1) n_j times in total. Possible whenever the prefix-sum covering
// constraints hold.
inline void shift_into_classes(std::vector<CoalitionVector>& vectors, const std::vector<int>& sizes) {
  const std::size_t k = vectors.size();
  const std::size_t t = sizes.size();
  auto usage = [&](std::size_t j) {
    std::int64_t s = 0;
    for (const auto& v : vectors) s += v[j];
    return s;
  };
  for (std::size_t j = 0; j < t; ++j) {
    const std::int64_t cap = static_cast<std::int64_t>(k - 1) * sizes[j];
    std::int64_t excess = usage(j) - cap;
    for (std::size_t g = 0; g < j && excess > 0; ++g) {
      std::int64_t slack = static_cast<std::int64_t>(k - 1) * sizes[g] - usage(g);
      for (std::size_t i = 0; i < k && excess > 0 && slack > 0; ++i) {
        while (excess > 0 && slack > 0 && vectors[i][j] > 0 && vectors[i][g] < sizes[g]) {
          --vectors[i][j];
          ++vectors[i][g];
          --excess;
          --slack;
        }
      }
    }
    require_invariant(excess <= 0, "shift procedure could not balance class usage");
  }
}

inline std::vector<std::vector<int>> members_or_blocks(const VectorIlpInstance& inst) {
  return inst.class_members.empty() ? consecutive_classes(inst.class_sizes) : inst.class_members;
}

inline int total_players(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  return n;
}

}  // namespace detail

/// Covering ILP over minimal winning vectors: min sum x_v subject to
/// sum_v (n_j - v_j) x_v >= n_j for every class j.
inline NakamuraResult nakamura_by_vectors(const VectorIlpInstance& inst) {
  const std::size_t t = inst.class_sizes.size();
  std::vector<std::vector<std::int64_t>> coeff;
  for (const auto& v : inst.generators) {
    if (v.size() != t) throw invalid_game_error("generator " + vector_to_string(v) + " has wrong dimension");
    std::vector<std::int64_t> row(t);
    for (std::size_t j = 0; j < t; ++j) {
      if (v[j] < 0 || v[j] > inst.class_sizes[j])
        throw invalid_game_error("generator " + vector_to_string(v) + " out of class bounds");
      row[j] = inst.class_sizes[j] - v[j];
    }
    coeff.push_back(std::move(row));
  }
  const std::vector<std::int64_t> demand(inst.class_sizes.begin(), inst.class_sizes.end());
  const CoveringIlpResult r = solve_covering_ilp(coeff, demand);
  if (!r.feasible) throw invalid_game_error("game has a vetoer; the vector formulation does not apply");
  NakamuraResult out;
  out.value = ExtendedCount(r.value);
  if (detail::total_players(inst.class_sizes) <= kMaxPlayers) {
    std::vector<CoalitionVector> chosen;
    for (std::size_t v = 0; v < inst.generators.size(); ++v)
      for (std::int64_t c = 0; c < r.multiplicity[v]; ++c) chosen.push_back(inst.generators[v]);
    out.witness = detail::realize_vectors(chosen, detail::members_or_blocks(inst));
  }
  return out;
}

inline NakamuraResult nakamura_exact(const SimpleGame& game, const NakamuraOptions& options = {}) {
  NakamuraResult out;
  if (!classify_players(game).vetoers.empty()) return out;
  const int n = game.players();
  if (options.use_classes && game.min_winning().size() >= 8) {
    const VectorIlpInstance inst = vector_instance(game);
    if (2 * inst.generators.size() <= game.min_winning().size()) {
      NakamuraResult via = nakamura_by_vectors(inst);
      sort_coalitions(via.witness);
      return via;
    }
  }
  std::vector<Coalition> complements;
  complements.reserve(game.min_winning().size());
  for (Coalition m : game.min_winning()) complements.push_back(m.complement(n));

  CoverOptions cover;
  if (options.lp_root_limit > 0 && complements.size() <= options.lp_root_limit) {
    if (auto z = fractional_cover(game.grand(), complements)) cover.lower_bound = to_int64(ceil(*z));
  }
  const CoverResult r = minimum_cover(game.grand(), complements, cover);
  require_invariant(r.feasible, "vetoer-free game has no cover by complements");
  for (std::size_t k : r.chosen) out.witness.push_back(game.min_winning()[k]);
  sort_coalitions(out.witness);
  out.value = ExtendedCount(static_cast<std::int64_t>(out.witness.size()));
  out.nodes = r.nodes;
  return out;
}

/// Closed form for a single shift-minimal row m: infinite if m_1 = n_1,
/// otherwise the largest ceil(o_i / (o_i - p_i)) over prefix sums o of the
/// class sizes and p of m.
inline ExtendedCount nakamura_r1(const std::vector<int>& sizes, const CoalitionVector& row) {
  if (row.front() == sizes.front()) return ExtendedCount::infinite();
  std::int64_t best = 0, o = 0, p = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    o += sizes[i];
    p += row[i];
    best = std::max(best, (o + (o - p) - 1) / (o - p));
  }
  return ExtendedCount(best);
}

/// Nakamura number of a complete game from its parameters. The players of
/// the witness are numbered in consecutive class blocks.
inline NakamuraResult nakamura_complete(const CompleteGame& g) {
  NakamuraResult out;
  if (g.has_vetoers()) return out;
  const auto& sizes = g.class_sizes();
  const auto& rows = g.shift_min();
  const auto o = prefix_sums(sizes);
  std::vector<CoalitionVector> chosen;
  if (rows.size() == 1) {
    out.value = nakamura_r1(sizes, rows.front());
    chosen.assign(out.value.value(), rows.front());
  } else {
    std::vector<std::vector<std::int64_t>> coeff;
    for (const auto& m : rows) {
      const auto p = prefix_sums(m);
      std::vector<std::int64_t> row(o.size());
      for (std::size_t j = 0; j < o.size(); ++j) row[j] = o[j] - p[j];
      coeff.push_back(std::move(row));
    }
    const CoveringIlpResult r = solve_covering_ilp(coeff, std::vector<std::int64_t>(o.begin(), o.end()));
    require_invariant(r.feasible, "vetoer-free complete game has an infeasible covering ILP");
    out.value = ExtendedCount(r.value);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::int64_t c = 0; c < r.multiplicity[i]; ++c) chosen.push_back(rows[i]);
  }
  if (g.players() <= kMaxPlayers) {
    detail::shift_into_classes(chosen, sizes);
    out.witness = detail::realize_vectors(chosen, consecutive_classes(sizes));
  }
  return out;
}

}  // namespace nakamura

#endif  // NAKAMURA_NAKAMURA_HPP
