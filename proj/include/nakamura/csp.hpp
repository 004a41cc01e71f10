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

#ifndef NAKAMURA_CSP_HPP
#define NAKAMURA_CSP_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nakamura/bounds.hpp"
#include "nakamura/coalition.hpp"
#include "nakamura/common.hpp"
#include "nakamura/nakamura.hpp"
#include "nakamura/rational.hpp"
#include "nakamura/set_cover.hpp"
#include "nakamura/simple_game.hpp"
#include "nakamura/weighted.hpp"

namespace nakamura {

/// One-dimensional cutting stock with unit demands: items of the given
/// lengths are cut from stock pieces of length `stock`.
struct CspInstance {
  Rational stock;
  std::vector<Rational> lengths;

  int items() const { return static_cast<int>(lengths.size()); }

  void validate() const {
    if (sgn(stock) <= 0) throw invalid_game_error("stock length must be positive");
    if (lengths.empty()) throw invalid_game_error("no items");
    if (items() > kMaxPlayers) throw capacity_error("more than " + std::to_string(kMaxPlayers) + " items");
    for (int i = 0; i < items(); ++i)
      if (sgn(lengths[i]) <= 0) throw invalid_game_error("item " + std::to_string(i + 1) + " has non-positive length");
  }
};

/// Columns over m items, stored as inclusion-maximal patterns. With
/// `subset_closed` every subset of a stored pattern is a column as well.
struct PatternSet {
  int m = 0;
  std::vector<Coalition> patterns;
  bool subset_closed = true;
};

inline constexpr int kMaxPatternItems = 24;

/// Maximal feasible patterns (item sets whose lengths fit into the stock).
inline PatternSet patterns_from_instance(const CspInstance& e, int max_items = kMaxPatternItems) {
  e.validate();
  const int m = e.items();
  if (m > max_items)
    throw capacity_error("pattern enumeration limited to " + std::to_string(max_items) + " items, got " +
                         std::to_string(m));
  for (int i = 0; i < m; ++i)
    if (e.lengths[i] > e.stock)
      throw invalid_game_error("item " + std::to_string(i + 1) + " of length " + to_string(e.lengths[i]) +
                               " exceeds the stock length " + to_string(e.stock));
  PatternSet out;
  out.m = m;
  // Depth-first over items; a leaf is maximal iff no excluded item fits.
  // A branch dies once an excluded item fits even after adding every
  // remaining item.
  std::vector<Rational> suffix(m + 1, Rational(0));
  for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + e.lengths[i];
  struct Frame {
    int next;
    Coalition chosen;
    Rational used;
    std::optional<Rational> min_excluded;
  };
  std::vector<Frame> stack{{0, Coalition{}, Rational(0), std::nullopt}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const Rational slack = e.stock - f.used;
    if (f.min_excluded && *f.min_excluded <= slack - suffix[f.next]) continue;
    if (f.next == m) {
      out.patterns.push_back(f.chosen);
      continue;
    }
    const Rational& l = e.lengths[f.next];
    Frame skip{f.next + 1, f.chosen, f.used, f.min_excluded};
    if (!skip.min_excluded || l < *skip.min_excluded) skip.min_excluded = l;
    stack.push_back(std::move(skip));
    if (l <= slack) stack.push_back({f.next + 1, f.chosen.with(f.next), f.used + l, f.min_excluded});
  }
  sort_coalitions(out.patterns);
  return out;
}

/// Columns are complements of minimal winning coalitions; enlarging a
/// column keeps a cover, so these maximal columns suffice.
inline PatternSet patterns_from_game(const SimpleGame& game) {
  PatternSet out;
  out.m = game.players();
  for (Coalition s : game.min_winning()) out.patterns.push_back(s.complement(game.players()));
  out.patterns = maximal_elements(std::move(out.patterns));
  return out;
}

/// Exact partition optimum. `partition` lists the chosen columns after
/// trimming, each item kept in the lowest-index chosen column.
struct ZbResult {
  bool feasible = false;
  std::int64_t value = 0;
  std::vector<Coalition> partition;

  ExtendedCount as_count() const { return feasible ? ExtendedCount(value) : ExtendedCount::infinite(); }
};

/// With subset-closed columns an optimal cover trims to a partition with the
/// same number of columns, so the covering optimum is the partition optimum.
inline ZbResult z_B(const PatternSet& p) {
  ZbResult out;
  const Coalition all = Coalition::all(p.m);
  if (!p.subset_closed) throw invalid_game_error("z_B needs a subset-closed pattern set");
  const CoverResult r = minimum_cover(all, p.patterns);
  if (!r.feasible) return out;
  out.feasible = true;
  std::vector<std::size_t> chosen = r.chosen;
  std::sort(chosen.begin(), chosen.end());
  Coalition covered;
  for (std::size_t k : chosen) {
    const Coalition part = p.patterns[k] - covered;
    covered = covered | part;
    out.partition.push_back(part);
  }
  out.value = static_cast<std::int64_t>(out.partition.size());
  return out;
}

/// Optimum of the relaxation x in [0, 1]^r; empty when infeasible.
inline std::optional<Rational> z_C(const PatternSet& p) {
  return fractional_cover(Coalition::all(p.m), p.patterns);
}

/// Minimum number of losing coalitions partitioning N, for strong games.
inline ZbResult z_B_losing_cover(const SimpleGame& game) {
  const auto losing = maximal_losing(game);
  if (!structure_flags(game, losing).strong) throw invalid_game_error("game is not strong");
  PatternSet p;
  p.m = game.players();
  p.patterns = losing;
  return z_B(p);
}

/// [sum l - L; l_1, ..., l_m]: S wins iff its complement is a feasible pattern.
inline WeightedRep game_from_instance(const CspInstance& e) {
  e.validate();
  const Rational total = sum(e.lengths);
  if (total <= e.stock)
    throw invalid_game_error("all items fit into one stock piece (sum of lengths " + to_string(total) +
                             " <= " + to_string(e.stock) + ")");
  return WeightedRep(total - e.stock, e.lengths);
}

struct RelaxationReport {
  ExtendedCount nu;
  std::optional<Rational> z_c;     // over the columns of the game
  ExtendedCount bound;             // floor(z_c) + 1
  bool applicable = false;         // vetoer-free
  bool inside = false;             // nu <= bound
  std::optional<std::int64_t> instance_z_b;  // for a cutting stock instance
  std::optional<Rational> instance_z_c;
  std::optional<bool> irup;   // z_B = ceil(z_C)
  std::optional<bool> mirup;  // z_B <= ceil(z_C) + 1
};

inline RelaxationReport relaxation_probe(const SimpleGame& game) {
  RelaxationReport out;
  out.nu = nakamura_exact(game).value;
  out.applicable = out.nu.is_finite();
  if (!out.applicable) return out;
  // Same optimum as z_C over the game's columns, solved over class vectors.
  out.z_c = fractional_cover_value(game);
  require_invariant(out.z_c.has_value(), "vetoer-free game with infeasible relaxation");
  out.bound = ExtendedCount(to_int64(floor(*out.z_c)) + 1);
  out.inside = out.nu <= out.bound;
  return out;
}

/// Probe of the game built from the instance, plus the rounding properties
/// of the instance itself.
inline RelaxationReport relaxation_probe(const CspInstance& e) {
  RelaxationReport out = relaxation_probe(game_from_weighted(game_from_instance(e)));
  const PatternSet p = patterns_from_instance(e);
  const ZbResult zb = z_B(p);
  const auto zc = z_C(p);
  require_invariant(zb.feasible && zc.has_value(), "instance with fitting items has no cutting plan");
  out.instance_z_b = zb.value;
  out.instance_z_c = *zc;
  const std::int64_t up = to_int64(ceil(*zc));
  out.irup = zb.value == up;
  out.mirup = zb.value <= up + 1;
  return out;
}

}  // namespace nakamura

#endif  // NAKAMURA_CSP_HPP
