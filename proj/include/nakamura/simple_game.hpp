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

#ifndef NAKAMURA_SIMPLE_GAME_HPP
#define NAKAMURA_SIMPLE_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/common.hpp"

namespace nakamura {

/// A simple game given by its antichain of minimal winning coalitions.
///
/// Invariants: 1 <= n <= 64, the antichain is nonempty, does not contain the
/// empty coalition and only uses the low n bits. The list is kept sorted in
/// member-list order, which makes equality structural.
class SimpleGame {
 public:
  /// Validates and sorts. Throws invalid_game_error or capacity_error.
  SimpleGame(int n, std::vector<Coalition> min_winning)
      : n_(n), min_winning_(std::move(min_winning)) {
    check_player_count(n_);
    if (min_winning_.empty())
      throw invalid_game_error("a simple game needs at least one winning coalition");
    const Coalition grand = Coalition::all(n_);
    for (Coalition c : min_winning_) {
      if (c.empty()) throw invalid_game_error("the empty coalition must be losing");
      if (!c.subset_of(grand))
        throw invalid_game_error("coalition " + c.to_string() + " uses players beyond n = " +
                                 std::to_string(n_));
    }
    sort_coalitions(min_winning_);
    if (std::adjacent_find(min_winning_.begin(), min_winning_.end()) != min_winning_.end())
      throw invalid_game_error("duplicate minimal winning coalition");
    auto by_size = min_winning_;
    std::sort(by_size.begin(), by_size.end(),
              [](Coalition a, Coalition b) { return a.size() < b.size(); });
    for (std::size_t i = 0; i < by_size.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (by_size[j].size() < by_size[i].size() && by_size[j].subset_of(by_size[i]))
          throw invalid_game_error("not an antichain: " + by_size[j].to_string() + " is contained in " +
                                   by_size[i].to_string());
  }

  /// The game whose winning coalitions are the supersets of `generators`.
  static SimpleGame from_generators(int n, std::vector<Coalition> generators) {
    check_player_count(n);
    return SimpleGame(trusted, n, minimal_elements(std::move(generators)));
  }

  /// Skips the antichain check; the caller guarantees the invariants.
  static SimpleGame from_antichain_unchecked(int n, std::vector<Coalition> antichain) {
    check_player_count(n);
    sort_coalitions(antichain);
    return SimpleGame(trusted, n, std::move(antichain));
  }

  int players() const { return n_; }
  const std::vector<Coalition>& min_winning() const { return min_winning_; }
  Coalition grand() const { return Coalition::all(n_); }

  bool is_winning(Coalition s) const {
    for (Coalition m : min_winning_)
      if (m.subset_of(s)) return true;
    return false;
  }

  bool operator==(const SimpleGame&) const = default;

  static void check_player_count(int n) {
    if (n > kMaxPlayers)
      throw capacity_error("player count " + std::to_string(n) + " exceeds the limit of " +
                           std::to_string(kMaxPlayers));
    if (n < 1) throw invalid_game_error("a game needs at least one player");
  }

 private:
  struct trusted_t {};
  static constexpr trusted_t trusted{};
  SimpleGame(trusted_t, int n, std::vector<Coalition> antichain)
      : n_(n), min_winning_(std::move(antichain)) {
    if (min_winning_.empty() || min_winning_.front().empty())
      throw invalid_game_error("degenerate game: empty coalition winning or no winning coalition");
  }

  int n_;
  std::vector<Coalition> min_winning_;
};

/// Membership test for the winning coalitions. Up to kTablePlayers players the
/// whole up-set is materialised as a bit table (2^n bits).
class WinningTable {
 public:
  static constexpr int kTablePlayers = 26;

  explicit WinningTable(const SimpleGame& game) : game_(&game), n_(game.players()) {
    if (n_ > kTablePlayers) return;
    const std::size_t size = std::size_t{1} << n_;
    words_.assign(std::max<std::size_t>(1, size / 64), 0);
    for (Coalition m : game.min_winning()) set(m.bits());
    // Up-closure: OR every mask into its supersets one bit at a time.
    for (int i = 0; i < n_; ++i) {
      if (i < 6) {
        const int shift = 1 << i;
        const std::uint64_t low = kLowMasks[i];
        for (auto& w : words_) w |= (w & low) << shift;
      } else {
        const std::size_t stride = std::size_t{1} << (i - 6);
        for (std::size_t w = 0; w < words_.size(); ++w)
          if (w & stride) words_[w] |= words_[w ^ stride];
      }
    }
    if (size < 64) words_[0] &= (std::uint64_t{1} << size) - 1;
  }

  bool tabulated() const { return !words_.empty(); }

  bool operator()(Coalition s) const {
    if (words_.empty()) return game_->is_winning(s);
    const std::uint64_t b = s.bits();
    return (words_[b >> 6] >> (b & 63)) & 1U;
  }

  /// Maximal losing coalitions by a word-parallel sweep; tabulated games only.
  std::vector<Coalition> maximal_losing() const {
    std::vector<Coalition> out;
    const std::size_t size = std::size_t{1} << n_;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t candidate = ~words_[w];
      for (int i = 0; i < n_ && candidate; ++i) {
        std::uint64_t up;
        if (i < 6) {
          const int shift = 1 << i;
          const std::uint64_t low = kLowMasks[i];
          up = ((words_[w] >> shift) & low) | ~low;
        } else {
          const std::size_t stride = std::size_t{1} << (i - 6);
          up = (w & stride) ? ~std::uint64_t{0} : words_[w | stride];
        }
        candidate &= up;
      }
      if (size < 64) candidate &= (std::uint64_t{1} << size) - 1;
      for (; candidate; candidate &= candidate - 1)
        out.emplace_back((w << 6) | static_cast<std::uint64_t>(std::countr_zero(candidate)));
    }
    return out;
  }

 private:
  // Bit positions whose index has bit i clear, i = 0..5.
  static constexpr std::uint64_t kLowMasks[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

  void set(std::uint64_t b) { words_[b >> 6] |= std::uint64_t{1} << (b & 63); }

  const SimpleGame* game_;
  int n_;
  std::vector<std::uint64_t> words_;
};

namespace detail {

// Minimal transversals of a hypergraph (Berge's sequential algorithm).
inline std::vector<Coalition> minimal_transversals(const std::vector<Coalition>& edges) {
  std::vector<Coalition> current{Coalition{}};
  for (Coalition e : edges) {
    std::vector<Coalition> next;
    std::vector<Coalition> hitting;
    for (Coalition t : current) {
      if (t.intersects(e)) hitting.push_back(t);
    }
    next = hitting;
    for (Coalition t : current) {
      if (t.intersects(e)) continue;
      for (int v : e.members()) {
        Coalition cand = t.with(v);
        bool dominated = false;
        for (Coalition h : hitting) {
          if (h.subset_of(cand)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) next.push_back(cand);
      }
    }
    current = minimal_elements(std::move(next));
  }
  return current;
}

}  // namespace detail

/// Inclusion-maximal losing coalitions, sorted in member-list order.
inline std::vector<Coalition> maximal_losing(const SimpleGame& game) {
  std::vector<Coalition> out;
  if (game.players() <= WinningTable::kTablePlayers) {
    out = WinningTable(game).maximal_losing();
  } else {
    // T is maximal losing iff its complement is a minimal transversal of W^m.
    const int n = game.players();
    for (Coalition t : detail::minimal_transversals(game.min_winning()))
      out.push_back(t.complement(n));
  }
  sort_coalitions(out);
  return out;
}

/// Vetoers, null players, passers and a possible dictator.
struct PlayerClassification {
  Coalition vetoers;
  Coalition nulls;
  Coalition passers;
  std::optional<int> dictator;  // 0-based
};

inline PlayerClassification classify_players(const SimpleGame& game) {
  PlayerClassification out;
  Coalition inter = game.grand();
  Coalition uni;
  for (Coalition m : game.min_winning()) {
    inter = inter & m;
    uni = uni | m;
    if (m.size() == 1) out.passers = out.passers | m;
  }
  out.vetoers = inter;
  out.nulls = game.grand() - uni;
  if (game.min_winning().size() == 1 && game.min_winning().front().size() == 1)
    out.dictator = game.min_winning().front().first();
  return out;
}

/// Equivalence classes of the desirability relation.
struct DesirabilityClasses {
  std::vector<std::vector<int>> classes;  // 0-based players, strongest class first
  bool is_complete = false;

  std::vector<int> class_sizes() const {
    std::vector<int> s;
    for (const auto& c : classes) s.push_back(static_cast<int>(c.size()));
    return s;
  }
  /// class_of[player] = index into `classes`.
  std::vector<int> class_of(int n) const {
    std::vector<int> out(n, -1);
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (int p : classes[k]) out[p] = static_cast<int>(k);
    return out;
  }
};

/// at_least[i][j] is true iff i is at least as desirable as j. Only minimal
/// winning coalitions need to be exchanged: if S wins through a minimal
/// winning S' with j in S', then S' - j + i is contained in S - j + i.
inline std::vector<std::vector<bool>> desirability_relation(const SimpleGame& game) {
  const int n = game.players();
  const WinningTable winning(game);
  std::vector<std::vector<bool>> at_least(n, std::vector<bool>(n, true));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Coalition m : game.min_winning()) {
        if (m.contains(j) && !m.contains(i) && !winning(m.without(j).with(i))) {
          at_least[i][j] = false;
          break;
        }
      }
    }
  }
  return at_least;
}

/// Classes ordered by decreasing desirability. For incomplete games, classes
/// are ordered by the number of players they dominate, then by lowest member.
inline DesirabilityClasses desirability_classes(const SimpleGame& game) {
  const int n = game.players();
  const auto at_least = desirability_relation(game);
  DesirabilityClasses out;
  out.is_complete = true;
  std::vector<int> class_of(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (!at_least[i][j] && !at_least[j][i]) out.is_complete = false;
    if (class_of[i] >= 0) continue;
    class_of[i] = static_cast<int>(out.classes.size());
    out.classes.push_back({i});
    for (int j = i + 1; j < n; ++j) {
      if (class_of[j] < 0 && at_least[i][j] && at_least[j][i]) {
        class_of[j] = class_of[i];
        out.classes.back().push_back(j);
      }
    }
  }
  auto dominated = [&](const std::vector<int>& cls) {
    int count = 0;
    for (int j = 0; j < n; ++j) count += at_least[cls.front()][j] ? 1 : 0;
    return count;
  };
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [&](const auto& a, const auto& b) { return dominated(a) > dominated(b); });
  return out;
}

struct StructureFlags {
  bool proper = false;
  bool strong = false;
  bool constant_sum = false;
};

/// Proper: the complement of every winning coalition loses. It suffices to
/// test minimal winning coalitions, because a larger winning coalition has a
/// smaller complement. Strong: the complement of every losing coalition
/// wins; it suffices to test maximal losing coalitions by the dual argument.
inline StructureFlags structure_flags(const SimpleGame& game,
                                      const std::vector<Coalition>& max_losing) {
  const int n = game.players();
  const WinningTable winning(game);
  StructureFlags f;
  f.proper = std::none_of(game.min_winning().begin(), game.min_winning().end(),
                          [&](Coalition s) { return winning(s.complement(n)); });
  f.strong = std::all_of(max_losing.begin(), max_losing.end(),
                         [&](Coalition t) { return winning(t.complement(n)); });
  f.constant_sum = f.proper && f.strong;
  return f;
}

inline StructureFlags structure_flags(const SimpleGame& game) {
  return structure_flags(game, maximal_losing(game));
}

/// Winning coalitions are those winning in both games.
inline SimpleGame intersect_games(const SimpleGame& a, const SimpleGame& b) {
  if (a.players() != b.players()) throw invalid_game_error("player counts differ");
  std::vector<Coalition> gens;
  for (Coalition x : a.min_winning())
    for (Coalition y : b.min_winning()) gens.push_back(x | y);
  return SimpleGame::from_generators(a.players(), std::move(gens));
}

/// Winning coalitions are those winning in either game.
inline SimpleGame unite_games(const SimpleGame& a, const SimpleGame& b) {
  if (a.players() != b.players()) throw invalid_game_error("player counts differ");
  std::vector<Coalition> gens = a.min_winning();
  gens.insert(gens.end(), b.min_winning().begin(), b.min_winning().end());
  return SimpleGame::from_generators(a.players(), std::move(gens));
}

/// Removes a null player and renumbers the remaining players.
inline SimpleGame remove_null_player(const SimpleGame& game, int player) {
  if (classify_players(game).nulls.contains(player) == false)
    throw invalid_game_error("player " + std::to_string(player + 1) + " is not a null player");
  if (game.players() == 1) throw invalid_game_error("cannot remove the only player");
  std::vector<Coalition> out;
  const std::uint64_t low = (std::uint64_t{1} << player) - 1;
  for (Coalition m : game.min_winning())
    out.emplace_back((m.bits() & low) | ((m.bits() >> 1) & ~low));
  return SimpleGame::from_antichain_unchecked(game.players() - 1, std::move(out));
}

/// Applies the player relabelling i -> perm[i].
inline SimpleGame permute_players(const SimpleGame& game, const std::vector<int>& perm) {
  std::vector<Coalition> out;
  for (Coalition m : game.min_winning()) {
    Coalition c;
    for (int p : m.members()) c = c.with(perm[p]);
    out.push_back(c);
  }
  return SimpleGame::from_antichain_unchecked(game.players(), std::move(out));
}

}  // namespace nakamura

#endif  // NAKAMURA_SIMPLE_GAME_HPP
