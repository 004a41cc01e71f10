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

#ifndef NAKAMURA_COALITION_HPP
#define NAKAMURA_COALITION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "nakamura/common.hpp"

namespace nakamura {

/// A set of players, stored as a 64-bit mask. Players are 0-based here and
/// 1-based in every textual representation.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t bits) : bits_(bits) {}

  /// Builds a coalition from 0-based player indices.
  static Coalition of(std::initializer_list<int> players) {
    Coalition c;
    for (int p : players) c = c.with(p);
    return c;
  }
  static Coalition of(const std::vector<int>& players) {
    Coalition c;
    for (int p : players) c = c.with(p);
    return c;
  }
  static constexpr Coalition single(int player) {
    return Coalition(std::uint64_t{1} << player);
  }
  /// The grand coalition {0, ..., n-1}.
  static constexpr Coalition all(int n) {
    return Coalition(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int player) const { return (bits_ >> player) & 1U; }
  constexpr Coalition with(int player) const {
    return Coalition(bits_ | (std::uint64_t{1} << player));
  }
  constexpr Coalition without(int player) const {
    return Coalition(bits_ & ~(std::uint64_t{1} << player));
  }
  constexpr bool subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Coalition other) const { return (bits_ & other.bits_) != 0; }
  /// Complement relative to the grand coalition of an n-player game.
  constexpr Coalition complement(int n) const { return Coalition(~bits_ & all(n).bits_); }
  /// Lowest member; undefined on the empty coalition.
  constexpr int first() const { return std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// "{1,2,5}" with 1-based players.
  std::string to_string() const {
    std::string s = "{";
    bool first_member = true;
    for (int p : members()) {
      if (!first_member) s += ',';
      s += std::to_string(p + 1);
      first_member = false;
    }
    return s + "}";
  }

  constexpr Coalition operator&(Coalition o) const { return Coalition(bits_ & o.bits_); }
  constexpr Coalition operator|(Coalition o) const { return Coalition(bits_ | o.bits_); }
  constexpr Coalition operator-(Coalition o) const { return Coalition(bits_ & ~o.bits_); }
  constexpr bool operator==(const Coalition&) const = default;

  friend std::ostream& operator<<(std::ostream& os, Coalition c) { return os << c.to_string(); }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted member lists: {1,2} < {1,2,3} < {1,3}.
struct MemberListLess {
  constexpr bool operator()(Coalition a, Coalition b) const {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int d = std::countr_zero(diff);
    const std::uint64_t above = d >= 63 ? 0 : (~std::uint64_t{0} << (d + 1));
    if (a.contains(d)) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
  }
};

inline void sort_coalitions(std::vector<Coalition>& v) {
  std::sort(v.begin(), v.end(), MemberListLess{});
}

/// Inclusion-minimal members of `family`, sorted, duplicates removed.
inline std::vector<Coalition> minimal_elements(std::vector<Coalition> family) {
  std::sort(family.begin(), family.end(), [](Coalition a, Coalition b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Coalition> kept;
  for (Coalition c : family) {
    bool dominated = false;
    for (Coalition k : kept) {
      if (k.subset_of(c)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(c);
  }
  sort_coalitions(kept);
  return kept;
}

/// Inclusion-maximal members of `family`, sorted, duplicates removed.
inline std::vector<Coalition> maximal_elements(std::vector<Coalition> family) {
  std::sort(family.begin(), family.end(), [](Coalition a, Coalition b) {
    return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Coalition> kept;
  for (Coalition c : family) {
    bool dominated = false;
    for (Coalition k : kept) {
      if (c.subset_of(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(c);
  }
  sort_coalitions(kept);
  return kept;
}

}  // namespace nakamura

#endif  // NAKAMURA_COALITION_HPP
