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

#ifndef NAKAMURA_SET_COVER_HPP
#define NAKAMURA_SET_COVER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/lp.hpp"
#include "nakamura/rational.hpp"

namespace nakamura {

struct CoverResult {
  bool feasible = false;
  std::vector<std::size_t> chosen;  // indices into the candidate list
  std::uint64_t nodes = 0;

  std::size_t size() const { return chosen.size(); }
};

struct CoverOptions {
  /// A valid lower bound known to the caller; the search stops as soon as an
  /// incumbent reaches it.
  int lower_bound = 0;
};

namespace detail {

// lcm(1, ..., 64) fits into 128 bits, so the fractional bound
// sum_e 1 / k_e with k_e <= 64 is evaluated exactly.
inline unsigned __int128 lcm_1_to_64() {
  unsigned __int128 l = 1;
  for (unsigned k = 2; k <= 64; ++k) {
    unsigned __int128 a = l, b = k;
    while (b != 0) {
      auto t = a % b;
      a = b;
      b = t;
    }
    l = l / a * k;
  }
  return l;
}

class CoverSearch {
 public:
  CoverSearch(Coalition universe, std::span<const Coalition> sets, const CoverOptions& options)
      : universe_(universe), options_(options) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      Coalition s = sets[i] & universe;
      if (!s.empty()) {
        sets_.push_back(s);
        origin_.push_back(i);
      }
    }
    for (int e : universe.members()) {
      auto& list = containing_[e];
      for (std::size_t k = 0; k < sets_.size(); ++k)
        if (sets_[k].contains(e)) list.push_back(k);
      std::stable_sort(list.begin(), list.end(),
                       [&](std::size_t a, std::size_t b) { return sets_[a].size() > sets_[b].size(); });
    }
    denominator_ = lcm_1_to_64();
  }

  CoverResult run() {
    CoverResult out;
    Coalition reach;
    for (Coalition s : sets_) reach = reach | s;
    if (!universe_.subset_of(reach)) return out;
    out.feasible = true;
    best_ = greedy();
    if (static_cast<int>(best_.size()) > std::max(options_.lower_bound, 0)) {
      std::vector<std::size_t> path;
      search(universe_, path);
    }
    for (std::size_t k : best_) out.chosen.push_back(origin_[k]);
    out.nodes = nodes_;
    return out;
  }

 private:
  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> picked;
    Coalition open = universe_;
    while (!open.empty()) {
      std::size_t arg = 0;
      int gain = -1;
      for (std::size_t k = 0; k < sets_.size(); ++k) {
        const int g = (sets_[k] & open).size();
        if (g > gain) {
          gain = g;
          arg = k;
        }
      }
      picked.push_back(arg);
      open = open - sets_[arg];
    }
    return picked;
  }

  // ceil(sum over open elements e of 1 / max_{S containing e} |S cap open|).
  int lower_bound(Coalition open) const {
    std::array<int, 64> largest{};
    for (Coalition s : sets_) {
      Coalition part = s & open;
      const int size = part.size();
      if (size == 0) continue;
      for (std::uint64_t b = part.bits(); b; b &= b - 1) {
        int& slot = largest[std::countr_zero(b)];
        if (size > slot) slot = size;
      }
    }
    unsigned __int128 total = 0;
    for (std::uint64_t b = open.bits(); b; b &= b - 1) {
      const int k = largest[std::countr_zero(b)];
      if (k == 0) return 1 << 20;  // uncoverable
      total += denominator_ / static_cast<unsigned>(k);
    }
    return static_cast<int>((total + denominator_ - 1) / denominator_);
  }

  bool done() const { return static_cast<int>(best_.size()) <= options_.lower_bound; }

  void search(Coalition open, std::vector<std::size_t>& path) {
    ++nodes_;
    if (open.empty()) {
      if (path.size() < best_.size()) best_ = path;
      return;
    }
    if (path.size() + 1 >= best_.size()) return;
    if (static_cast<int>(path.size()) + lower_bound(open) >= static_cast<int>(best_.size())) return;
    // Branch on the open element contained in the fewest candidate sets.
    int pivot = -1;
    std::size_t fewest = 0;
    for (std::uint64_t b = open.bits(); b; b &= b - 1) {
      const int e = std::countr_zero(b);
      const std::size_t c = containing_[e].size();
      if (pivot < 0 || c < fewest) {
        pivot = e;
        fewest = c;
      }
    }
    for (std::size_t k : containing_[pivot]) {
      path.push_back(k);
      search(open - sets_[k], path);
      path.pop_back();
      if (done()) return;
    }
  }

  Coalition universe_;
  CoverOptions options_;
  std::vector<Coalition> sets_;
  std::vector<std::size_t> origin_;
  std::array<std::vector<std::size_t>, 64> containing_;
  std::vector<std::size_t> best_;
  unsigned __int128 denominator_ = 1;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Minimum number of `sets` whose union contains `universe` (branch and
/// bound; greedy incumbent, exact fractional-cover lower bound at each node).
inline CoverResult minimum_cover(Coalition universe, std::span<const Coalition> sets,
                                 const CoverOptions& options = {}) {
  if (universe.empty()) return CoverResult{true, {}, 0};
  return detail::CoverSearch(universe, sets, options).run();
}

/// Optimum of the covering LP  min sum x_S  s.t.  sum_{S ni e} x_S >= 1 for
/// every e in `universe`, x >= 0. Empty when some element lies in no set.
inline std::optional<Rational> fractional_cover(Coalition universe, std::span<const Coalition> sets,
                                                std::vector<Rational>* x = nullptr) {
  lp::Problem p;
  p.objective.assign(sets.size(), Rational(1));
  for (int e : universe.members()) {
    std::vector<Rational> row(sets.size(), Rational(0));
    for (std::size_t k = 0; k < sets.size(); ++k)
      if (sets[k].contains(e)) row[k] = 1;
    p.add_row(std::move(row), lp::Sense::ge, Rational(1));
  }
  const lp::Solution s = lp::minimize(p);
  if (s.status != lp::Status::optimal) return std::nullopt;
  if (x != nullptr) *x = s.x;
  return s.value;
}

}  // namespace nakamura

#endif  // NAKAMURA_SET_COVER_HPP
