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

#ifndef NAKAMURA_WEIGHTED_HPP
#define NAKAMURA_WEIGHTED_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/rational.hpp"
#include "nakamura/simple_game.hpp"

namespace nakamura {

/// A weighted representation [q; w_1, ..., w_n] with exact rational entries.
///
/// `integral_input` records whether the representation was given with an
/// integral quota and integral weights.
struct WeightedRep {
  Rational quota;
  std::vector<Rational> weights;

  WeightedRep() = default;
  WeightedRep(Rational q, std::vector<Rational> w) : quota(std::move(q)), weights(std::move(w)) {
    validate();
  }
  WeightedRep(std::int64_t q, const std::vector<std::int64_t>& w) : quota(static_cast<long>(q)) {
    for (auto x : w) weights.emplace_back(static_cast<long>(x));
    validate();
  }

  int players() const { return static_cast<int>(weights.size()); }
  Rational total() const { return sum(weights); }
  bool integral_input() const {
    return is_integral(quota) &&
           std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return is_integral(w); });
  }

  /// Largest weight.
  Rational omega() const { return *std::max_element(weights.begin(), weights.end()); }

  Rational weight_of(Coalition s) const {
    Rational total_weight(0);
    for (int p : s.members()) total_weight += weights[p];
    return total_weight;
  }
  bool is_winning(Coalition s) const { return weight_of(s) >= quota; }

  /// Integral representation obtained by multiplying with the least common
  /// multiple of all denominators (the identity on integral input).
  WeightedRep integral() const {
    std::vector<Rational> all = weights;
    all.push_back(quota);
    const Rational factor(denominator_lcm(all));
    WeightedRep out;
    out.quota = quota * factor;
    for (const auto& w : weights) out.weights.push_back(w * factor);
    return out;
  }

  /// Normalised representation with w(N) = 1.
  WeightedRep normalized() const {
    const Rational t = total();
    WeightedRep out;
    out.quota = quota / t;
    for (const auto& w : weights) out.weights.push_back(w / t);
    return out;
  }

  /// Players whose removal from N leaves a losing coalition.
  Coalition vetoers() const {
    const Rational t = total();
    Coalition v;
    for (int i = 0; i < players(); ++i)
      if (t - weights[i] < quota) v = v.with(i);
    return v;
  }

  void validate() const {
    SimpleGame::check_player_count(players());
    if (sgn(quota) <= 0) throw invalid_game_error("quota must be positive, got " + to_string(quota));
    for (int i = 0; i < players(); ++i)
      if (sgn(weights[i]) < 0)
        throw invalid_game_error("weight of player " + std::to_string(i + 1) + " is negative");
    if (total() < quota)
      throw invalid_game_error("grand coalition loses: w(N) = " + to_string(total()) +
                               " < q = " + to_string(quota));
  }

  bool operator==(const WeightedRep&) const = default;
};

namespace detail {

// Depth-first search over players sorted by decreasing weight. A coalition is
// extended only while it is losing; the first player that makes it winning is
// its lightest member, so the coalition is minimal winning.
template <typename Weight>
void collect_min_winning(const std::vector<Weight>& w, const std::vector<int>& order,
                         const std::vector<Weight>& suffix, const Weight& quota, std::size_t pos,
                         Coalition current, const Weight& current_weight, std::vector<Coalition>& out) {
  for (std::size_t k = pos; k < order.size(); ++k) {
    if (current_weight + suffix[k] < quota) return;
    const int p = order[k];
    if (w[p] == 0) return;
    Weight next = current_weight + w[p];
    if (next >= quota)
      out.push_back(current.with(p));
    else
      collect_min_winning(w, order, suffix, quota, k + 1, current.with(p), next, out);
  }
}

// Maximal losing coalitions. Excluded players are visited in decreasing
// weight, so the last excluded player is the lightest non-member; the
// coalition is maximal iff adding that player makes it win. Zero-weight
// players belong to every maximal losing coalition.
template <typename Weight>
void collect_max_losing(const std::vector<Weight>& w, const std::vector<int>& order,
                        const std::vector<Weight>& suffix, const Weight& quota, std::size_t pos,
                        Coalition current, const Weight& current_weight, const Weight* last_excluded,
                        std::vector<Coalition>& out) {
  if (pos == order.size()) {
    if (last_excluded != nullptr && current_weight + *last_excluded >= quota) out.push_back(current);
    return;
  }
  const int p = order[pos];
  if (current_weight + w[p] < quota)
    collect_max_losing(w, order, suffix, quota, pos + 1, current.with(p), Weight(current_weight + w[p]),
                       last_excluded, out);
  // Excluding p requires the final weight to reach quota - w[p].
  if (w[p] != 0 && current_weight + suffix[pos + 1] + w[p] >= quota)
    collect_max_losing(w, order, suffix, quota, pos + 1, current, current_weight, &w[p], out);
}

template <typename Weight>
struct SortedWeights {
  std::vector<Weight> w;
  Weight quota;
  std::vector<int> order;
  std::vector<Weight> suffix;

  SortedWeights(std::vector<Weight> weights, Weight q) : w(std::move(weights)), quota(std::move(q)) {
    order.resize(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
    suffix.assign(w.size() + 1, Weight(0));
    for (std::size_t k = w.size(); k-- > 0;) suffix[k] = suffix[k + 1] + w[order[k]];
  }
};

template <typename Fn>
auto with_integral_weights(const WeightedRep& rep, Fn&& fn) {
  const WeightedRep integral = rep.integral();
  bool fits = integral.quota.get_num().fits_slong_p();
  Integer total(0);
  for (const auto& w : integral.weights) {
    fits = fits && w.get_num().fits_slong_p();
    total += w.get_num();
  }
  fits = fits && total < Integer(1) << 62;
  if (fits) {
    std::vector<std::int64_t> w;
    for (const auto& x : integral.weights) w.push_back(x.get_num().get_si());
    return fn(SortedWeights<std::int64_t>(std::move(w), integral.quota.get_num().get_si()));
  }
  std::vector<Integer> w;
  for (const auto& x : integral.weights) w.push_back(x.get_num());
  return fn(SortedWeights<Integer>(std::move(w), integral.quota.get_num()));
}

}  // namespace detail

/// The simple game [q; w]: minimal coalitions whose weight reaches the quota.
inline SimpleGame game_from_weighted(const WeightedRep& rep) {
  rep.validate();
  std::vector<Coalition> out = detail::with_integral_weights(rep, [](const auto& s) {
    std::vector<Coalition> found;
    using W = std::decay_t<decltype(s.quota)>;
    detail::collect_min_winning(s.w, s.order, s.suffix, s.quota, 0, Coalition{}, W(0), found);
    return found;
  });
  return SimpleGame::from_antichain_unchecked(rep.players(), std::move(out));
}

/// Maximal losing coalitions of [q; w], sorted.
inline std::vector<Coalition> maximal_losing(const WeightedRep& rep) {
  rep.validate();
  std::vector<Coalition> out = detail::with_integral_weights(rep, [](const auto& s) {
    std::vector<Coalition> found;
    using W = std::decay_t<decltype(s.quota)>;
    detail::collect_max_losing(s.w, s.order, s.suffix, s.quota, 0, Coalition{}, W(0),
                               static_cast<const W*>(nullptr), found);
    return found;
  });
  sort_coalitions(out);
  return out;
}

}  // namespace nakamura

#endif  // NAKAMURA_WEIGHTED_HPP
