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

#ifndef NAKAMURA_BOUNDS_HPP
#define NAKAMURA_BOUNDS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/common.hpp"
#include "nakamura/complete_game.hpp"
#include "nakamura/lp.hpp"
#include "nakamura/nakamura.hpp"
#include "nakamura/rational.hpp"
#include "nakamura/set_cover.hpp"
#include "nakamura/simple_game.hpp"
#include "nakamura/weighted.hpp"

namespace nakamura {

enum class BoundMethod { weighted, greedy, cardinality, alpha_roughly, lp_quota };

inline std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::weighted: return "weighted";
    case BoundMethod::greedy: return "greedy";
    case BoundMethod::cardinality: return "cardinality";
    case BoundMethod::alpha_roughly: return "alpha_roughly";
    case BoundMethod::lp_quota: return "lp_quota";
  }
  return "unknown";
}

/// Lower and upper bounds on the Nakamura number from one method.
///
/// `upper_applicable` is false when the upper bound is reported as the
/// formula gives it but its hypotheses are not met, so it must not be relied
/// on. A game with a vetoer has an infinite Nakamura number; its reports keep
/// the formula's lower bound and an infinite upper bound.
struct BoundsReport {
  BoundMethod method = BoundMethod::weighted;
  ExtendedCount lower = ExtendedCount(1);
  ExtendedCount upper = ExtendedCount::infinite();
  bool has_vetoer = false;
  bool upper_applicable = true;
  std::string note;

  bool consistent() const { return !upper_applicable || lower <= upper; }
};

/// ceil(w(N) / (w(N) - q)) and, over the integral form (q^, w^) with largest
/// weight omega^, ceil(w^(N) / (w^(N) - q^ - omega^ + 1)).
inline BoundsReport weighted_bounds(const WeightedRep& rep) {
  rep.validate();
  BoundsReport out;
  out.method = BoundMethod::weighted;
  const Rational total = rep.total();
  out.lower = ceil_ratio(total, total - rep.quota);
  out.has_vetoer = !rep.vetoers().empty();
  const WeightedRep hat = rep.integral();
  const Rational hat_total = hat.total();
  const Rational denominator = hat_total - hat.quota - hat.omega() + 1;
  out.upper = ceil_ratio(hat_total, denominator);
  if (!rep.integral_input()) out.note = "upper bound uses the representation scaled by the denominators' lcm";
  if (out.has_vetoer) out.upper = ExtendedCount::infinite();
  return out;
}

/// Number of coalitions built by the greedy rule: each new coalition starts
/// from N and repeatedly drops the heaviest player (lowest index on ties)
/// that no earlier coalition dropped and whose removal keeps it winning.
/// Infinite when a round cannot drop anybody.
inline ExtendedCount greedy_upper(const WeightedRep& rep) {
  rep.validate();
  const WeightedRep hat = rep.integral();
  const int n = hat.players();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return hat.weights[a] > hat.weights[b]; });
  Coalition remaining = Coalition::all(n);
  const Rational total = hat.total();
  std::int64_t rounds = 0;
  while (!remaining.empty()) {
    Rational weight = total;
    bool dropped = false;
    for (int p : order) {
      if (!remaining.contains(p)) continue;
      if (weight - hat.weights[p] >= hat.quota) {
        weight -= hat.weights[p];
        remaining = remaining.without(p);
        dropped = true;
      }
    }
    if (!dropped) return ExtendedCount::infinite();
    ++rounds;
  }
  return ExtendedCount(rounds);
}

/// With m and M the smallest and largest size of a minimal winning
/// coalition: ceil(n / (n - m)) and 1 + ceil(m / (n - M)). The upper bound
/// is flagged applicable only when every coalition of size M wins, which is
/// what its counting argument uses.
inline BoundsReport cardinality_bounds(const SimpleGame& game, const std::vector<Coalition>& max_losing) {
  BoundsReport out;
  out.method = BoundMethod::cardinality;
  const int n = game.players();
  int m = n, big = 0;
  for (Coalition s : game.min_winning()) {
    m = std::min(m, s.size());
    big = std::max(big, s.size());
  }
  out.lower = ceil_ratio(Rational(n), Rational(n - m));
  out.upper = big < n ? ExtendedCount(1 + (m + (n - big) - 1) / (n - big)) : ExtendedCount::infinite();
  out.has_vetoer = !classify_players(game).vetoers.empty();
  out.upper_applicable =
      std::all_of(max_losing.begin(), max_losing.end(), [&](Coalition t) { return t.size() < big; });
  if (!out.upper_applicable) out.note = "some coalition of the largest minimal winning size loses";
  if (out.has_vetoer) out.upper = ExtendedCount::infinite();
  return out;
}

inline BoundsReport cardinality_bounds(const SimpleGame& game) {
  return cardinality_bounds(game, maximal_losing(game));
}

/// Bounds from weights under which winning coalitions weigh at least 1 and
/// losing ones at most alpha: ceil(w(N) / (w(N) - 1)) and
/// ceil(w(N) / (w(N) - alpha - omega)), the latter only for a positive
/// denominator. `note` records whether alpha + omega > w(N) holds.
inline BoundsReport alpha_roughly_bounds(const std::vector<Rational>& weights, const Rational& alpha) {
  if (weights.empty()) throw invalid_game_error("no weights given");
  for (const auto& w : weights)
    if (sgn(w) < 0) throw invalid_game_error("negative weight " + to_string(w));
  BoundsReport out;
  out.method = BoundMethod::alpha_roughly;
  const Rational total = sum(weights);
  const Rational omega = *std::max_element(weights.begin(), weights.end());
  out.lower = ceil_ratio(total, total - 1);
  out.upper = ceil_ratio(total, total - alpha - omega);
  out.note = alpha + omega > total ? "alpha + omega > w(N)" : "alpha + omega <= w(N)";
  return out;
}

/// Checks that minimal winning coalitions weigh at least 1 and maximal
/// losing ones at most alpha.
inline bool is_alpha_roughly(const SimpleGame& game, const std::vector<Rational>& weights, const Rational& alpha) {
  if (static_cast<int>(weights.size()) != game.players()) return false;
  auto weight = [&](Coalition s) {
    Rational t(0);
    for (int p : s.members()) t += weights[p];
    return t;
  };
  for (Coalition s : game.min_winning())
    if (weight(s) < 1) return false;
  for (Coalition t : maximal_losing(game))
    if (weight(t) > alpha) return false;
  return true;
}

/// Optimum of  max q  s.t.  w(S) >= q for all winning S,  w(N) = 1,  w >= 0,
/// with the derived minimum maximum excess e* = 1 - q* and price of stability
/// e* / (1 - e*).
struct LpOutcome {
  Rational optimum;  // q*
  std::vector<Rational> weights;
  Rational excess;   // e*
  Rational delta;
  ExtendedCount bound = ExtendedCount::infinite();  // ceil(1 / (1 - q*))
};

/// Solved through its scaled dual: the fractional cover of N by complements
/// of minimal winning coalitions has value z* = 1 / (1 - q*), and the row
/// duals scaled by 1 / z* are optimal weights. Players of one desirability
/// class are interchangeable, so the cover is taken over class vectors
///   min sum x_v  s.t.  sum_v (n_j - v_j) x_v >= n_j  for every class j
/// and a class dual is the weight of each of its players.
inline LpOutcome max_quota_lp(const SimpleGame& game) {
  const int n = game.players();
  LpOutcome out;
  const Coalition vetoers = classify_players(game).vetoers;
  if (!vetoers.empty()) {
    out.optimum = 1;
    out.weights.assign(n, Rational(0));
    out.weights[vetoers.first()] = 1;
    out.excess = 0;
    out.delta = 0;
    return out;
  }
  const VectorIlpInstance inst = vector_instance(game);
  const std::size_t t = inst.class_sizes.size();
  lp::Problem p;
  p.objective.assign(inst.generators.size(), Rational(1));
  for (std::size_t j = 0; j < t; ++j) {
    std::vector<Rational> row(inst.generators.size(), Rational(0));
    for (std::size_t k = 0; k < inst.generators.size(); ++k)
      row[k] = static_cast<long>(inst.class_sizes[j] - inst.generators[k][j]);
    p.add_row(std::move(row), lp::Sense::ge, Rational(static_cast<long>(inst.class_sizes[j])));
  }
  const lp::Solution s = lp::minimize(p);
  require_invariant(s.status == lp::Status::optimal, "quota LP not optimal for a vetoer-free game");
  const Rational z = s.value;
  out.optimum = 1 - 1 / z;
  out.excess = 1 - out.optimum;
  out.delta = out.excess / out.optimum;
  out.weights.assign(n, Rational(0));
  for (std::size_t j = 0; j < t; ++j)
    for (int player : inst.class_members[j]) out.weights[player] = s.duals[j] / z;
  out.bound = ExtendedCount(to_int64(ceil(z)));
  return out;
}

/// Value of the fractional cover of N by complements of minimal winning
/// coalitions; empty when a vetoer makes it infeasible.
inline std::optional<Rational> fractional_cover_value(const SimpleGame& game) {
  if (!classify_players(game).vetoers.empty()) return std::nullopt;
  return 1 / (1 - max_quota_lp(game).optimum);
}

struct AlphaOutcome {
  Rational alpha;
  std::vector<Rational> weights;
};

namespace detail {

// min alpha  s.t.  a.w >= 1 (a in winning),  b.w <= alpha (b in losing),
// w >= 0, solved as its dual
//   max sum lambda  s.t.  sum lambda_a a_i - sum mu_b b_i <= 0 per i,
//                         sum mu <= 1,
// whose row duals are the weights and alpha.
inline AlphaOutcome alpha_lp(std::size_t dims, const std::vector<std::vector<int>>& winning,
                             const std::vector<std::vector<int>>& losing) {
  lp::Problem p;
  const std::size_t cols = winning.size() + losing.size();
  p.objective.assign(cols, Rational(0));
  for (std::size_t k = 0; k < winning.size(); ++k) p.objective[k] = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    std::vector<Rational> row(cols, Rational(0));
    for (std::size_t k = 0; k < winning.size(); ++k) row[k] = winning[k][i];
    for (std::size_t k = 0; k < losing.size(); ++k) row[winning.size() + k] = -losing[k][i];
    p.add_row(std::move(row), lp::Sense::le, Rational(0));
  }
  std::vector<Rational> last(cols, Rational(0));
  for (std::size_t k = 0; k < losing.size(); ++k) last[winning.size() + k] = 1;
  p.add_row(std::move(last), lp::Sense::le, Rational(1));
  const lp::Solution s = lp::maximize(p);
  require_invariant(s.status == lp::Status::optimal, "critical threshold LP not optimal");
  AlphaOutcome out;
  out.alpha = s.value;
  out.weights.assign(s.duals.begin(), s.duals.begin() + static_cast<std::ptrdiff_t>(dims));
  return out;
}

inline std::vector<int> incidence(Coalition s, int n) {
  std::vector<int> v(n, 0);
  for (int p : s.members()) v[p] = 1;
  return v;
}

}  // namespace detail

/// Least alpha admitting weights with w(S) >= 1 on winning and w(T) <= alpha
/// on losing coalitions. The game is weighted iff this is below 1.
/// Solved over class vectors, one weight per desirability class.
inline AlphaOutcome alpha_critical_certificate(const SimpleGame& game) {
  const int n = game.players();
  const auto cls = desirability_classes(game);
  const int t = static_cast<int>(cls.classes.size());
  const auto class_of = cls.class_of(n);
  auto vectors = [&](const std::vector<Coalition>& family) {
    std::vector<CoalitionVector> v;
    for (Coalition s : family) v.push_back(coalition_vector(s, class_of, t));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return std::vector<std::vector<int>>(v.begin(), v.end());
  };
  const AlphaOutcome reduced = detail::alpha_lp(t, vectors(game.min_winning()), vectors(maximal_losing(game)));
  AlphaOutcome out;
  out.alpha = reduced.alpha;
  out.weights.assign(n, Rational(0));
  for (int j = 0; j < t; ++j)
    for (int player : cls.classes[j]) out.weights[player] = reduced.weights[j];
  return out;
}

inline Rational alpha_critical(const SimpleGame& game) { return alpha_critical_certificate(game).alpha; }

/// The same threshold for a complete game with one weight per class, over
/// its minimal winning and maximal losing vectors.
inline AlphaOutcome alpha_critical_vectors(const CompleteGame& g) {
  return detail::alpha_lp(g.class_sizes().size(), minimal_winning_vectors(g), maximal_losing_vectors(g));
}

inline bool is_weighted_complete(const CompleteGame& g) { return alpha_critical_vectors(g).alpha < 1; }

}  // namespace nakamura

#endif  // NAKAMURA_BOUNDS_HPP
