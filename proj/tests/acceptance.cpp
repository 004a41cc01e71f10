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


// Acceptance run: prints one PASS or FAIL line per criterion. Pass --long to
// add the slow census rows.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "nakamura/report.hpp"
#include "reference_tables.hpp"

using namespace nakamura;
using testing_support::repeat;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  bool known_deviation = false;  // documented red item that does not fail the run

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> run;
};

ExtendedCount nu(const SimpleGame& g) { return nakamura_exact(g).value; }

std::string str(ExtendedCount c) { return c.to_string(); }

Verdict symmetric_formula() {
  Verdict v;
  int checked = 0;
  for (int n = 2; n <= 12; ++n)
    for (int q = 1; q <= n; ++q) {
      const ExtendedCount want = q == n ? ExtendedCount::infinite() : ExtendedCount((n + (n - q) - 1) / (n - q));
      const ExtendedCount got = nu(game_from_weighted(WeightedRep(q, std::vector<std::int64_t>(n, 1))));
      v.check(got == want, "n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " + str(got) + " != " + str(want));
      ++checked;
    }
  if (v.pass) v.detail = std::to_string(checked) + " games";
  return v;
}

Verdict mixed_weights() {
  Verdict v;
  const WeightedRep rep(90, repeat({{9, 10}, {2, 4}, {1, 2}}));
  const auto r = nakamura_exact(game_from_weighted(rep));
  const auto b = weighted_bounds(rep);
  v.check(r.value == ExtendedCount(11), "nu = " + str(r.value));
  v.check(verify_witness(game_from_weighted(rep), r.witness), "witness fails");
  v.check(b.lower == ExtendedCount(10), "lower bound = " + str(b.lower));
  if (v.pass) v.detail = "nu 11, lower bound 10";
  return v;
}

Verdict two_weight_family() {
  Verdict v;
  for (int k = 1; k <= 3; ++k) {
    const WeightedRep rep(22 * k - 11, repeat({{5, 2 * k}, {2, 6 * k}}));
    const SimpleGame g = game_from_weighted(rep);
    const auto r = nakamura_exact(g);
    const auto by_vectors = nakamura_by_vectors(vector_instance(g));
    const ExtendedCount want(2 * k);
    v.check(r.value == want, "k=" + std::to_string(k) + " nu = " + str(r.value));
    v.check(by_vectors.value == want, "k=" + std::to_string(k) + " vector nu = " + str(by_vectors.value));
    v.check(weighted_bounds(rep).lower == want, "k=" + std::to_string(k) + " lower bound differs");
  }
  if (v.pass) v.detail = "k = 1, 2, 3 give 2, 4, 6";
  return v;
}

Verdict complete_ilp() {
  Verdict v;
  const std::vector<std::tuple<std::vector<int>, CoalitionVector, int>> cases = {{{10, 10}, {7, 8}, 4},
                                                                                 {{5, 5}, {2, 3}, 2}};
  for (const auto& [sizes, row, want] : cases) {
    const CompleteGame g = CompleteGame::make(sizes, {row});
    const SimpleGame expanded = expand_complete(g);
    const ExtendedCount c = nakamura_complete(g).value;
    const ExtendedCount by_vectors = nakamura_by_vectors(vector_instance(expanded)).value;
    const ExtendedCount exact = nu(expanded);
    const std::string tag = vector_to_string(row);
    v.check(c == ExtendedCount(want), tag + " complete = " + str(c));
    v.check(by_vectors == c, tag + " vector solver = " + str(by_vectors));
    v.check(exact == c, tag + " exact = " + str(exact));
  }
  if (v.pass) v.detail = "4 and 2, all three solvers agree";
  return v;
}

Verdict census_rows(bool long_run) {
  Verdict v;
  const int complete_top = long_run ? 16 : 12;
  for (int n = 1; n <= complete_top; ++n) {
    const auto got = census(n, CensusClass::complete_r1).table_row(n);
    v.check(got == reference::padded(reference::complete_r1_rows()[n - 1], n),
            "complete_r1 row " + std::to_string(n) + " differs");
  }
  const bool complete_ok = v.pass;
  std::vector<int> differing;
  bool oracle_ok = true;
  for (int n = 1; n <= 10; ++n) {
    const auto got = census(n, CensusClass::weighted_r1).table_row(n);
    if (got != reference::padded(reference::weighted_r1_published_rows()[n - 1], n)) differing.push_back(n);
    oracle_ok = oracle_ok && got == reference::padded(reference::weighted_r1_oracle_rows()[n - 1], n);
  }
  std::ostringstream s;
  s << "complete_r1 rows 1-" << complete_top << (complete_ok ? " match" : " MISMATCH");
  if (differing.empty()) {
    s << "; weighted_r1 rows 1-10 match";
  } else {
    v.pass = false;
    s << "; weighted_r1 rows";
    for (int n : differing) s << " " << n;
    s << " differ from the published counts";
    s << (oracle_ok ? " and match the independent weightedness oracle" : " and from the oracle");
  }
  v.known_deviation = complete_ok && oracle_ok && !differing.empty();
  v.detail = s.str() + (v.detail.empty() || complete_ok ? "" : " (" + v.detail + ")");
  return v;
}

Verdict cutting_stock_instance() {
  Verdict v;
  const CspInstance e{Rational(155), {}};
  CspInstance inst = e;
  for (int l : {9, 12, 12, 16, 16, 46, 46, 54, 69, 77, 102}) inst.lengths.emplace_back(l);
  const WeightedRep rep = game_from_instance(inst);
  const SimpleGame g = game_from_weighted(rep);
  const ExtendedCount lower = weighted_bounds(rep).lower;
  const ExtendedCount value = nu(g);
  const ExtendedCount zb = z_B(patterns_from_instance(inst)).as_count();
  v.check(lower == ExtendedCount(3), "lower bound = " + str(lower));
  v.check(value == ExtendedCount(4), "nu = " + str(value));
  v.check(zb == value, "z_B = " + str(zb));
  if (v.pass) v.detail = "lower bound 3, nu 4, z_B 4";
  return v;
}

Verdict partition_identity() {
  Verdict v;
  std::uint64_t games = 0;
  for (int n = 1; n <= 10; ++n)
    for_each_r1(n, [&](const CompleteGame& c) {
      if (c.has_vetoers()) return;
      const SimpleGame g = expand_complete(c);
      const ExtendedCount exact = nu(g);
      const ExtendedCount zb = z_B(patterns_from_game(g)).as_count();
      v.check(exact == zb, write_complete(c) + " z_B " + str(zb) + " nu " + str(exact));
      ++games;
    });
  if (v.pass) v.detail = std::to_string(games) + " vetoer-free games agree";
  return v;
}

/// The random vetoer-free weighted corpus shared by the last criteria.
const std::vector<WeightedRep>& corpus() {
  static const std::vector<WeightedRep> games = [] {
    std::mt19937_64 rng(20261016);
    std::vector<WeightedRep> out;
    for (int i = 0; i < 1000; ++i) out.push_back(testing_support::random_weighted(rng, 10, 9, true));
    return out;
  }();
  return games;
}

Verdict bound_sandwich() {
  Verdict v;
  std::uint64_t checks = 0;
  for (const WeightedRep& rep : corpus()) {
    const GameInput in{InputKind::weighted, game_from_weighted(rep), rep, std::nullopt, std::nullopt};
    const ExtendedCount value = nu(in.game);
    const LpOutcome lp = max_quota_lp(in.game);
    const auto bounds = all_bounds(in, maximal_losing(in.game), lp, alpha_critical_certificate(in.game));
    for (const auto& b : bounds) {
      v.check(b.holds_for(value), write_weighted(rep) + to_string(b.method) + " violates nu " + str(value));
      ++checks;
    }
    v.check(lp.bound >= weighted_bounds(rep).lower, write_weighted(rep) + "lp bound below the given one");
  }
  if (v.pass) v.detail = std::to_string(corpus().size()) + " games, " + std::to_string(checks) + " bound checks";
  return v;
}

Verdict class_count_maxima() {
  Verdict v;
  MaxNakamuraOptions opts;
  opts.mode = SearchMode::exhaustive;
  int cells = 0;
  for (int n = 2; n <= 6; ++n) {
    const std::vector<std::pair<int, int>> rows = {{1, n}, {2, n - 1}, {3, n - 1}, {4, n - 2}};
    for (const auto& [t, want] : rows) {
      if ((t == 2 && n < 3) || (t == 3 && n < 4) || (t == 4 && n < 5)) continue;
      const auto r = max_nakamura(n, t, GameClass::weighted, opts);
      v.check(r.exhaustive && r.found && r.value == want,
              "T(" + std::to_string(n) + "," + std::to_string(t) + ") = " + std::to_string(r.value));
      ++cells;
    }
  }
  if (v.pass) v.detail = std::to_string(cells) + " cells with n <= 6";
  return v;
}

Verdict top_value_classification() {
  Verdict v;
  std::uint64_t games = 0;
  for (int n = 2; n <= 5; ++n) {
    const TopValueCensus c = top_value_census(n);
    games += c.games;
    v.check(c.unmatched.empty(), std::to_string(c.unmatched.size()) + " unclassified games at n=" + std::to_string(n));
    v.check(c.nu_n == 1, "n=" + std::to_string(n) + " has " + std::to_string(c.nu_n) + " games with nu = n");
  }
  if (v.pass) v.detail = std::to_string(games) + " games on 2..5 players";
  return v;
}

WeightedRep random_rep(std::mt19937_64& rng, int n) {
  while (true) {
    std::vector<std::int64_t> w(n);
    std::int64_t total = 0;
    for (auto& x : w) total += x = std::uniform_int_distribution<int>(0, 9)(rng);
    if (total == 0) continue;
    return WeightedRep(std::uniform_int_distribution<std::int64_t>(1, total)(rng), w);
  }
}

Verdict structural_properties() {
  Verdict v;
  for (const WeightedRep& rep : corpus()) {
    const SimpleGame g = game_from_weighted(rep);
    const ExtendedCount value = nu(g);
    const StructureFlags f = structure_flags(g);
    const std::string tag = write_weighted(rep);
    v.check((value == ExtendedCount(2)) == !f.proper, tag + "nu 2 vs properness");
    if (f.constant_sum) v.check(value == ExtendedCount(3), tag + "constant-sum with nu " + str(value));
    const Coalition nulls = classify_players(g).nulls;
    if (!nulls.empty()) {
      const SimpleGame reduced = remove_null_player(g, nulls.members().front());
      v.check(nu(reduced) == value, tag + "null-player deletion changes nu");
    }
    if (rep.players() < kMaxPlayers) {
      WeightedRep padded = rep;
      padded.weights.emplace_back(0);
      v.check(nu(game_from_weighted(padded)) == value, tag + "adding a null player changes nu");
    }
  }
  std::mt19937_64 rng(7);
  for (int pair = 0; pair < 200; ++pair) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const SimpleGame a = game_from_weighted(random_rep(rng, n));
    const SimpleGame b = game_from_weighted(random_rep(rng, n));
    const ExtendedCount na = nu(a), nb = nu(b);
    v.check(nu(intersect_games(a, b)) >= std::max(na, nb), "intersection below the larger value");
    v.check(nu(unite_games(a, b)) <= std::min(na, nb), "union above the smaller value");
  }
  if (v.pass) v.detail = std::to_string(corpus().size()) + " games, 200 pairs";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) {
      long_run = true;
    } else {
      std::cerr << "usage: acceptance [--long]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria = {
      {1, "symmetric formula", 5, symmetric_formula},
      {2, "mixed weights example", 10, mixed_weights},
      {3, "two-weight family", 60, two_weight_family},
      {4, "complete-game ILP", 5, complete_ilp},
      {5, "census tables", long_run ? 600.0 : 300.0, [&] { return census_rows(long_run); }},
      {6, "cutting stock instance", 30, cutting_stock_instance},
      {7, "partition identity", 300, partition_identity},
      {8, "bound sandwich", 300, bound_sandwich},
      {9, "class-count maxima", 300, class_count_maxima},
      {10, "top-value classification", 120, top_value_classification},
      {11, "structural properties", 300, structural_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      v.pass = false;
      v.known_deviation = false;
      v.detail += " (took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s)";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << v.detail << " [" << time.str()
              << " s]" << (!v.pass && v.known_deviation ? " (known deviation)" : "") << std::endl;
    if (!v.pass && !v.known_deviation) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
