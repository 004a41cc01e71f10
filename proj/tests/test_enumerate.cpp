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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "nakamura/bounds.hpp"
#include "nakamura/enumerate.hpp"
#include "nakamura/nakamura.hpp"
#include "reference_tables.hpp"

using namespace nakamura;
using testing_support::table_of;

namespace {

std::int64_t nu_of(const SimpleGame& g) {
  const ExtendedCount v = nakamura_exact(g).value;
  return v.is_infinite() ? 0 : v.value();
}

// Number of (composition, row) pairs, with compositions taken as subsets of
// the n - 1 cut points.
std::uint64_t admissible_pairs(int n) {
  std::uint64_t total = 0;
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
    std::vector<int> parts;
    int last = 0;
    for (int i = 1; i < n; ++i)
      if (cuts >> (i - 1) & 1) {
        parts.push_back(i - last);
        last = i;
      }
    parts.push_back(n - last);
    const std::size_t t = parts.size();
    if (t == 1) {
      total += static_cast<std::uint64_t>(n);
      continue;
    }
    std::uint64_t rows = static_cast<std::uint64_t>(parts.front()) * static_cast<std::uint64_t>(parts.back());
    for (std::size_t j = 1; j + 1 < t; ++j) rows *= static_cast<std::uint64_t>(parts[j] - 1);
    total += rows;
  }
  return total;
}

// Integral weights from a class-level certificate, checked coalition by
// coalition against the expansion.
bool certificate_realizes(const CompleteGame& g, const AlphaOutcome& cert) {
  mpz_class scale = 1;
  for (const auto& w : cert.weights) scale = lcm(scale, w.get_den());
  std::vector<long long> weights;
  for (std::size_t j = 0; j < g.class_sizes().size(); ++j) {
    const mpz_class w = cert.weights[j].get_num() * (scale / cert.weights[j].get_den());
    weights.insert(weights.end(), static_cast<std::size_t>(g.class_sizes()[j]), w.get_si());
  }
  const oracle::Table t = oracle::weighted_table(scale.get_si(), weights);
  return t.win == table_of(expand_complete(g)).win;
}

}  // namespace

TEST(Compositions, LexicographicOrderAndCount) {
  std::vector<std::vector<int>> seen;
  for_each_composition(5, 3, [&](const std::vector<int>& c) { seen.push_back(c); });
  const std::vector<std::vector<int>> expected = {{1, 1, 3}, {1, 2, 2}, {1, 3, 1}, {2, 1, 2},
                                                  {2, 2, 1}, {3, 1, 1}};
  EXPECT_EQ(seen, expected);
  for (int n = 1; n <= 12; ++n)
    for (int t = 1; t <= n; ++t) {
      std::uint64_t count = 0;
      for_each_composition(n, t, [&](const std::vector<int>& c) {
        EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0), n);
        ++count;
      });
      EXPECT_EQ(count, binomial(n - 1, t - 1)) << n << " " << t;
    }
}

TEST(EnumerateR1, OrderOnThreePlayers) {
  const auto games = enumerate_r1(3);
  ASSERT_EQ(games.size(), 7u);
  EXPECT_EQ(games[0], CompleteGame::make({3}, {{1}}));
  EXPECT_EQ(games[2], CompleteGame::make({3}, {{3}}));
  EXPECT_EQ(games[3], CompleteGame::make({1, 2}, {{1, 0}}));
  EXPECT_EQ(games[6], CompleteGame::make({2, 1}, {{2, 0}}));
}

TEST(EnumerateR1, DistinctGamesWithOneShiftMinimalVector) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<std::uint64_t>> forms;
    for (const CompleteGame& g : enumerate_r1(n)) {
      const SimpleGame e = expand_complete(g);
      EXPECT_EQ(complete_from_simple(e), g);
      forms.insert(testing_support::masks(e.min_winning()));
    }
    EXPECT_EQ(forms.size(), (std::uint64_t{1} << n) - 1);
  }
}

TEST(Census, CompleteMatchesReferenceRows) {
  const auto& rows = reference::complete_r1_rows();
  for (int n = 1; n <= 16; ++n) {
    const CensusRow row = census(n, CensusClass::complete_r1);
    EXPECT_EQ(row.table_row(n), reference::padded(rows[n - 1], n)) << "n=" << n;
  }
}

TEST(Census, TotalsMatchDirectCount) {
  for (int n = 1; n <= 16; ++n) {
    const CensusRow row = census(n, CensusClass::complete_r1);
    EXPECT_EQ(row.total(), admissible_pairs(n)) << n;
    EXPECT_EQ(row.total(), (std::uint64_t{1} << n) - 1) << n;
  }
}

TEST(Census, WeightedMatchesPublishedSmallRows) {
  const auto& rows = reference::weighted_r1_published_rows();
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(census(n, CensusClass::weighted_r1).table_row(n), reference::padded(rows[n - 1], n)) << n;
}

TEST(Census, WeightedMatchesOracleRows) {
  const auto& rows = reference::weighted_r1_oracle_rows();
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(census(n, CensusClass::weighted_r1).table_row(n), reference::padded(rows[n - 1], n)) << n;
}

TEST(Census, WeightedFilterAgreesWithPlayerLevelAndExplicitWeights) {
  for (int n = 1; n <= 7; ++n)
    for_each_r1(n, [&](const CompleteGame& g) {
      const AlphaOutcome cert = alpha_critical_vectors(g);
      const bool weighted = cert.alpha < 1;
      EXPECT_EQ(weighted, alpha_critical(expand_complete(g)) < 1);
      if (weighted) {
        EXPECT_TRUE(certificate_realizes(g, cert));
      }
    });
}

TEST(Census, EveryFiveOrFewerPlayerGameIsWeighted) {
  for (int n = 1; n <= 5; ++n) {
    const CensusRow all = census(n, CensusClass::complete_r1);
    EXPECT_EQ(census(n, CensusClass::weighted_r1).total(), all.total());
  }
}

TEST(Census, ShardsMergeToFullCensus) {
  for (auto cls : {CensusClass::complete_r1, CensusClass::weighted_r1})
    for (int n = 1; n <= 9; ++n)
      for (int k : {2, 3, 5}) {
        CensusOptions opts;
        CensusRow merged;
        merged.n = n;
        merged.cls = cls;
        for (int i = 0; i < k; ++i) {
          opts.shard = {k, i};
          merged.merge(census(n, cls, opts));
        }
        EXPECT_EQ(merged, census(n, cls)) << n << " " << k;
      }
}

TEST(Census, CapsAndErrors) {
  EXPECT_THROW(census(13, CensusClass::weighted_r1), capacity_error);
  EXPECT_THROW(census(17, CensusClass::complete_r1), capacity_error);
  CensusOptions opts;
  opts.shard = {2, 2};
  EXPECT_THROW(census(4, CensusClass::complete_r1, opts), invalid_game_error);
  EXPECT_THROW(parse_census_class("weighted"), invalid_game_error);
  EXPECT_EQ(parse_census_class("complete_r1"), CensusClass::complete_r1);
  CensusRow a;
  a.n = 3;
  CensusRow b;
  b.n = 4;
  EXPECT_THROW(a.merge(b), invalid_game_error);
}

TEST(ClosedForm, EqualsExactSolverOnExpansions) {
  for (int n = 1; n <= 12; ++n)
    for_each_r1_raw(n, [&](const std::vector<int>& sizes, const CoalitionVector& row) {
      const CompleteGame g = CompleteGame::make(sizes, {row});
      const ExtendedCount closed = nakamura_r1(sizes, row);
      ASSERT_EQ(closed, nakamura_exact(expand_complete(g)).value) << detail::describe(g);
    });
}

TEST(ClosedForm, EqualsBruteForceOracle) {
  for (int n = 1; n <= 7; ++n)
    for_each_r1_raw(n, [&](const std::vector<int>& sizes, const CoalitionVector& row) {
      const ExtendedCount closed = nakamura_r1(sizes, row);
      const int brute = oracle::nakamura(table_of(expand_complete(CompleteGame::make(sizes, {row}))));
      EXPECT_EQ(closed.is_infinite() ? 0 : closed.value(), brute);
    });
}

TEST(ClosedForm, WinningReducedVectorCapsValue) {
  for (int n = 1; n <= 14; ++n)
    for_each_r1(n, [&](const CompleteGame& g) {
      const auto& sizes = g.class_sizes();
      const int t = g.classes();
      CoalitionVector reduced(sizes.begin(), sizes.end());
      for (auto& x : reduced) --x;
      if (!vector_is_winning(g, reduced)) return;
      std::int64_t cap = 0;
      int prefix = 0;
      for (int i = 1; i <= t; ++i) {
        prefix += sizes[i - 1];
        cap = std::max<std::int64_t>(cap, (prefix + i - 1) / i);
      }
      const ExtendedCount nu = nakamura_r1(sizes, g.shift_min().front());
      ASSERT_TRUE(nu.is_finite());
      EXPECT_LE(nu.value(), cap);
      EXPECT_LE(cap, n - t + 1);
    });
}

TEST(ClosedForm, RowBoundHoldsOnRandomCompleteGames) {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 300) {
    const WeightedRep rep = testing_support::random_weighted(rng, 12, 6, true);
    const CompleteGame g = complete_from_simple(game_from_weighted(rep));
    if (g.shift_min().size() > 3) continue;
    ++checked;
    const ExtendedCount nu = nakamura_complete(g).value;
    EXPECT_EQ(nu, nakamura_exact(expand_complete(g)).value);
    for (const auto& m : g.shift_min()) {
      int total = 0, missing = 0;
      ExtendedCount bound(1);
      for (int j = 0; j < g.classes(); ++j) {
        total += g.class_sizes()[j];
        missing += g.class_sizes()[j] - m[j];
        const ExtendedCount here = missing == 0 ? ExtendedCount::infinite()
                                                : ExtendedCount((total + missing - 1) / missing);
        if (bound < here) bound = here;
      }
      EXPECT_LE(nu, bound);
    }
  }
}

TEST(AllGames, SimpleGameCountsAndCompleteness) {
  // Monotone Boolean functions with both constants excluded.
  const std::vector<std::uint64_t> expected = {1, 4, 18, 166, 7579};
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t simple = 0, complete = 0;
    std::set<std::vector<std::uint64_t>> seen;
    for_each_simple_game(n, [&](const SimpleGame& g) {
      ++simple;
      if (oracle::is_complete(table_of(g))) ++complete;
      seen.insert(testing_support::masks(g.min_winning()));
    });
    EXPECT_EQ(simple, expected[n - 1]);
    EXPECT_EQ(seen.size(), simple);
    std::uint64_t enumerated = 0;
    std::set<std::vector<std::uint64_t>> forms;
    for_each_complete_game(n, 0, [&](const CompleteGame& g) {
      ++enumerated;
      const SimpleGame e = expand_complete(g);
      EXPECT_EQ(static_cast<int>(desirability_classes(e).classes.size()), g.classes());
      forms.insert(canonical_form(e));
    });
    EXPECT_EQ(forms.size(), enumerated) << n;
    // Complete games up to relabeling: one representative per parameter set.
    std::set<std::vector<std::uint64_t>> complete_forms;
    for_each_simple_game(n, [&](const SimpleGame& g) {
      if (oracle::is_complete(table_of(g))) complete_forms.insert(canonical_form(g));
    });
    EXPECT_EQ(complete_forms, forms) << n;
    EXPECT_GE(complete, enumerated);
  }
  EXPECT_THROW(for_each_simple_game(7, [](const SimpleGame&) {}), capacity_error);
}

TEST(AllGames, CanonicalFormIdentifiesRelabelings) {
  const SimpleGame a = game_from_weighted(WeightedRep(4, {3, 1, 1, 2}));
  const SimpleGame b = game_from_weighted(WeightedRep(4, {1, 2, 3, 1}));
  const SimpleGame c = game_from_weighted(WeightedRep(5, {3, 1, 1, 2}));
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(a, c));
}

TEST(Families, WeightedExamples) {
  const FamilyGame f = construct_family(family_spec("lemma9-1", 5));
  ASSERT_TRUE(f.weighted.has_value());
  EXPECT_EQ(*f.weighted, WeightedRep(6, {2, 2, 2, 1, 1}));
  EXPECT_EQ(nu_of(f.game), 4);

  const FamilyGame c = construct_family(family_spec("prop6-c", 6, 2));
  EXPECT_EQ(*c.weighted, WeightedRep(17, {5, 5, 5, 3, 3, 1}));
  EXPECT_EQ(nu_of(c.game), 5);

  const FamilyGame a = construct_family(family_spec("prop6-a", 5));
  EXPECT_EQ(*a.weighted, WeightedRep(4, {1, 1, 1, 1, 1}));
  EXPECT_EQ(nu_of(a.game), 5);

  const FamilyGame d = construct_family(family_spec("prop6-d", 7, 2));
  EXPECT_EQ(static_cast<int>(desirability_classes(d.game).classes.size()), 4);
  EXPECT_EQ(nu_of(d.game), 5);
}

TEST(Families, StatedValuesHold) {
  for (int n = 3; n <= 9; ++n)
    for (const std::string tag : {"prop6-a", "prop6-b", "lemma9-1", "lemma9-3", "lemma9-4", "prop6-c", "prop6-d"}) {
      if ((tag == "lemma9-3" || tag == "prop6-c") && n < 4) continue;
      if (tag == "prop6-d" && n < 5) continue;
      const FamilyGame f = construct_family(family_spec(tag, n));
      EXPECT_EQ(ExtendedCount(nu_of(f.game)), f.stated) << tag << " " << n;
    }
}

TEST(Families, PaddingGameMatchesFormula) {
  FamilySpec s = family_spec("theorem3a", 0);
  s.w = {2, 1};
  s.qbar = Rational(1, 2);
  s.r = 8;
  const FamilyGame f = construct_family(s);
  ASSERT_TRUE(f.weighted.has_value());
  EXPECT_EQ(*f.weighted, WeightedRep(6, {2, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(f.stated, ExtendedCount(3));
  EXPECT_EQ(nakamura_exact(f.game).value, f.stated);
  for (int r = 1; r <= 10; ++r) {
    s.r = r;
    for (const Rational& q : {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)}) {
      s.qbar = q;
      const FamilyGame g = construct_family(s);
      if (!g.weighted->vetoers().empty()) continue;
      EXPECT_EQ(nakamura_exact(g.game).value, g.stated) << r << " " << to_string(q);
    }
  }
}

TEST(Families, ReplicaGameMatchesFormulaForLargeReplicas) {
  FamilySpec s = family_spec("theorem3b", 0);
  s.w = {3, 2, 1};
  for (int r = 2; r <= 4; ++r)
    for (const Rational& q : {Rational(1, 2), Rational(2, 3)}) {
      s.r = r;
      s.qbar = q;
      const FamilyGame g = construct_family(s);
      EXPECT_EQ(nakamura_exact(g.game).value, g.stated) << r << " " << to_string(q);
    }
}

TEST(Families, CircularConstruction) {
  for (int t = 6; t <= 9; ++t)
    for (int n = t; n <= t + 2; ++n) {
      const FamilyGame f = construct_family(family_spec("prop7", n, 0, t));
      EXPECT_TRUE(f.stated_is_lower_bound);
      EXPECT_EQ(static_cast<int>(desirability_classes(f.game).classes.size()), t);
      EXPECT_GE(ExtendedCount(nu_of(f.game)), f.stated) << n << " " << t;
    }
  EXPECT_THROW(construct_family(family_spec("prop7", 6, 0, 5)), invalid_game_error);
}

TEST(Families, VetoSetConstruction) {
  for (int k = 3; k <= 4; ++k)
    for (int t = 2 * k + 1; t <= 2 * k + 4; ++t) {
      const int n = t + 1;
      const FamilyGame f = construct_family(family_spec("prop8", n, k, t));
      EXPECT_EQ(static_cast<int>(desirability_classes(f.game).classes.size()), t) << k << " " << t;
      EXPECT_GE(ExtendedCount(nu_of(f.game)), ExtendedCount(n - k));
    }
  EXPECT_THROW(construct_family(family_spec("prop8", 10, 3, 6)), invalid_game_error);
}

TEST(Families, ParameterErrorsNameTheConstraint) {
  try {
    construct_family(family_spec("lemma9-5", 6, 5));
    FAIL();
  } catch (const invalid_game_error& e) {
    EXPECT_NE(std::string(e.what()).find("2 <= k <= n - 2"), std::string::npos);
  }
  EXPECT_THROW(construct_family(family_spec("nonsense", 5)), invalid_game_error);
  FamilySpec s = family_spec("theorem3a", 0);
  s.w = {2, 1};
  s.qbar = Rational(1);
  s.r = 3;
  EXPECT_THROW(construct_family(s), invalid_game_error);
}

TEST(MaxNakamura, SmallClassCountValues) {
  for (auto cls : {GameClass::weighted, GameClass::complete, GameClass::simple}) {
    const int top = cls == GameClass::simple ? 5 : 6;
    for (int n = 2; n <= top; ++n) {
      const auto r1 = max_nakamura(n, 1, cls);
      EXPECT_TRUE(r1.exhaustive);
      EXPECT_EQ(r1.value, n);
      if (n >= 3) {
        EXPECT_EQ(max_nakamura(n, 2, cls).value, n - 1) << n;
      }
      if (n >= 4) {
        EXPECT_EQ(max_nakamura(n, 3, cls).value, n - 1) << n;
      }
      if (n >= 5) {
        EXPECT_EQ(max_nakamura(n, 4, cls).value, n - 2) << n;
      }
    }
  }
}

TEST(MaxNakamura, WitnessHasTheValueAndClassCount) {
  const auto r = max_nakamura(6, 3, GameClass::weighted);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(nu_of(*r.witness), r.value);
  EXPECT_EQ(static_cast<int>(desirability_classes(*r.witness).classes.size()), 3);
  EXPECT_LT(alpha_critical(*r.witness), 1);
}

TEST(MaxNakamura, ConstructionModeGivesLowerBounds) {
  MaxNakamuraOptions opts;
  opts.mode = SearchMode::construction;
  const auto r = max_nakamura(8, 4, GameClass::weighted, opts);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.value, 6);
  const auto s = max_nakamura(9, 7, GameClass::simple, opts);
  EXPECT_GE(s.value, 9 - 3);
  opts.mode = SearchMode::exhaustive;
  EXPECT_THROW(max_nakamura(7, 2, GameClass::weighted, opts), capacity_error);
  EXPECT_THROW(max_nakamura(1, 1, GameClass::weighted), invalid_game_error);
}

TEST(ClassBand, Examples) {
  const auto a = band_probe(5, 5, 2);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].result.value, 4);
  EXPECT_EQ(a[0].band_low, 4);
  EXPECT_EQ(a[0].band_high, 5);
  EXPECT_TRUE(a[0].inside);
  const auto b = band_probe(5, 5, 4);
  EXPECT_EQ(b[0].result.value, 3);
  EXPECT_EQ(b[0].band_low, 2);
  EXPECT_EQ(b[0].band_high, 3);
  EXPECT_TRUE(b[0].inside);
  const auto c = band_probe(4, 4, 3);
  EXPECT_EQ(c[0].result.value, 3);
  EXPECT_TRUE(c[0].inside);
}

TEST(TopValues, ClassificationUpToFivePlayers) {
  for (int n = 2; n <= 5; ++n) {
    const TopValueCensus c = top_value_census(n);
    EXPECT_TRUE(c.unmatched.empty()) << n;
    EXPECT_EQ(c.nu_n, 1u);
    EXPECT_EQ(c.matched.at("prop6-a"), 1u);
    std::uint64_t matched = 0;
    for (const auto& [tag, count] : c.matched) matched += count;
    EXPECT_EQ(matched, c.nu_n + c.nu_n_minus_1);
  }
  const TopValueCensus five = top_value_census(5);
  EXPECT_EQ(five.games, 7579u);
  EXPECT_EQ(five.nu_n_minus_1, 75u);
}

TEST(TopValues, CountsAgreeWithBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    std::uint64_t top = 0, next = 0;
    for_each_simple_game(n, [&](const SimpleGame& g) {
      const int v = oracle::nakamura(table_of(g));
      if (v == n) ++top;
      if (v == n - 1) ++next;
    });
    const TopValueCensus c = top_value_census(n);
    EXPECT_EQ(c.nu_n, top);
    EXPECT_EQ(c.nu_n_minus_1, next);
  }
}
