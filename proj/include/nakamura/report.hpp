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

#ifndef NAKAMURA_REPORT_HPP
#define NAKAMURA_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nakamura/bounds.hpp"
#include "nakamura/complete_game.hpp"
#include "nakamura/csp.hpp"
#include "nakamura/enumerate.hpp"
#include "nakamura/io.hpp"
#include "nakamura/nakamura.hpp"
#include "nakamura/simple_game.hpp"

namespace nakamura {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "nakamura-analysis/1";

/// One bound method applied to a game; absent sides are not provided by the
/// method.
struct BoundEntry {
  BoundMethod method = BoundMethod::weighted;
  std::optional<ExtendedCount> lower;
  std::optional<ExtendedCount> upper;
  bool upper_applicable = true;
  std::string note;

  /// lower <= value <= upper, ignoring inapplicable upper bounds.
  bool holds_for(ExtendedCount value) const {
    if (lower && *lower > value) return false;
    return !(upper && upper_applicable && value > *upper);
  }
};

struct CspSummary {
  std::int64_t z_b = 0;
  Rational z_c;
  bool irup = false;
  bool mirup = false;
};

struct AnalysisReport {
  GameInput input;
  PlayerClassification players;
  DesirabilityClasses classes;
  StructureFlags flags;
  std::size_t max_losing_count = 0;
  NakamuraResult nakamura;
  bool witness_verified = false;
  std::vector<BoundEntry> bounds;
  std::optional<LpOutcome> quota_lp;
  AlphaOutcome alpha;
  bool weighted = false;
  std::optional<CspSummary> csp;
  RelaxationReport relaxation;
};

/// Every bound method that applies to the input.
inline std::vector<BoundEntry> all_bounds(const GameInput& in, const std::vector<Coalition>& max_losing,
                                          const std::optional<LpOutcome>& lp, const AlphaOutcome& alpha) {
  std::vector<BoundEntry> out;
  const bool vetoer = !classify_players(in.game).vetoers.empty();
  if (in.weighted) {
    const BoundsReport w = weighted_bounds(*in.weighted);
    out.push_back({BoundMethod::weighted, w.lower, w.upper, w.upper_applicable, w.note});
    out.push_back({BoundMethod::greedy, std::nullopt, greedy_upper(*in.weighted), true, ""});
  }
  const BoundsReport c = cardinality_bounds(in.game, max_losing);
  out.push_back({BoundMethod::cardinality, c.lower, c.upper, c.upper_applicable, c.note});
  const BoundsReport a = alpha_roughly_bounds(alpha.weights, alpha.alpha);
  const bool a_applicable = !vetoer && a.note == "alpha + omega <= w(N)";
  out.push_back({BoundMethod::alpha_roughly, a.lower, vetoer ? ExtendedCount::infinite() : a.upper, a_applicable,
                 "critical weights; " + a.note});
  if (lp) out.push_back({BoundMethod::lp_quota, lp->bound, std::nullopt, true, ""});
  return out;
}

inline AnalysisReport analyze(const GameInput& in) {
  AnalysisReport r{in, classify_players(in.game), desirability_classes(in.game), {}, 0, {}, false, {}, {}, {}, false,
                   std::nullopt, {}};
  const auto max_losing = maximal_losing(in.game);
  r.max_losing_count = max_losing.size();
  r.flags = structure_flags(in.game, max_losing);
  r.nakamura = in.complete ? nakamura_complete(*in.complete) : nakamura_exact(in.game);
  r.witness_verified = r.nakamura.value.is_infinite() ? r.nakamura.witness.empty()
                                                      : verify_witness(in.game, r.nakamura.witness) &&
                                                            static_cast<std::int64_t>(r.nakamura.witness.size()) ==
                                                                r.nakamura.value.value();
  r.quota_lp = max_quota_lp(in.game);
  r.alpha = alpha_critical_certificate(in.game);
  r.weighted = r.alpha.alpha < 1;
  r.bounds = all_bounds(in, max_losing, r.quota_lp, r.alpha);
  if (in.csp) {
    r.relaxation = relaxation_probe(*in.csp);
    r.csp = CspSummary{*r.relaxation.instance_z_b, *r.relaxation.instance_z_c, *r.relaxation.irup,
                       *r.relaxation.mirup};
  } else {
    r.relaxation = relaxation_probe(in.game);
  }
  return r;
}

// ---------------------------------------------------------------------------
// JSON

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(ExtendedCount c) {
  if (c.is_infinite()) return "inf";
  return c.value();
}

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json players_json(Coalition c) {
  Json a = Json::array();
  for (int p : c.members()) a.push_back(p + 1);
  return a;
}

inline Json to_json(const std::vector<Coalition>& cs) {
  Json a = Json::array();
  for (Coalition c : cs) a.push_back(c.to_string());
  return a;
}

/// Longer lists of minimal winning coalitions are reported by count only.
inline constexpr std::size_t kReportListLimit = 1000;

inline Json to_json(const BoundEntry& b) {
  Json j;
  j["method"] = to_string(b.method);
  j["lower"] = b.lower ? to_json(*b.lower) : Json(nullptr);
  j["upper"] = b.upper ? to_json(*b.upper) : Json(nullptr);
  j["upper_applicable"] = b.upper_applicable;
  j["note"] = b.note;
  return j;
}

inline Json to_json(const RelaxationReport& c) {
  Json j;
  j["applicable"] = c.applicable;
  j["nu"] = to_json(c.nu);
  j["z_c"] = c.z_c ? to_json(*c.z_c) : Json(nullptr);
  j["bound"] = c.applicable ? to_json(c.bound) : Json(nullptr);
  j["inside"] = c.applicable ? Json(c.inside) : Json(nullptr);
  return j;
}

inline Json to_json(const AnalysisReport& r) {
  const int n = r.input.game.players();
  Json j;
  j["schema"] = kReportSchema;
  j["input"] = {{"kind", to_string(r.input.kind)}, {"text", write_input(r.input)}};
  j["players"] = n;
  const auto& mw = r.input.game.min_winning();
  j["min_winning_count"] = mw.size();
  j["min_winning"] = mw.size() <= kReportListLimit ? to_json(mw) : Json(nullptr);
  Json cls = Json::array();
  for (const auto& c : r.classes.classes) {
    Json members = Json::array();
    for (int p : c) members.push_back(p + 1);
    cls.push_back(members);
  }
  j["classification"] = {{"vetoers", players_json(r.players.vetoers)},
                         {"null_players", players_json(r.players.nulls)},
                         {"passers", players_json(r.players.passers)},
                         {"dictator", r.players.dictator ? Json(*r.players.dictator + 1) : Json(nullptr)},
                         {"classes", cls},
                         {"complete", r.classes.is_complete},
                         {"weighted", r.weighted}};
  j["flags"] = {{"proper", r.flags.proper}, {"strong", r.flags.strong}, {"constant_sum", r.flags.constant_sum}};
  j["nakamura"] = {{"value", to_json(r.nakamura.value)},
                   {"witness", to_json(r.nakamura.witness)},
                   {"verified", r.witness_verified}};
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  j["bounds"] = bounds;
  Json lp;
  if (r.quota_lp)
    lp["max_quota"] = {{"optimum", to_json(r.quota_lp->optimum)},
                       {"excess", to_json(r.quota_lp->excess)},
                       {"delta", to_json(r.quota_lp->delta)},
                       {"weights", to_json(r.quota_lp->weights)},
                       {"bound", to_json(r.quota_lp->bound)}};
  lp["alpha_critical"] = {{"alpha", to_json(r.alpha.alpha)}, {"weights", to_json(r.alpha.weights)}};
  j["lp"] = lp;
  j["relaxation"] = to_json(r.relaxation);
  if (r.csp) {
    j["csp"] = {{"z_b", r.csp->z_b},
                {"z_c", to_json(r.csp->z_c)},
                {"irup", r.csp->irup},
                {"mirup", r.csp->mirup}};
  }
  return j;
}

inline Json to_json(const CensusRow& row, int last_value) {
  Json counts = Json::object();
  const auto values = row.table_row(last_value);
  counts["inf"] = values[0];
  for (std::size_t k = 1; k < values.size(); ++k) counts[std::to_string(k + 1)] = values[k];
  return {{"n", row.n}, {"class", to_string(row.cls)}, {"total", row.total()}, {"counts", counts}};
}

// ---------------------------------------------------------------------------
// Text

inline std::string bound_text(const std::optional<ExtendedCount>& b) { return b ? b->to_string() : "-"; }

inline std::string to_text(const AnalysisReport& r) {
  std::string s;
  const auto& g = r.input.game;
  s += "game        " + to_string(r.input.kind) + " on " + std::to_string(g.players()) + " players, " +
       std::to_string(g.min_winning().size()) + " minimal winning, " + std::to_string(r.max_losing_count) +
       " maximal losing\n";
  s += "vetoers     " + r.players.vetoers.to_string() + "\n";
  s += "null        " + r.players.nulls.to_string() + "\n";
  s += "passers     " + r.players.passers.to_string() + "\n";
  s += "classes     " + std::to_string(r.classes.classes.size()) + (r.classes.is_complete ? " (complete)" : "") +
       "\n";
  s += "weighted    " + std::string(r.weighted ? "yes" : "no") + " (critical alpha " + to_string(r.alpha.alpha) +
       ")\n";
  s += "flags       proper=" + std::string(r.flags.proper ? "yes" : "no") +
       " strong=" + std::string(r.flags.strong ? "yes" : "no") +
       " constant-sum=" + std::string(r.flags.constant_sum ? "yes" : "no") + "\n";
  s += "nakamura    " + r.nakamura.value.to_string() + "\n";
  for (Coalition c : r.nakamura.witness) s += "  witness   " + c.to_string() + "\n";
  for (const auto& b : r.bounds) {
    s += "bound       " + to_string(b.method) + " [" + bound_text(b.lower) + ", " + bound_text(b.upper) + "]";
    if (!b.upper_applicable) s += " (upper not applicable)";
    s += "\n";
  }
  if (r.quota_lp)
    s += "quota lp    q*=" + to_string(r.quota_lp->optimum) + " e*=" + to_string(r.quota_lp->excess) +
         " delta=" + to_string(r.quota_lp->delta) + "\n";
  if (r.csp)
    s += "csp         z_B=" + std::to_string(r.csp->z_b) + " z_C=" + to_string(r.csp->z_c) +
         " IRUP=" + (r.csp->irup ? "yes" : "no") + " MIRUP=" + (r.csp->mirup ? "yes" : "no") + "\n";
  return s;
}

}  // namespace nakamura

#endif  // NAKAMURA_REPORT_HPP
