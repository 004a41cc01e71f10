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

#ifndef NAKAMURA_IO_HPP
#define NAKAMURA_IO_HPP

#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/common.hpp"
#include "nakamura/complete_game.hpp"
#include "nakamura/csp.hpp"
#include "nakamura/rational.hpp"
#include "nakamura/simple_game.hpp"
#include "nakamura/weighted.hpp"

namespace nakamura {

// Text formats, one record per file. Blank lines and text after '#' are
// ignored.
//
//   weighted            simple              complete            csp
//   quota: 90           players: 3          classes: 10 10      stock: 155
//   weights: 9 9 2 1    1 2                 row: 7 8            lengths: 9 12 102
//                       2 3

enum class InputKind { weighted, simple, complete, csp };

inline std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::weighted: return "weighted";
    case InputKind::simple: return "simple";
    case InputKind::complete: return "complete";
    case InputKind::csp: return "csp";
  }
  return "unknown";
}

/// A parsed file: the representation it was given in and the simple game it
/// describes. A cutting stock instance describes the game whose winning
/// coalitions have non-fitting complements.
struct GameInput {
  InputKind kind;
  SimpleGame game;
  std::optional<WeightedRep> weighted;
  std::optional<CompleteGame> complete;
  std::optional<CspInstance> csp;
};

namespace detail {

struct Line {
  int number;
  std::string text;
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
  }
  return out;
}

inline std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

/// Value of "key: value"; throws when the line has another shape.
inline std::string keyed(const Line& line, const std::string& key) {
  const auto colon = line.text.find(':');
  if (colon == std::string::npos || trim(line.text.substr(0, colon)) != key)
    throw parse_error(line.number, "expected '" + key + ": ...', got '" + line.text + "'");
  return trim(line.text.substr(colon + 1));
}

inline Rational rational_token(const Line& line, const std::string& tok) {
  const auto r = parse_rational(tok);
  if (!r) throw parse_error(line.number, "'" + tok + "' is not an integer or a fraction p/q");
  return *r;
}

inline std::vector<Rational> rational_list(const Line& line, const std::string& values) {
  std::vector<Rational> out;
  for (const auto& tok : tokens(values)) out.push_back(rational_token(line, tok));
  return out;
}

inline int int_token(const Line& line, const std::string& tok, int lo, int hi, const std::string& what) {
  const auto r = parse_rational(tok);
  if (!r || !is_integral(*r)) throw parse_error(line.number, what + " '" + tok + "' is not an integer");
  if (*r < lo || *r > hi)
    throw parse_error(line.number,
                      what + " " + tok + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(r->get_num().get_si());
}

inline int last_line(const std::vector<Line>& lines) { return lines.empty() ? 0 : lines.back().number; }

inline void expect_count(const std::vector<Line>& lines, std::size_t count, const std::string& kind) {
  if (lines.size() < count)
    throw parse_error(last_line(lines), "incomplete " + kind + " record: expected " + std::to_string(count) +
                                            " lines, got " + std::to_string(lines.size()));
  if (lines.size() > count) throw parse_error(lines[count].number, "unexpected line '" + lines[count].text + "'");
}

inline GameInput parse_weighted_lines(const std::vector<Line>& lines) {
  expect_count(lines, 3, "weighted");
  const Rational quota = rational_token(lines[1], keyed(lines[1], "quota"));
  if (tokens(keyed(lines[1], "quota")).size() != 1) throw parse_error(lines[1].number, "quota takes one value");
  std::vector<Rational> weights = rational_list(lines[2], keyed(lines[2], "weights"));
  if (weights.empty()) throw parse_error(lines[2].number, "no weights given");
  std::optional<WeightedRep> rep;
  try {
    rep.emplace(quota, std::move(weights));
  } catch (const invalid_game_error& e) {
    throw parse_error(sgn(quota) <= 0 ? lines[1].number : lines[2].number, e.what());
  } catch (const capacity_error& e) {
    throw parse_error(lines[2].number, e.what());
  }
  SimpleGame game = game_from_weighted(*rep);
  return {InputKind::weighted, std::move(game), std::move(rep), std::nullopt, std::nullopt};
}

inline GameInput parse_simple_lines(const std::vector<Line>& lines) {
  if (lines.size() < 2) throw parse_error(last_line(lines), "incomplete simple record: missing 'players:' line");
  const int n = int_token(lines[1], keyed(lines[1], "players"), 1, kMaxPlayers, "player count");
  if (tokens(keyed(lines[1], "players")).size() != 1) throw parse_error(lines[1].number, "players takes one value");
  if (lines.size() < 3) throw parse_error(lines[1].number, "no minimal winning coalitions listed");
  std::vector<Coalition> coalitions;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    Coalition c;
    for (const auto& tok : tokens(lines[k].text)) {
      const int p = int_token(lines[k], tok, 1, n, "player");
      if (c.contains(p - 1)) throw parse_error(lines[k].number, "player " + tok + " listed twice");
      c = c.with(p - 1);
    }
    coalitions.push_back(c);
  }
  // Antichain violations point at the later of the two lines involved.
  for (std::size_t i = 0; i < coalitions.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (coalitions[i] == coalitions[j])
        throw parse_error(lines[i + 2].number, "coalition repeats line " + std::to_string(lines[j + 2].number));
      if (coalitions[i].subset_of(coalitions[j]) || coalitions[j].subset_of(coalitions[i]))
        throw parse_error(lines[i + 2].number,
                          "not an antichain: coalition contains or is contained in line " +
                              std::to_string(lines[j + 2].number));
    }
  return {InputKind::simple, SimpleGame(n, std::move(coalitions)), std::nullopt, std::nullopt, std::nullopt};
}

inline GameInput parse_complete_lines(const std::vector<Line>& lines) {
  if (lines.size() < 2) throw parse_error(last_line(lines), "incomplete complete record: missing 'classes:' line");
  std::vector<int> sizes;
  for (const auto& tok : tokens(keyed(lines[1], "classes")))
    sizes.push_back(int_token(lines[1], tok, 1, kMaxPlayers, "class size"));
  if (sizes.empty()) throw parse_error(lines[1].number, "no class sizes given");
  if (std::accumulate(sizes.begin(), sizes.end(), 0) > kMaxPlayers)
    throw parse_error(lines[1].number, "more than " + std::to_string(kMaxPlayers) + " players");
  if (lines.size() < 3) throw parse_error(lines[1].number, "no 'row:' lines given");
  std::vector<CoalitionVector> rows;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    CoalitionVector row;
    for (const auto& tok : tokens(keyed(lines[k], "row"))) row.push_back(int_token(lines[k], tok, 0, kMaxPlayers, "entry"));
    if (row.size() != sizes.size())
      throw parse_error(lines[k].number, "row has " + std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(sizes.size()));
    rows.push_back(std::move(row));
  }
  const auto violations = check_complete_parameters(sizes, rows);
  if (!violations.empty()) {
    const auto& v = violations.front();
    const int line = v.row > 0 && v.row <= static_cast<int>(rows.size()) ? lines[v.row + 1].number : lines[1].number;
    throw parse_error(line, v.message);
  }
  CompleteGame g = CompleteGame::make(std::move(sizes), std::move(rows));
  SimpleGame game = expand_complete(g);
  return {InputKind::complete, std::move(game), std::nullopt, std::move(g), std::nullopt};
}

inline GameInput parse_csp_lines(const std::vector<Line>& lines) {
  expect_count(lines, 3, "csp");
  const auto stock_tokens = tokens(keyed(lines[1], "stock"));
  if (stock_tokens.size() != 1) throw parse_error(lines[1].number, "stock takes one value");
  CspInstance e{rational_token(lines[1], stock_tokens[0]), rational_list(lines[2], keyed(lines[2], "lengths"))};
  try {
    e.validate();
  } catch (const error& ex) {
    throw parse_error(sgn(e.stock) <= 0 ? lines[1].number : lines[2].number, ex.what());
  }
  std::optional<WeightedRep> rep;
  try {
    rep = game_from_instance(e);
  } catch (const invalid_game_error& ex) {
    throw parse_error(lines[2].number, ex.what());
  }
  SimpleGame game = game_from_weighted(*rep);
  return {InputKind::csp, std::move(game), std::move(rep), std::nullopt, std::move(e)};
}

}  // namespace detail

/// Parses any of the four formats, dispatching on the header line.
inline GameInput parse_input(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw parse_error(0, "empty input");
  const std::string& header = lines.front().text;
  if (header == "weighted") return detail::parse_weighted_lines(lines);
  if (header == "simple") return detail::parse_simple_lines(lines);
  if (header == "complete") return detail::parse_complete_lines(lines);
  if (header == "csp") return detail::parse_csp_lines(lines);
  throw parse_error(lines.front().number,
                    "unknown header '" + header + "' (expected weighted, simple, complete or csp)");
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error(0, "cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline GameInput read_input_file(const std::string& path) { return parse_input(read_text_file(path)); }

inline std::string write_weighted(const WeightedRep& rep) {
  std::string s = "weighted\nquota: " + to_string(rep.quota) + "\nweights:";
  for (const auto& w : rep.weights) s += " " + to_string(w);
  return s + "\n";
}

inline std::string write_simple(const SimpleGame& g) {
  std::string s = "simple\nplayers: " + std::to_string(g.players()) + "\n";
  for (Coalition c : g.min_winning()) {
    bool first = true;
    for (int p : c.members()) {
      s += (first ? "" : " ") + std::to_string(p + 1);
      first = false;
    }
    s += "\n";
  }
  return s;
}

inline std::string write_complete(const CompleteGame& g) {
  std::string s = "complete\nclasses:";
  for (int n : g.class_sizes()) s += " " + std::to_string(n);
  s += "\n";
  for (const auto& row : g.shift_min()) {
    s += "row:";
    for (int m : row) s += " " + std::to_string(m);
    s += "\n";
  }
  return s;
}

inline std::string write_csp(const CspInstance& e) {
  std::string s = "csp\nstock: " + to_string(e.stock) + "\nlengths:";
  for (const auto& l : e.lengths) s += " " + to_string(l);
  return s + "\n";
}

/// The input in its own format.
inline std::string write_input(const GameInput& in) {
  switch (in.kind) {
    case InputKind::weighted: return write_weighted(*in.weighted);
    case InputKind::complete: return write_complete(*in.complete);
    case InputKind::csp: return write_csp(*in.csp);
    case InputKind::simple: break;
  }
  return write_simple(in.game);
}

}  // namespace nakamura

#endif  // NAKAMURA_IO_HPP
