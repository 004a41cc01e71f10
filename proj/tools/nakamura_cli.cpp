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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nakamura/report.hpp"

namespace {

using namespace nakamura;

constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvariant = 4;

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_analyze(const std::string& path, bool json) {
  const AnalysisReport r = analyze(read_input_file(path));
  if (json)
    print_json(to_json(r));
  else
    std::cout << to_text(r);
  return 0;
}

int cmd_bounds(const std::string& path, bool json) {
  const GameInput in = read_input_file(path);
  const auto max_losing = maximal_losing(in.game);
  const auto lp = max_quota_lp(in.game);
  const auto bounds = all_bounds(in, max_losing, lp, alpha_critical_certificate(in.game));
  if (json) {
    Json a = Json::array();
    for (const auto& b : bounds) a.push_back(to_json(b));
    print_json(a);
    return 0;
  }
  for (const auto& b : bounds) {
    std::cout << to_string(b.method) << " " << bound_text(b.lower) << " " << bound_text(b.upper);
    if (!b.upper_applicable) std::cout << " upper-not-applicable";
    std::cout << "\n";
  }
  return 0;
}

int cmd_nakamura(const std::string& path, bool witness, bool json) {
  const GameInput in = read_input_file(path);
  const NakamuraResult r = in.complete ? nakamura_complete(*in.complete) : nakamura_exact(in.game);
  require_invariant(r.value.is_infinite() || verify_witness(in.game, r.witness), "witness does not verify");
  if (json) {
    Json j = {{"value", to_json(r.value)}};
    if (witness) j["witness"] = to_json(r.witness);
    print_json(j);
    return 0;
  }
  std::cout << r.value.to_string() << "\n";
  if (witness)
    for (Coalition c : r.witness) std::cout << c.to_string() << "\n";
  return 0;
}

struct CensusArgs {
  int n_min = 1;
  int n_max = 1;
  std::string cls;
  int shards = 1;
  int shard = 0;
  bool json = false;
  int max_complete = 16;
  int max_weighted = 12;
};

int cmd_census(const CensusArgs& a) {
  const CensusClass cls = parse_census_class(a.cls);
  if (a.n_min < 1 || a.n_max < a.n_min) throw invalid_game_error("census needs 1 <= nmin <= nmax");
  CensusOptions opts;
  opts.shard = {a.shards, a.shard};
  opts.max_complete_n = a.max_complete;
  opts.max_weighted_n = a.max_weighted;
  const int cap = cls == CensusClass::complete_r1 ? opts.max_complete_n : opts.max_weighted_n;
  if (a.n_max > cap)
    throw capacity_error(to_string(cls) + " census limited to n <= " + std::to_string(cap) + ", got " +
                         std::to_string(a.n_max));
  const int last = std::max(a.n_max, 2);
  std::vector<CensusRow> rows;
  for (int n = a.n_min; n <= a.n_max; ++n) rows.push_back(census(n, cls, opts));
  if (a.json) {
    Json out = Json::array();
    for (const auto& row : rows) out.push_back(to_json(row, row.n));
    print_json(out);
    return 0;
  }
  std::cout << "n,inf";
  for (int k = 2; k <= last; ++k) std::cout << "," << k;
  std::cout << "\n";
  for (const auto& row : rows) {
    const auto values = row.table_row(row.n);
    std::cout << row.n;
    for (auto v : values) std::cout << "," << v;
    for (auto k = values.size(); k < static_cast<std::size_t>(last); ++k) std::cout << ",";
    std::cout << "\n";
  }
  return 0;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto r = parse_rational(tok);
    if (!r || !is_integral(*r)) throw invalid_game_error("'" + tok + "' is not an integer");
    out.push_back(to_int64(r->get_num()));
  }
  return out;
}

struct FamilyArgs {
  std::string tag;
  int n = 0, k = 0, t = 0, r = 0;
  std::string w, qbar = "1/2", sizes, out;
  bool json = false;
};

int cmd_family(const FamilyArgs& a) {
  FamilySpec spec = family_spec(a.tag, a.n, a.k, a.t);
  spec.r = a.r;
  if (!a.w.empty()) spec.w = parse_int_list(a.w);
  const auto q = parse_rational(a.qbar);
  if (!q) throw invalid_game_error("qbar '" + a.qbar + "' is not a fraction");
  spec.qbar = *q;
  if (!a.sizes.empty())
    for (auto x : parse_int_list(a.sizes)) spec.sizes.push_back(static_cast<int>(x));
  const FamilyGame f = construct_family(spec);
  const GameInput in = f.weighted ? GameInput{InputKind::weighted, f.game, f.weighted, std::nullopt, std::nullopt}
                                  : GameInput{InputKind::simple, f.game, std::nullopt, std::nullopt, std::nullopt};
  const std::string text = write_input(in);
  if (!a.out.empty()) {
    std::ofstream file(a.out);
    if (!file) throw parse_error(0, "cannot write '" + a.out + "'");
    file << text;
  }
  const AnalysisReport r = analyze(in);
  const std::string relation = f.stated_is_lower_bound ? ">=" : "=";
  const bool holds = f.stated_is_lower_bound ? r.nakamura.value >= f.stated : r.nakamura.value == f.stated;
  if (a.json) {
    Json j = to_json(r);
    j["family"] = {{"tag", f.tag},
                   {"stated", to_json(f.stated)},
                   {"relation", relation},
                   {"holds", holds}};
    print_json(j);
    return 0;
  }
  if (a.out.empty()) std::cout << text;
  std::cout << to_text(r);
  std::cout << "family      " << f.tag << ": nakamura " << r.nakamura.value.to_string() << " " << relation << " "
            << f.stated.to_string() << (holds ? " holds" : " FAILS") << "\n";
  return 0;
}

int cmd_csp_check(const std::string& path) {
  const GameInput in = read_input_file(path);
  if (!in.csp) throw parse_error(0, "'" + path + "' is not a csp file");
  const AnalysisReport r = analyze(in);
  Json bounds = Json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  Json j = {{"game", write_weighted(*in.weighted)},
            {"nu", to_json(r.nakamura.value)},
            {"z_b", r.csp->z_b},
            {"z_c", to_json(r.csp->z_c)},
            {"irup", r.csp->irup},
            {"mirup", r.csp->mirup},
            {"bounds", bounds},
            {"relaxation", to_json(r.relaxation)}};
  print_json(j);
  return 0;
}

GameClass parse_class_arg(const std::string& s) { return parse_game_class(s); }

SearchMode parse_mode(const std::string& s) {
  if (s == "auto") return SearchMode::automatic;
  if (s == "exhaustive") return SearchMode::exhaustive;
  if (s == "construction") return SearchMode::construction;
  throw invalid_game_error("unknown mode '" + s + "' (expected auto, exhaustive or construction)");
}

int cmd_maxnak(int n, int t, const std::string& cls, const std::string& mode, bool json) {
  MaxNakamuraOptions opts;
  opts.mode = parse_mode(mode);
  const MaxNakamuraResult r = max_nakamura(n, t, parse_class_arg(cls), opts);
  if (json) {
    Json j = {{"n", n},
              {"t", t},
              {"class", to_string(r.cls)},
              {"exhaustive", r.exhaustive},
              {"found", r.found},
              {"value", r.found ? Json(r.value) : Json(nullptr)},
              {"lower_bound_only", !r.exhaustive},
              {"games", r.games},
              {"witness_label", r.witness_label},
              {"witness", r.witness ? to_json(r.witness->min_winning()) : Json(nullptr)}};
    print_json(j);
    return 0;
  }
  if (!r.found) {
    std::cout << "no vetoer-free game with " << t << " classes on " << n << " players\n";
    return 0;
  }
  std::cout << to_string(r.cls) << "(" << n << "," << t << ") " << (r.exhaustive ? "= " : ">= ") << r.value << "\n";
  std::cout << "witness " << r.witness_label << "\n";
  if (r.witness) std::cout << write_simple(*r.witness);
  return 0;
}

int cmd_conjectures(const std::string& target, int t_only, const std::string& mode) {
  static const std::regex range(R"((\d+)(?:\.\.|-)(\d+))");
  std::smatch m;
  if (!std::filesystem::exists(target) && std::regex_match(target, m, range)) {
    const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    MaxNakamuraOptions opts;
    opts.mode = parse_mode(mode);
    std::cout << "n,t,value,exhaustive,band_low,band_high,inside\n";
    for (int t = 1; t <= hi; ++t) {
      if (t_only > 0 && t != t_only) continue;
      for (const auto& e : band_probe(lo, hi, t, opts)) {
        if (!e.result.found) continue;
        std::cout << e.n << "," << e.t << "," << e.result.value << "," << (e.result.exhaustive ? "yes" : "no") << ","
                  << e.band_low << "," << e.band_high << "," << (e.inside ? "yes" : "no") << "\n";
      }
    }
    return 0;
  }
  const GameInput in = read_input_file(target);
  const RelaxationReport r = in.csp ? relaxation_probe(*in.csp) : relaxation_probe(in.game);
  Json j = to_json(r);
  if (r.instance_z_b) {
    j["instance"] = {{"z_b", *r.instance_z_b},
                     {"z_c", to_json(*r.instance_z_c)},
                     {"irup", *r.irup},
                     {"mirup", *r.mirup}};
  }
  print_json(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nakamura numbers of simple games"};
  app.require_subcommand(1);

  std::string path;
  bool json = false, witness = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of a game or cutting stock file");
  analyze_cmd->add_option("file", path, "Input file")->required();
  analyze_cmd->add_flag("--json", json, "Emit JSON");

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds on the Nakamura number");
  bounds_cmd->add_option("file", path, "Input file")->required();
  bounds_cmd->add_flag("--json", json, "Emit JSON");

  auto* nak_cmd = app.add_subcommand("nakamura", "Exact Nakamura number");
  nak_cmd->add_option("file", path, "Input file")->required();
  nak_cmd->add_flag("--witness", witness, "Print winning coalitions with empty intersection");
  nak_cmd->add_flag("--json", json, "Emit JSON");

  CensusArgs census_args;
  bool csv = false;
  auto* census_cmd = app.add_subcommand("census", "Counts of one-row complete games per Nakamura number");
  census_cmd->add_option("nmin", census_args.n_min)->required();
  census_cmd->add_option("nmax", census_args.n_max)->required();
  census_cmd->add_option("class", census_args.cls, "complete_r1 or weighted_r1")->required();
  census_cmd->add_option("--shards", census_args.shards, "Number of shards");
  census_cmd->add_option("--shard", census_args.shard, "Shard index in [0, shards)");
  census_cmd->add_option("--max-complete-n", census_args.max_complete, "Cap for complete_r1");
  census_cmd->add_option("--max-weighted-n", census_args.max_weighted, "Cap for weighted_r1");
  auto* csv_flag = census_cmd->add_flag("--csv", csv, "Emit CSV (default)");
  auto* json_flag = census_cmd->add_flag("--json", census_args.json, "Emit JSON")->excludes(csv_flag);
  std::string census_format;
  census_cmd->add_option("--format", census_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->excludes(csv_flag)
      ->excludes(json_flag);

  FamilyArgs family_args;
  auto* family_cmd = app.add_subcommand("family", "Build a game of a named construction");
  family_cmd->add_option("tag", family_args.tag, "Construction tag")->required();
  family_cmd->add_option("--n", family_args.n, "Players");
  family_cmd->add_option("--k", family_args.k, "Size parameter");
  family_cmd->add_option("--t", family_args.t, "Classes");
  family_cmd->add_option("--r", family_args.r, "Replication or padding count");
  family_cmd->add_option("--w", family_args.w, "Comma-separated base weights");
  family_cmd->add_option("--qbar", family_args.qbar, "Relative quota p/q");
  family_cmd->add_option("--sizes", family_args.sizes, "Comma-separated class sizes");
  family_cmd->add_option("--out", family_args.out, "Write the game file here");
  family_cmd->add_flag("--json", family_args.json, "Emit JSON");

  auto* csp_cmd = app.add_subcommand("csp-check", "Cutting stock instance against its game");
  csp_cmd->add_option("file", path, "csp file")->required();

  int max_n = 0, max_t = 0;
  std::string cls = "T", mode = "auto";
  auto* maxnak_cmd = app.add_subcommand("maxnak", "Maximum Nakamura number for n players and t classes");
  maxnak_cmd->add_option("n", max_n)->required();
  maxnak_cmd->add_option("t", max_t)->required();
  maxnak_cmd->add_option("class", cls, "S (simple), C (complete) or T (weighted)")->required();
  maxnak_cmd->add_option("--mode", mode, "auto, exhaustive or construction");
  maxnak_cmd->add_flag("--json", json, "Emit JSON");

  std::string target;
  int t_only = 0;
  auto* conj_cmd = app.add_subcommand("conjectures", "Relaxation bound for a file, or class band over a range a..b");
  conj_cmd->add_option("target", target, "File or range")->required();
  conj_cmd->add_option("--t", t_only, "Only this class count (range mode)");
  conj_cmd->add_option("--mode", mode, "auto, exhaustive or construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(path, json);
    if (*bounds_cmd) return cmd_bounds(path, json);
    if (*nak_cmd) return cmd_nakamura(path, witness, json);
    if (*census_cmd) {
      if (census_format == "json") census_args.json = true;
      return cmd_census(census_args);
    }
    if (*family_cmd) return cmd_family(family_args);
    if (*csp_cmd) return cmd_csp_check(path);
    if (*maxnak_cmd) return cmd_maxnak(max_n, max_t, cls, mode, json);
    if (*conj_cmd) return cmd_conjectures(target, t_only, mode);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const invariant_error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const invalid_game_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
