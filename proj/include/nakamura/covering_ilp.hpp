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

#ifndef NAKAMURA_COVERING_ILP_HPP
#define NAKAMURA_COVERING_ILP_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "nakamura/common.hpp"

namespace nakamura {

struct CoveringIlpResult {
  bool feasible = false;
  std::int64_t value = 0;
  std::vector<std::int64_t> multiplicity;
};

namespace detail {

class CoveringIlp {
 public:
  CoveringIlp(const std::vector<std::vector<std::int64_t>>& coeff, const std::vector<std::int64_t>& demand)
      : a_(coeff), b_(demand), vars_(coeff.size()), rows_(demand.size()) {
    cap_.assign(vars_, 0);
    for (std::size_t v = 0; v < vars_; ++v) {
      if (a_[v].size() != rows_) throw invalid_game_error("covering ILP: coefficient width mismatch");
      for (std::size_t j = 0; j < rows_; ++j) {
        if (a_[v][j] < 0) throw invalid_game_error("covering ILP: negative coefficient");
        if (a_[v][j] > 0 && b_[j] > 0) cap_[v] = std::max(cap_[v], ceil_div(b_[j], a_[v][j]));
      }
    }
    // suffix_max_[v][j] = max over u >= v of a_[u][j]
    suffix_max_.assign(vars_ + 1, std::vector<std::int64_t>(rows_, 0));
    for (std::size_t v = vars_; v-- > 0;)
      for (std::size_t j = 0; j < rows_; ++j) suffix_max_[v][j] = std::max(suffix_max_[v + 1][j], a_[v][j]);
  }

  CoveringIlpResult run() {
    CoveringIlpResult out;
    std::vector<std::int64_t> rem = b_;
    for (auto& r : rem) r = std::max<std::int64_t>(r, 0);
    if (bound(0, rem) == kInfeasible) return out;
    out.feasible = true;
    greedy();
    std::vector<std::int64_t> x(vars_, 0);
    search(0, rem, 0, x);
    out.value = best_;
    out.multiplicity = best_x_;
    return out;
  }

 private:
  static constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::max() / 4;

  static std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

  std::int64_t bound(std::size_t v, const std::vector<std::int64_t>& rem) const {
    std::int64_t lb = 0;
    for (std::size_t j = 0; j < rows_; ++j) {
      if (rem[j] <= 0) continue;
      if (suffix_max_[v][j] == 0) return kInfeasible;
      lb = std::max(lb, ceil_div(rem[j], suffix_max_[v][j]));
    }
    return lb;
  }

  void greedy() {
    std::vector<std::int64_t> rem = b_;
    std::vector<std::int64_t> x(vars_, 0);
    std::int64_t used = 0;
    auto open = [&] { return std::any_of(rem.begin(), rem.end(), [](auto r) { return r > 0; }); };
    while (open()) {
      std::size_t arg = 0;
      std::int64_t gain = -1;
      for (std::size_t v = 0; v < vars_; ++v) {
        std::int64_t g = 0;
        for (std::size_t j = 0; j < rows_; ++j) g += std::min(std::max<std::int64_t>(rem[j], 0), a_[v][j]);
        if (g > gain) {
          gain = g;
          arg = v;
        }
      }
      ++x[arg];
      ++used;
      for (std::size_t j = 0; j < rows_; ++j) rem[j] -= a_[arg][j];
    }
    best_ = used;
    best_x_ = x;
  }

  void search(std::size_t v, const std::vector<std::int64_t>& rem, std::int64_t used,
              std::vector<std::int64_t>& x) {
    const std::int64_t lb = bound(v, rem);
    if (lb == 0) {
      if (used < best_) {
        best_ = used;
        best_x_ = x;
      }
      return;
    }
    if (lb == kInfeasible || v == vars_ || used + lb >= best_) return;
    const std::int64_t top = std::min(cap_[v], best_ - 1 - used);
    std::vector<std::int64_t> next(rows_);
    for (std::int64_t k = top; k >= 0; --k) {
      for (std::size_t j = 0; j < rows_; ++j) next[j] = std::max<std::int64_t>(rem[j] - k * a_[v][j], 0);
      x[v] = k;
      search(v + 1, next, used + k, x);
      x[v] = 0;
    }
  }

  const std::vector<std::vector<std::int64_t>>& a_;
  const std::vector<std::int64_t>& b_;
  std::size_t vars_;
  std::size_t rows_;
  std::vector<std::int64_t> cap_;
  std::vector<std::vector<std::int64_t>> suffix_max_;
  std::int64_t best_ = 0;
  std::vector<std::int64_t> best_x_;
};

}  // namespace detail

/// min sum x_v  s.t.  sum_v coeff[v][j] x_v >= demand[j],  x integral >= 0,
/// with non-negative coefficients. Multiplicities above
/// max_j ceil(demand_j / coeff_vj) are never needed and are not explored.
inline CoveringIlpResult solve_covering_ilp(const std::vector<std::vector<std::int64_t>>& coeff,
                                            const std::vector<std::int64_t>& demand) {
  return detail::CoveringIlp(coeff, demand).run();
}

}  // namespace nakamura

#endif  // NAKAMURA_COVERING_ILP_HPP
