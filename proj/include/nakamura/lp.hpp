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

#ifndef NAKAMURA_LP_HPP
#define NAKAMURA_LP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "nakamura/common.hpp"
#include "nakamura/rational.hpp"

namespace nakamura::lp {

enum class Sense { le, ge, eq };
enum class Status { optimal, infeasible, unbounded };

/// maximize c.x  subject to  rows[i].x (sense[i]) rhs[i],  x >= 0.
struct Problem {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;

  std::size_t variables() const { return objective.size(); }

  void add_row(std::vector<Rational> row, Sense sense, Rational b) {
    rows.push_back(std::move(row));
    senses.push_back(sense);
    rhs.push_back(std::move(b));
  }
};

struct Solution {
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;
  /// Row duals y = c_B B^-1 of the final basis; objective = rhs . y.
  std::vector<Rational> duals;
};

/// Dense two-phase primal simplex in exact rational arithmetic with Bland's
/// smallest-index rule for both the entering and the leaving variable.
class Simplex {
 public:
  explicit Simplex(const Problem& p) : p_(p) {}

  Solution solve() {
    build();
    Solution out;
    if (artificials_ > 0) {
      // Phase 1: maximise -(sum of artificials).
      std::vector<Rational> phase1(cols_, Rational(0));
      for (std::size_t j = first_artificial_; j < cols_; ++j) phase1[j] = -1;
      set_objective(phase1);
      run(/*allow_artificial=*/true);
      if (sgn(objective_value()) < 0) return out;
      drive_out_artificials();
    }
    std::vector<Rational> phase2(cols_, Rational(0));
    for (std::size_t j = 0; j < p_.variables(); ++j) phase2[j] = p_.objective[j];
    set_objective(phase2);
    if (!run(/*allow_artificial=*/false)) {
      out.status = Status::unbounded;
      return out;
    }
    out.status = Status::optimal;
    out.value = objective_value();
    out.x.assign(p_.variables(), Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < p_.variables()) out.x[basis_[i]] = rhs(i);
    out.duals.assign(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      Rational y(0);
      for (std::size_t k = 0; k < m_; ++k) {
        const Rational& cb = cost_[basis_[k]];
        if (sgn(cb) != 0) y += cb * tab_[k][identity_col_[i]];
      }
      out.duals[i] = flipped_[i] ? Rational(-y) : y;
    }
    return out;
  }

 private:
  void build() {
    m_ = p_.rows.size();
    const std::size_t n = p_.variables();
    flipped_.assign(m_, false);
    std::vector<Sense> sense = p_.senses;
    for (std::size_t i = 0; i < m_; ++i) {
      if (p_.rows[i].size() != n) throw invalid_game_error("LP row has wrong width");
      if (sgn(p_.rhs[i]) < 0) {
        flipped_[i] = true;
        if (sense[i] == Sense::le)
          sense[i] = Sense::ge;
        else if (sense[i] == Sense::ge)
          sense[i] = Sense::le;
      }
    }
    std::size_t slacks = 0;
    artificials_ = 0;
    for (auto s : sense) {
      if (s != Sense::eq) ++slacks;
      if (s != Sense::le) ++artificials_;
    }
    first_artificial_ = n + slacks;
    cols_ = first_artificial_ + artificials_;
    tab_.assign(m_, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(m_, 0);
    identity_col_.assign(m_, 0);
    std::size_t next_slack = n;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = flipped_[i];
      for (std::size_t j = 0; j < n; ++j) tab_[i][j] = flip ? Rational(-p_.rows[i][j]) : p_.rows[i][j];
      tab_[i][cols_] = flip ? Rational(-p_.rhs[i]) : p_.rhs[i];
      if (sense[i] == Sense::le) {
        tab_[i][next_slack] = 1;
        basis_[i] = identity_col_[i] = next_slack++;
      } else {
        if (sense[i] == Sense::ge) tab_[i][next_slack++] = -1;
        tab_[i][next_art] = 1;
        basis_[i] = identity_col_[i] = next_art++;
      }
    }
  }

  const Rational& rhs(std::size_t i) const { return tab_[i][cols_]; }

  void set_objective(const std::vector<Rational>& c) {
    cost_ = c;
    // reduced[j] = c_j - c_B B^-1 A_j; value tracked in reduced[cols_].
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(tab_[i][j]) != 0) reduced_[j] -= cb * tab_[i][j];
    }
  }

  Rational objective_value() const { return -reduced_[cols_]; }

  // Returns false when the objective is unbounded.
  bool run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ : first_artificial_;
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < limit; ++j)
        if (sgn(reduced_[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(tab_[i][enter]) <= 0) continue;
        Rational ratio = rhs(i) / tab_[i][enter];
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pr = tab_[row];
    const Rational inv = 1 / pr[col];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(pr[j]) == 0) continue;
      pr[j] *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& r) {
      if (sgn(r[col]) == 0) return;
      const Rational f = r[col];
      for (std::size_t j : nz) r[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != row) eliminate(tab_[i]);
    eliminate(reduced_);
    basis_[row] = col;
  }

  // After a feasible phase 1, basic artificials sit at level zero; pivot them
  // out where the row has a structural or slack entry. Rows without one are
  // redundant and keep their artificial basic at zero.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j)
        if (sgn(tab_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  const Problem& p_;
  std::size_t m_ = 0;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t artificials_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> reduced_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_col_;
  std::vector<bool> flipped_;
};

inline Solution maximize(const Problem& p) { return Simplex(p).solve(); }

/// minimize c.x; the returned value and duals refer to the minimisation.
inline Solution minimize(Problem p) {
  for (auto& c : p.objective) c = -c;
  Solution s = Simplex(p).solve();
  if (s.status == Status::optimal) {
    s.value = -s.value;
    for (auto& y : s.duals) y = -y;
  }
  return s;
}

}  // namespace nakamura::lp

#endif  // NAKAMURA_LP_HPP
