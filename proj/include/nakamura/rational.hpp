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

#ifndef NAKAMURA_RATIONAL_HPP
#define NAKAMURA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nakamura/common.hpp"

namespace nakamura {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed text or q = 0.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!digits(num)) return std::nullopt;
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  Integer p(num_s);
  Integer q(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!digits(den) || den[0] == '-' || den[0] == '+') return std::nullopt;
    q = Integer(std::string(den));
    if (q == 0) return std::nullopt;
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// "p/q" in lowest terms, or "p" when integral.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// Smallest integer >= r.
inline Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

/// Largest integer <= r.
inline Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw capacity_error("integer exceeds 64-bit range: " + z.get_str());
  return z.get_si();
}

/// ceil(a / b) for b > 0 as a finite count.
inline ExtendedCount ceil_ratio(const Rational& a, const Rational& b) {
  if (sgn(b) <= 0) return ExtendedCount::infinite();
  return ExtendedCount(to_int64(ceil(a / b)));
}

/// Least common multiple of the denominators.
inline Integer denominator_lcm(std::span<const Rational> values) {
  Integer l(1);
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

inline Rational sum(std::span<const Rational> values) {
  Rational s(0);
  for (const auto& v : values) s += v;
  return s;
}

}  // namespace nakamura

#endif  // NAKAMURA_RATIONAL_HPP
