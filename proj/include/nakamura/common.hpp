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

#ifndef NAKAMURA_COMMON_HPP
#define NAKAMURA_COMMON_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nakamura {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural limit (player count, enumeration size) was exceeded.
class capacity_error : public error {
 public:
  using error::error;
};

/// The input does not describe a valid game / instance.
class invalid_game_error : public error {
 public:
  using error::error;
};

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class parse_error : public error {
 public:
  parse_error(int line, const std::string& what)
      : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An internal consistency check failed; always a bug.
class invariant_error : public error {
 public:
  using error::error;
};

inline void require_invariant(bool ok, const char* what) {
  if (!ok) throw invariant_error(what);
}

/// Non-negative integer or infinity. Infinity compares greater than every
/// finite value.
class ExtendedCount {
 public:
  constexpr ExtendedCount() = default;
  constexpr explicit ExtendedCount(std::int64_t value) : value_(value) {}

  static constexpr ExtendedCount infinite() { return ExtendedCount(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr std::int64_t value() const {
    if (!value_) throw std::logic_error("ExtendedCount: value of infinity");
    return *value_;
  }

  std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("inf");
  }

  friend constexpr bool operator==(const ExtendedCount&, const ExtendedCount&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedCount& a,
                                                    const ExtendedCount& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtendedCount& c) {
    return os << c.to_string();
  }

 private:
  std::optional<std::int64_t> value_;
};

inline constexpr int kMaxPlayers = 64;

}  // namespace nakamura

#endif  // NAKAMURA_COMMON_HPP
