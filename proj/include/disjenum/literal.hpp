// Copyright 2026 The disjenum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <ostream>

namespace disjenum {

/// Zero-based Boolean variable index. DIMACS variable `k` maps to `Var{k - 1}`.
using Var = std::uint32_t;

/// A variable with a polarity, packed as `2 * var + negated`.
///
/// Negation only flips the low bit, so double negation cannot be represented
/// as anything other than the original literal.
class Lit {
 public:
  constexpr Lit() = default;
  constexpr Lit(Var v, bool negated) : code_(2 * v + (negated ? 1u : 0u)) {}

  static constexpr Lit pos(Var v) { return Lit(v, false); }
  static constexpr Lit neg(Var v) { return Lit(v, true); }
  static constexpr Lit from_code(std::uint32_t code) {
    Lit l;
    l.code_ = code;
    return l;
  }
  static Lit from_dimacs(int d) {
    return Lit(static_cast<Var>(std::abs(d) - 1), d < 0);
  }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negated() const { return (code_ & 1u) != 0; }
  constexpr std::uint32_t code() const { return code_; }
  int to_dimacs() const {
    const int v = static_cast<int>(var()) + 1;
    return negated() ? -v : v;
  }

  constexpr Lit operator~() const { return from_code(code_ ^ 1u); }
  constexpr auto operator<=>(const Lit&) const = default;

 private:
  std::uint32_t code_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Lit l) {
  return os << l.to_dimacs();
}

/// Three-valued assignment of a variable.
enum class LBool : std::uint8_t { False = 0, True = 1, Undef = 2 };

constexpr LBool operator^(LBool b, bool flip) {
  if (b == LBool::Undef) return b;
  return static_cast<LBool>(static_cast<std::uint8_t>(b) ^ (flip ? 1u : 0u));
}

}  // namespace disjenum

template <>
struct std::hash<disjenum::Lit> {
  std::size_t operator()(disjenum::Lit l) const noexcept {
    return std::hash<std::uint32_t>{}(l.code());
  }
};
