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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "disjenum/literal.hpp"

namespace disjenum {

using Rational = boost::rational<std::int64_t>;
using TheoryVar = std::uint32_t;

/// Difference constraint `u - v <= bound` over rational theory variables.
struct TheoryAtom {
  TheoryVar u = 0;
  TheoryVar v = 0;
  Rational bound{0};

  bool operator==(const TheoryAtom& o) const {
    return u == o.u && v == o.v && bound == o.bound;
  }
  bool operator<(const TheoryAtom& o) const {
    if (u != o.u) return u < o.u;
    if (v != o.v) return v < o.v;
    return bound < o.bound;
  }
};

/// Interned theory-variable names plus the binding Boolean variable <-> atom.
class AtomTable {
 public:
  TheoryVar intern(const std::string& name);
  std::optional<TheoryVar> lookup(const std::string& name) const;
  const std::string& name(TheoryVar t) const { return names_[t]; }
  std::size_t num_theory_vars() const { return names_.size(); }

  /// Binds `var` to `atom`. Rebinding a variable or binding an atom twice is
  /// rejected with std::invalid_argument.
  void bind(Var var, const TheoryAtom& atom);
  std::optional<Var> find(const TheoryAtom& atom) const;
  const TheoryAtom* atom_of(Var var) const;

  /// Bound variables in binding order.
  const std::vector<Var>& bound_vars() const { return bound_; }
  bool empty() const { return bound_.empty(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, TheoryVar> index_;
  std::map<Var, TheoryAtom> by_var_;
  std::map<TheoryAtom, Var> by_atom_;
  std::vector<Var> bound_;
};

}  // namespace disjenum
