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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disjenum/formula.hpp"
#include "disjenum/literal.hpp"

namespace disjenum {

/// Propositional formula tree. Var ids are 0-based (identifier order).
struct PropAst {
  enum class Kind { Var, Not, And, Or, Iff, Implies };

  Kind kind = Kind::Var;
  Var var = 0;
  std::vector<PropAst> children;

  static PropAst variable(Var v);
  static PropAst negation(PropAst child);
  static PropAst conjunction(std::vector<PropAst> children);
  static PropAst disjunction(std::vector<PropAst> children);
  static PropAst iff(PropAst left, PropAst right);
  static PropAst implies(PropAst left, PropAst right);

  /// One past the largest variable id, 0 for a variable-free tree.
  std::size_t num_vars() const;
  bool evaluate(const std::vector<bool>& assignment) const;
  std::string to_string() const;
};

struct ParsedFormula {
  PropAst ast;
  std::vector<std::string> names;  // names[v] is the identifier of variable v
};

/// Grammar, loosest binding first:
///   iff     := implies ("<->" implies)*     left associative
///   implies := or ("->" implies)?           right associative
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "!" unary | "(" iff ")" | identifier
/// Identifiers are [A-Za-z_][A-Za-z0-9_.]* and get ids in order of first
/// appearance. Throws ParseError.
ParsedFormula parse_prop_formula(std::string_view text);

enum class CnfEncoding { Tseitin, PlaistedGreenbaum };

/// Equisatisfiable CNF. Variables 0..num_vars-1 keep their ids and form V_r,
/// definition variables are appended and form V_i. `num_vars` defaults to
/// ast.num_vars().
Formula cnfize(const PropAst& ast, CnfEncoding encoding,
               std::optional<std::size_t> num_vars = std::nullopt);

}  // namespace disjenum
