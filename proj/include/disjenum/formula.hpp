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

#include <cstddef>
#include <vector>

#include "disjenum/literal.hpp"
#include "disjenum/theory_atom.hpp"

namespace disjenum {

/// CNF over variables partitioned into relevant (V_r) and irrelevant (V_i)
/// sets, optionally with theory atoms bound to some variables.
struct Formula {
  std::size_t num_vars = 0;
  std::vector<std::vector<Lit>> clauses;
  /// relevant[v] is true iff v is in V_r. Empty means "all relevant".
  std::vector<bool> relevant;
  AtomTable atoms;

  bool is_relevant(Var v) const { return relevant.empty() || relevant[v]; }
  bool has_projection() const;
  std::vector<Var> relevant_vars() const;
  std::vector<Var> irrelevant_vars() const;

  /// Sets V_r; every other variable becomes irrelevant.
  void set_relevant(const std::vector<Var>& vars);
};

}  // namespace disjenum
