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

#include "disjenum/formula.hpp"
#include "disjenum/prop_formula.hpp"

namespace disjenum {

/// ceil(1.5 n) clauses, each over 3 distinct variables with uniform signs.
/// Deterministic in (n, seed). Throws std::invalid_argument for n < 3.
Formula gen_random_3sat(int n, std::uint64_t seed);

/// (x1 | x2) & (x3 | x4) & ... with `pairs` clauses; 3^pairs models.
Formula gen_disjoint_pairs(int pairs);

/// Random tree over variables 0..num_vars-1 using every connective; leaves
/// are reached at `max_depth` or earlier at random.
PropAst gen_random_prop_formula(int num_vars, int max_depth, std::uint64_t seed);

struct DlInstanceShape {
  int theory_vars = 4;
  int atoms = 6;
  int bool_vars = 2;  // plain Boolean variables besides the atoms
  int clauses = 6;
  int max_width = 3;
};

/// Random CNF whose first `atoms` variables are bound to distinct
/// difference constraints t_i - t_j <= q over `theory_vars` named t0, t1, ...
/// Bounds are small integers or halves.
Formula gen_random_dl_instance(const DlInstanceShape& shape, std::uint64_t seed);

}  // namespace disjenum
