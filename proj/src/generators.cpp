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

#include "disjenum/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "disjenum/clause_db.hpp"

namespace disjenum {

Formula gen_random_3sat(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random 3-SAT needs n >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  Formula f;
  f.num_vars = static_cast<std::size_t>(n);
  const int m = (3 * n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    std::vector<Lit> c;
    while (c.size() < 3) {
      const Var v = static_cast<Var>(pick(rng));
      bool fresh = true;
      for (Lit l : c) fresh = fresh && l.var() != v;
      if (fresh) c.push_back(Lit(v, (rng() & 1u) != 0));
    }
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Formula gen_disjoint_pairs(int pairs) {
  Formula f;
  f.num_vars = static_cast<std::size_t>(2 * pairs);
  for (int i = 0; i < pairs; ++i)
    f.clauses.push_back({Lit::pos(static_cast<Var>(2 * i)), Lit::pos(static_cast<Var>(2 * i + 1))});
  return f;
}

namespace {

PropAst random_tree(std::mt19937_64& rng, int num_vars, int depth) {
  std::uniform_int_distribution<int> var(0, num_vars - 1);
  if (depth == 0 || rng() % 4 == 0) {
    PropAst leaf = PropAst::variable(static_cast<Var>(var(rng)));
    return rng() % 3 == 0 ? PropAst::negation(std::move(leaf)) : leaf;
  }
  switch (rng() % 6) {
    case 0:
      return PropAst::negation(random_tree(rng, num_vars, depth - 1));
    case 1:
    case 2: {
      std::vector<PropAst> kids;
      const int k = 2 + static_cast<int>(rng() % 2);
      for (int i = 0; i < k; ++i) kids.push_back(random_tree(rng, num_vars, depth - 1));
      return rng() % 2 ? PropAst::conjunction(std::move(kids))
                       : PropAst::disjunction(std::move(kids));
    }
    case 3:
    case 4:
      return PropAst::iff(random_tree(rng, num_vars, depth - 1),
                          random_tree(rng, num_vars, depth - 1));
    default:
      return PropAst::implies(random_tree(rng, num_vars, depth - 1),
                              random_tree(rng, num_vars, depth - 1));
  }
}

}  // namespace

PropAst gen_random_prop_formula(int num_vars, int max_depth, std::uint64_t seed) {
  if (num_vars < 1) throw std::invalid_argument("need at least one variable");
  std::mt19937_64 rng(seed);
  return random_tree(rng, num_vars, max_depth);
}

Formula gen_random_dl_instance(const DlInstanceShape& shape, std::uint64_t seed) {
  if (shape.theory_vars < 2 || shape.atoms < 0 || shape.bool_vars < 0 || shape.max_width < 1)
    throw std::invalid_argument("bad difference-logic instance shape");
  if (shape.atoms > 13 * shape.theory_vars * (shape.theory_vars - 1))
    throw std::invalid_argument("more atoms than distinct difference constraints");
  std::mt19937_64 rng(seed);
  Formula f;
  f.num_vars = static_cast<std::size_t>(shape.atoms + shape.bool_vars);
  if (f.num_vars == 0) return f;
  for (int t = 0; t < shape.theory_vars; ++t) f.atoms.intern("t" + std::to_string(t));

  std::uniform_int_distribution<int> tv(0, shape.theory_vars - 1);
  std::uniform_int_distribution<int> bound(-6, 6);
  std::set<TheoryAtom> used;
  for (int a = 0; a < shape.atoms; ++a) {
    for (;;) {
      TheoryAtom atom{static_cast<TheoryVar>(tv(rng)), static_cast<TheoryVar>(tv(rng)),
                      Rational(bound(rng), 2)};
      if (atom.u == atom.v || !used.insert(atom).second) continue;
      f.atoms.bind(static_cast<Var>(a), atom);
      break;
    }
  }

  std::uniform_int_distribution<int> var(0, static_cast<int>(f.num_vars) - 1);
  std::uniform_int_distribution<int> width(1, shape.max_width);
  for (int i = 0; i < shape.clauses; ++i) {
    std::vector<Lit> c;
    const int w = width(rng);
    for (int j = 0; j < w; ++j) c.push_back(Lit(static_cast<Var>(var(rng)), (rng() & 1u) != 0));
    if (normalize_clause(c)) f.clauses.push_back(std::move(c));
  }
  return f;
}

}  // namespace disjenum
