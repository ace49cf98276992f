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

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "disjenum/difference_logic.hpp"
#include "disjenum/generators.hpp"
#include "disjenum/oracle.hpp"
#include "test_support.hpp"

namespace disjenum {
namespace {

using testing::run;

// Stand-alone context: atoms bound to consecutive variables.
class TableContext : public TheoryContext {
 public:
  TheoryAtom atom(const std::string& u, const std::string& v, Rational c) {
    return TheoryAtom{table.intern(u), table.intern(v), c};
  }
  Var add(const TheoryAtom& a) { return register_atom(a); }
  const AtomTable& atoms() const override { return table; }
  Var register_atom(const TheoryAtom& a) override {
    if (auto v = table.find(a)) return *v;
    const Var v = next++;
    table.bind(v, a);
    return v;
  }
  AssignedAtom assigned(Var v, bool value) const { return {v, *table.atom_of(v), value}; }

  AtomTable table;
  Var next = 0;
};

std::vector<Lit> sorted(std::vector<Lit> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(DlWeightTest, LexicographicOrder) {
  EXPECT_LT((DlWeight{Rational(1), -1}), (DlWeight{Rational(1), 0}));
  EXPECT_LT((DlWeight{Rational(0), 5}), (DlWeight{Rational(1, 2), -3}));
  EXPECT_EQ((DlWeight{Rational(1), -1} + DlWeight{Rational(-1), 0}), (DlWeight{Rational(0), -1}));
}

TEST(DlEdgeTest, TrueAndFalseAtoms) {
  const TheoryAtom a{0, 1, Rational(3)};
  const DlEdge t = edge_for({7, a, true});
  EXPECT_EQ(t.from, 1u);
  EXPECT_EQ(t.to, 0u);
  EXPECT_EQ(t.weight, (DlWeight{Rational(3), 0}));
  EXPECT_EQ(t.lit, Lit::pos(7));
  const DlEdge f = edge_for({7, a, false});
  EXPECT_EQ(f.from, 0u);
  EXPECT_EQ(f.to, 1u);
  EXPECT_EQ(f.weight, (DlWeight{Rational(-3), -1}));
  EXPECT_EQ(f.lit, Lit::neg(7));
}

TEST(DifferenceLogicTest, NegativeCycleConflict) {
  TableContext ctx;
  const Var a1 = ctx.add(ctx.atom("x", "y", Rational(0)));
  const Var a2 = ctx.add(ctx.atom("y", "x", Rational(-1)));
  DifferenceLogic dl;
  const TheoryVerdict v = dl.check({ctx.assigned(a1, true), ctx.assigned(a2, true)}, ctx);
  ASSERT_EQ(v.outcome, TheoryVerdict::Outcome::Conflict);
  EXPECT_EQ(sorted(v.conflict), sorted({Lit::neg(a1), Lit::neg(a2)}));
}

TEST(DifferenceLogicTest, ConsistentChains) {
  TableContext ctx;
  const Var a1 = ctx.add(ctx.atom("x", "y", Rational(5)));
  const Var a2 = ctx.add(ctx.atom("y", "z", Rational(3)));
  const Var a3 = ctx.add(ctx.atom("x", "z", Rational(9)));
  DifferenceLogic dl;
  EXPECT_EQ(dl.check({}, ctx).outcome, TheoryVerdict::Outcome::Consistent);
  EXPECT_EQ(dl.check({ctx.assigned(a1, true), ctx.assigned(a2, true), ctx.assigned(a3, true)}, ctx)
                .outcome,
            TheoryVerdict::Outcome::Consistent);
}

TEST(DifferenceLogicTest, StrictZeroCycleConflicts) {
  // x <= y <= z together with x > z.
  TableContext ctx;
  const Var a1 = ctx.add(ctx.atom("x", "y", Rational(0)));
  const Var a2 = ctx.add(ctx.atom("y", "z", Rational(0)));
  const Var a3 = ctx.add(ctx.atom("x", "z", Rational(0)));
  DifferenceLogic dl;
  const TheoryVerdict v =
      dl.check({ctx.assigned(a1, true), ctx.assigned(a2, true), ctx.assigned(a3, false)}, ctx);
  ASSERT_EQ(v.outcome, TheoryVerdict::Outcome::Conflict);
  EXPECT_EQ(sorted(v.conflict), sorted({Lit::neg(a1), Lit::neg(a2), Lit::pos(a3)}));
  // Non-strict zero cycle: x = y = z is fine.
  EXPECT_EQ(dl.check({ctx.assigned(a1, true), ctx.assigned(a2, true)}, ctx).outcome,
            TheoryVerdict::Outcome::Consistent);
}

TEST(DifferenceLogicTest, UnknownTheoryVariable) {
  TableContext ctx;
  DifferenceLogic dl;
  const AssignedAtom bogus{0, TheoryAtom{3, 4, Rational(1)}, true};
  EXPECT_THROW(dl.check({bogus}, ctx), std::invalid_argument);
}

TEST(DifferenceLogicTest, ImpliesTrueAlongPath) {
  TableContext ctx;
  const Var a1 = ctx.add(ctx.atom("x", "y", Rational(2)));
  const Var a2 = ctx.add(ctx.atom("y", "z", Rational(3)));
  const Var a3 = ctx.add(ctx.atom("x", "z", Rational(10)));
  DifferenceLogic dl;
  const TheoryVerdict v =
      dl.propagate({ctx.assigned(a1, true), ctx.assigned(a2, true)}, {a3}, ctx);
  ASSERT_EQ(v.outcome, TheoryVerdict::Outcome::Implied);
  ASSERT_EQ(v.implied.size(), 1u);
  EXPECT_EQ(v.implied[0].lit, Lit::pos(a3));
  EXPECT_EQ(sorted(v.implied[0].reason), sorted({Lit::neg(a1), Lit::neg(a2), Lit::pos(a3)}));
}

TEST(DifferenceLogicTest, ImpliesFalseToAvoidCycle) {
  TableContext ctx;
  const Var a1 = ctx.add(ctx.atom("x", "y", Rational(2)));
  const Var a2 = ctx.add(ctx.atom("y", "x", Rational(-3)));
  DifferenceLogic dl;
  const TheoryVerdict v = dl.propagate({ctx.assigned(a1, true)}, {a2}, ctx);
  ASSERT_EQ(v.implied.size(), 1u);
  EXPECT_EQ(v.implied[0].lit, Lit::neg(a2));
  EXPECT_EQ(sorted(v.implied[0].reason), sorted({Lit::neg(a1), Lit::neg(a2)}));
}

TEST(DifferenceLogicTest, NothingAssignedImpliesNothing) {
  TableContext ctx;
  const Var a1 = ctx.add(ctx.atom("x", "y", Rational(2)));
  DifferenceLogic dl;
  const TheoryVerdict v = dl.propagate({}, {a1}, ctx);
  EXPECT_EQ(v.outcome, TheoryVerdict::Outcome::Consistent);
  EXPECT_TRUE(v.implied.empty());
}

// Independent consistency test: bounds are multiples of 1/2, so scaling by
// 2 * (edges + 1) makes every weight integral and leaves room to model a
// strict bound as one unit less without changing any non-strict verdict.
bool consistent_by_floyd_warshall(const AtomTable& table,
                                  const std::vector<std::pair<TheoryAtom, bool>>& assigned) {
  const std::size_t n = table.num_theory_vars();
  const long long scale = 2 * static_cast<long long>(assigned.size() + 1);
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [atom, value] : assigned) {
    const Rational c = atom.bound * 2;
    EXPECT_EQ(c.denominator(), 1);
    const long long w = c.numerator() * (scale / 2);
    // u - v <= c is the edge v -> u; its negation v - u <= -c - strict.
    if (value) {
      d[atom.v][atom.u] = std::min(d[atom.v][atom.u], w);
    } else {
      d[atom.u][atom.v] = std::min(d[atom.u][atom.v], -w - 1);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] < kInf && d[k][j] < kInf) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (std::size_t i = 0; i < n; ++i)
    if (d[i][i] < 0) return false;
  return true;
}

TEST(DifferenceLogicTest, AgreesWithIndependentOracle) {
  std::mt19937_64 rng(11);
  DifferenceLogic dl;
  int conflicts = 0;
  int implications = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    DlInstanceShape shape;
    shape.theory_vars = 3 + static_cast<int>(seed % 3);
    shape.atoms = 6 + static_cast<int>(seed % 5);
    const Formula f = gen_random_dl_instance(shape, seed);
    TableContext ctx;
    ctx.table = f.atoms;
    std::vector<AssignedAtom> assigned;
    std::vector<Var> unassigned;
    std::vector<std::pair<TheoryAtom, bool>> plain;
    for (Var v : f.atoms.bound_vars()) {
      if (rng() % 3 == 0) {
        unassigned.push_back(v);
        continue;
      }
      const bool value = rng() % 2 == 0;
      assigned.push_back({v, *f.atoms.atom_of(v), value});
      plain.emplace_back(*f.atoms.atom_of(v), value);
    }
    SCOPED_TRACE("seed " + std::to_string(seed));

    const bool expect_ok = consistent_by_floyd_warshall(f.atoms, plain);
    const TheoryVerdict checked = dl.check(assigned, ctx);
    ASSERT_EQ(checked.outcome != TheoryVerdict::Outcome::Conflict, expect_ok);
    if (!expect_ok) {
      ++conflicts;
      // The conflict clause alone must already be inconsistent.
      std::vector<std::pair<TheoryAtom, bool>> core;
      for (Lit l : checked.conflict) {
        const auto it = std::find_if(assigned.begin(), assigned.end(),
                                     [&](const AssignedAtom& a) { return a.lit() == ~l; });
        ASSERT_NE(it, assigned.end()) << "conflict literal not falsified by the assignment";
        core.emplace_back(it->atom, it->value);
      }
      EXPECT_FALSE(consistent_by_floyd_warshall(f.atoms, core));
      continue;
    }

    const TheoryVerdict prop = dl.propagate(assigned, unassigned, ctx);
    for (Var v : unassigned) {
      auto with = plain;
      with.emplace_back(*f.atoms.atom_of(v), true);
      const bool true_ok = consistent_by_floyd_warshall(f.atoms, with);
      with.back().second = false;
      const bool false_ok = consistent_by_floyd_warshall(f.atoms, with);
      ASSERT_TRUE(true_ok || false_ok);
      const auto it = std::find_if(prop.implied.begin(), prop.implied.end(),
                                   [&](const TheoryImplication& i) { return i.lit.var() == v; });
      if (true_ok && false_ok) {
        EXPECT_EQ(it, prop.implied.end()) << "spurious implication";
        continue;
      }
      ASSERT_NE(it, prop.implied.end()) << "missed implication";
      ++implications;
      EXPECT_EQ(it->lit, true_ok ? Lit::pos(v) : Lit::neg(v));
      // The reason clause is the implied literal plus falsified premises
      // that already entail it.
      EXPECT_EQ(it->reason.front(), it->lit);
      std::vector<std::pair<TheoryAtom, bool>> premises{{*f.atoms.atom_of(v), !true_ok}};
      for (std::size_t i = 1; i < it->reason.size(); ++i) {
        const Lit l = it->reason[i];
        const auto a = std::find_if(assigned.begin(), assigned.end(),
                                    [&](const AssignedAtom& x) { return x.lit() == ~l; });
        ASSERT_NE(a, assigned.end());
        premises.emplace_back(a->atom, a->value);
      }
      EXPECT_FALSE(consistent_by_floyd_warshall(f.atoms, premises));
    }
  }
  EXPECT_GT(conflicts, 10);
  EXPECT_GT(implications, 10);
}

TEST(RegisterAtomTest, IdempotentAndIrrelevant) {
  Formula f = testing::cnf(2, {{1, 2}});
  const TheoryVar x = f.atoms.intern("x");
  const TheoryVar y = f.atoms.intern("y");
  f.atoms.bind(0, TheoryAtom{x, y, Rational(1)});
  SolverConfig c;
  c.mode = Mode::AllSmt;
  Solver s(f, c);
  EXPECT_EQ(s.register_atom(TheoryAtom{x, y, Rational(1)}), 0u);
  const Var fresh = s.register_atom(TheoryAtom{y, x, Rational(0)});
  EXPECT_EQ(fresh, 2u);
  EXPECT_EQ(s.register_atom(TheoryAtom{y, x, Rational(0)}), fresh);
  EXPECT_EQ(s.num_vars(), 3u);
  EXPECT_FALSE(s.is_relevant(fresh));
  EXPECT_TRUE(s.is_relevant(0));
  EXPECT_EQ(s.stats().registered_atoms, 1u);
  EXPECT_EQ(*s.atoms().find(TheoryAtom{y, x, Rational(0)}), fresh);
}

// Difference logic that, on every check, introduces the tighter atom
// u - v <= c - 1 for each true input atom. The new atoms are irrelevant and
// constrain nothing that the input atoms do not, so the projected models
// are unchanged.
class SplittingTheory : public DifferenceLogic {
 public:
  explicit SplittingTheory(std::size_t input_vars) : input_vars_(input_vars) {}

  TheoryVerdict check(const std::vector<AssignedAtom>& assigned, TheoryContext& ctx) override {
    for (const AssignedAtom& a : assigned)
      if (a.var < input_vars_ && a.value)
        ctx.register_atom(TheoryAtom{a.atom.u, a.atom.v, a.atom.bound - 1});
    return DifferenceLogic::check(assigned, ctx);
  }

 private:
  std::size_t input_vars_;
};

class AllSmtTest : public ::testing::TestWithParam<std::tuple<ShrinkerKind, bool>> {};

TEST_P(AllSmtTest, MatchesTheoryOracle) {
  const auto [shrinker, propagation] = GetParam();
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Formula f = gen_random_dl_instance({}, seed);
    SolverConfig c;
    c.mode = Mode::AllSmt;
    c.shrinker = shrinker;
    c.theory_propagation = propagation;
    DifferenceLogic dl;
    const auto r = run(f, c, &dl);
    const ModelSet truth = brute_force(f, &dl);
    const VerificationReport report = verify_enumeration(r.models, truth);
    EXPECT_TRUE(report.ok()) << "seed " << seed << ": " << report.summary();
    EXPECT_EQ(r.stats.learned + (r.stats.terminated_by_conflict ? 1 : 0), r.stats.conflicts);
  }
}

TEST_P(AllSmtTest, AtomsCreatedDuringSearch) {
  const auto [shrinker, propagation] = GetParam();
  std::size_t registered = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Formula f = gen_random_dl_instance({}, seed);
    SolverConfig c;
    c.mode = Mode::AllSmt;
    c.shrinker = shrinker;
    c.theory_propagation = propagation;
    SplittingTheory theory(f.num_vars);
    const auto r = run(f, c, &theory);
    DifferenceLogic dl;
    const VerificationReport report = verify_enumeration(r.models, brute_force(f, &dl));
    EXPECT_TRUE(report.ok()) << "seed " << seed << ": " << report.summary();
    registered += r.stats.registered_atoms;
  }
  EXPECT_GT(registered, 0u);
}

INSTANTIATE_TEST_SUITE_P(
    Configurations, AllSmtTest,
    ::testing::Combine(::testing::Values(ShrinkerKind::None, ShrinkerKind::WatchBased,
                                         ShrinkerKind::Aggressive),
                       ::testing::Bool()),
    [](const auto& info) {
      return std::string(to_string(std::get<0>(info.param))) +
             (std::get<1>(info.param) ? "_propagating" : "_lazy");
    });

TEST(AllSmtTrivialTest, EqualsBooleanEnumeration) {
  const Formula f = gen_random_dl_instance({}, 5);
  SolverConfig c;
  c.mode = Mode::AllSmt;
  const auto r = run(f, c);
  EXPECT_TRUE(verify_enumeration(r.models, brute_force(f)).ok());
}

}  // namespace
}  // namespace disjenum
