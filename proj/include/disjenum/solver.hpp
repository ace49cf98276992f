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

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "disjenum/clause_db.hpp"
#include "disjenum/formula.hpp"
#include "disjenum/partial_model.hpp"
#include "disjenum/shrink.hpp"
#include "disjenum/theory.hpp"
#include "disjenum/trail.hpp"
#include "disjenum/vsads.hpp"
#include "disjenum/watch_lists.hpp"

namespace disjenum {

using BigInt = boost::multiprecision::cpp_int;

enum class Mode { AllSat, Projected, AllSmt };
enum class ShrinkerKind { None, WatchBased, Aggressive };
/// `First` exists only to reproduce the double-coverage failure of
/// first-UIP backjumping; it is not a correct enumeration engine.
enum class UipScheme { Last, First };

const char* to_string(Mode m);
const char* to_string(ShrinkerKind s);

struct SolverConfig {
  Mode mode = Mode::AllSat;
  ShrinkerKind shrinker = ShrinkerKind::Aggressive;
  UipScheme uip = UipScheme::Last;
  /// Polarity of decisions; false means the negative literal first.
  bool default_phase = false;
  VsadsParams vsads;
  /// Variables tried first, in this order, before the VSADS ranking.
  std::vector<Var> fixed_order;
  /// Theory propagation on partial assignments (AllSMT mode).
  bool theory_propagation = true;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Stop after this many partial models (0 = no limit).
  std::uint64_t model_limit = 0;
  /// Re-verify conflicts and shrunk trails as they are produced.
  bool check_invariants = false;
};

struct EnumStats {
  std::uint64_t models = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t theory_conflicts = 0;
  std::uint64_t decisions = 0;
  std::uint64_t replayed_decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t reanalyses = 0;
  std::size_t initial_db = 0;
  std::size_t peak_db = 0;
  std::size_t learned = 0;
  std::size_t registered_atoms = 0;
  /// Sum over emitted cubes of 2^(|V_r| - |cube|).
  BigInt model_sum = 0;
  /// The run ended on a conflict at level 0 (that conflict learns nothing).
  bool terminated_by_conflict = false;
  bool timed_out = false;
  bool hit_model_limit = false;
};

struct Conflict {
  std::vector<Lit> lits;
  bool from_theory = false;
};

enum class Control { Continue, Terminate };

struct TraceEvent {
  enum class Kind { Decide, Conflict, Learn, Model, Flip, Terminate };
  Kind kind = Kind::Decide;
  /// Decide/Flip: the literal; Conflict/Learn: the clause (asserted literal
  /// first for Learn); Model: the relevant cube.
  std::vector<Lit> lits;
  int level = 0;
  int limit = 0;
  std::string trail;
};

using TraceObserver = std::function<void(const TraceEvent&)>;

/// "x1^d -x3^* x4" with ^d for decisions and ^* for flipped literals.
std::string format_trail(const Trail& trail);

/// Disjoint enumeration by CDCL with chronological backtracking. Models are
/// excluded by flipping decisions (Backtrue literals), never by blocking
/// clauses; the database grows only by conflict clauses.
class Solver : private TheoryContext {
 public:
  Solver(Formula formula, SolverConfig config, Theory* theory = nullptr);

  /// Runs to completion (or deadline / model limit). Call once.
  EnumStats enumerate(const ModelSink& sink);

  // Single steps of the main loop, public for tests.

  /// Boolean propagation to fixpoint, then theory propagation in AllSMT mode.
  std::optional<Conflict> unit_propagate();
  /// Conflict analysis with chronological backtracking.
  Control analyze_conflict(const Conflict& conflict);
  /// Shrinks, emits and flips on a total satisfying trail.
  Control analyze_assignment(const ModelSink& sink);
  /// Highest-priority unassigned variable with the default phase.
  std::optional<Lit> pick_branch_literal() const;
  void decide(Lit lit);
  /// Aggressive shrinking: initialize, get_important_literals, lift. Returns
  /// the new decision level.
  int shrink_aggressive();
  /// Backtracks to `limit` and replays `keep` (newest first) as decisions.
  int lift_literals(const std::vector<Lit>& keep, int limit);
  void backtrack(int level);

  /// Idempotent; new atoms become irrelevant variables.
  Var register_atom(const TheoryAtom& atom) override;
  const AtomTable& atoms() const override { return formula_.atoms; }

  void set_trace(TraceObserver observer) { trace_ = std::move(observer); }

  const Trail& trail() const { return trail_; }
  const ClauseDb& db() const { return db_; }
  const WatchLists& watches() const { return watches_; }
  const Vsads& vsads() const { return vsads_; }
  const Formula& formula() const { return formula_; }
  const SolverConfig& config() const { return config_; }
  const EnumStats& stats() const { return stats_; }
  const ShrinkFilter& filter() const { return filter_; }
  int limit() const { return limit_; }
  std::size_t num_vars() const { return trail_.num_vars(); }
  std::size_t num_relevant() const { return num_relevant_; }
  bool is_relevant(Var v) const { return !filter_.is_irrelevant(v); }
  /// The input already contained an empty or contradictory unit clause.
  bool trivially_unsat() const { return unsat_; }
  /// Explanation stored for a theory-implied literal.
  const std::vector<Lit>& theory_reason(Var v) const { return theory_reasons_[v]; }

 private:
  void grow(std::size_t num_vars);
  void add_input_clause(std::vector<Lit> lits);
  ClauseRef add_learned(std::vector<Lit> lits);
  std::vector<Lit> reason_clause(const TrailEntry& e) const;
  std::optional<Conflict> theory_propagate();
  std::optional<Conflict> theory_check();
  std::vector<AssignedAtom> assigned_atoms() const;
  int lowest_irrelevant_decision() const;
  void emit(const ModelSink& sink);
  void check_shrunk_trail(const std::vector<LBool>& before) const;
  void check_falsified(const std::vector<Lit>& clause) const;
  bool out_of_time();
  void trace(TraceEvent::Kind kind, std::vector<Lit> lits, int level);
  void set_limit(int limit);

  Formula formula_;
  SolverConfig config_;
  Theory* theory_;
  TrivialTheory fallback_theory_;
  Trail trail_;
  ClauseDb db_;
  WatchLists watches_;
  Vsads vsads_;
  ShrinkFilter filter_;
  std::vector<std::vector<Lit>> theory_reasons_;
  std::vector<const TheoryAtom*> atom_of_;
  std::size_t num_relevant_ = 0;
  int limit_ = 0;
  bool unsat_ = false;
  bool started_ = false;
  std::uint64_t clock_ticks_ = 0;
  EnumStats stats_;
  TraceObserver trace_;
};

/// Convenience wrapper around Solver.
EnumStats enumerate(const Formula& formula, const SolverConfig& config, const ModelSink& sink,
                    Theory* theory = nullptr);

}  // namespace disjenum
