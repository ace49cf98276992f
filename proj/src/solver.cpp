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

#include "disjenum/solver.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace disjenum {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::AllSat:
      return "allsat";
    case Mode::Projected:
      return "projected";
    case Mode::AllSmt:
      return "allsmt";
  }
  return "?";
}

const char* to_string(ShrinkerKind s) {
  switch (s) {
    case ShrinkerKind::None:
      return "none";
    case ShrinkerKind::WatchBased:
      return "watch";
    case ShrinkerKind::Aggressive:
      return "aggressive";
  }
  return "?";
}

std::string format_trail(const Trail& trail) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trail.size(); ++i) {
    const TrailEntry& e = trail[i];
    if (i) out << ' ';
    out << (e.lit.negated() ? "-x" : "x") << e.lit.var() + 1;
    if (e.reason.is_decision()) out << "^d";
    if (e.reason.kind == ReasonKind::Backtrue) out << "^*";
  }
  return out.str();
}

Solver::Solver(Formula formula, SolverConfig config, Theory* theory)
    : formula_(std::move(formula)),
      config_(std::move(config)),
      theory_(theory),
      vsads_(config_.vsads) {
  if (config_.mode == Mode::AllSmt && theory_ == nullptr) theory_ = &fallback_theory_;
  const std::size_t n = formula_.num_vars;
  grow(n);
  for (Var v = 0; v < n; ++v) {
    const bool relevant = config_.mode == Mode::AllSat || formula_.is_relevant(v);
    filter_.irrelevant[v] = !relevant;
    if (relevant) ++num_relevant_;
    atom_of_[v] = formula_.atoms.atom_of(v);
    filter_.pinned[v] = config_.mode == Mode::AllSmt && relevant && atom_of_[v] != nullptr;
  }
  for (const auto& c : formula_.clauses) add_input_clause(c);
  stats_.initial_db = db_.size();
  stats_.peak_db = db_.size();
}

void Solver::grow(std::size_t num_vars) {
  trail_.grow(num_vars);
  watches_.grow(num_vars);
  vsads_.grow(num_vars);
  filter_.irrelevant.resize(num_vars, false);
  filter_.pinned.resize(num_vars, false);
  theory_reasons_.resize(num_vars);
  atom_of_.resize(num_vars, nullptr);
}

void Solver::add_input_clause(std::vector<Lit> lits) {
  if (!normalize_clause(lits)) return;
  for (Lit l : lits) {
    if (l.var() >= num_vars()) throw std::invalid_argument("clause literal out of range");
    vsads_.add_occurrence(l.var());
  }
  if (lits.empty()) {
    unsat_ = true;
    return;
  }
  const ClauseRef ref = db_.add(std::move(lits), ClauseOrigin::Original);
  const Clause& c = db_[ref];
  if (c.size() >= 2) {
    watches_.attach(c, ref);
    return;
  }
  // Units are stored (the shrinkers count them) but never watched.
  if (trail_.is_false(c[0])) {
    unsat_ = true;
  } else if (!trail_.is_true(c[0])) {
    trail_.push(c[0], 0, Reason::unit());
  }
}

ClauseRef Solver::add_learned(std::vector<Lit> lits) {
  const ClauseRef ref = db_.add(std::move(lits), ClauseOrigin::LearnedConflict);
  if (db_[ref].size() >= 2) watches_.attach(db_[ref], ref);
  ++stats_.learned;
  stats_.peak_db = std::max(stats_.peak_db, db_.size());
  return ref;
}

EnumStats Solver::enumerate(const ModelSink& sink) {
  if (started_) throw std::logic_error("Solver::enumerate called twice");
  started_ = true;
  if (unsat_) {
    trace(TraceEvent::Kind::Terminate, {}, 0);
    return stats_;
  }
  for (;;) {
    if (out_of_time()) {
      stats_.timed_out = true;
      break;
    }
    if (auto conflict = unit_propagate()) {
      if (analyze_conflict(*conflict) == Control::Terminate) break;
      continue;
    }
    if (trail_.total()) {
      if (config_.mode == Mode::AllSmt) {
        const std::size_t vars_before = num_vars();
        if (auto conflict = theory_check()) {
          if (analyze_conflict(*conflict) == Control::Terminate) break;
          continue;
        }
        // New atoms make the trail partial again.
        if (num_vars() != vars_before) continue;
      }
      if (analyze_assignment(sink) == Control::Terminate) break;
      if (config_.model_limit != 0 && stats_.models >= config_.model_limit) {
        stats_.hit_model_limit = true;
        break;
      }
      continue;
    }
    decide(*pick_branch_literal());
  }
  return stats_;
}

std::optional<Conflict> Solver::unit_propagate() {
  for (;;) {
    while (trail_.has_pending()) {
      const Lit l = trail_.next_pending();
      const WatchUpdateResult r = watch_update(~l, db_, watches_, trail_);
      stats_.propagations += r.implied;
      if (r.conflict) {
        Conflict c{db_[*r.conflict].lits, false};
        check_falsified(c.lits);
        return c;
      }
    }
    if (config_.mode != Mode::AllSmt || !config_.theory_propagation) return std::nullopt;
    const std::size_t before = trail_.size();
    if (auto c = theory_propagate()) return c;
    if (trail_.size() == before) return std::nullopt;
  }
}

std::vector<AssignedAtom> Solver::assigned_atoms() const {
  std::vector<AssignedAtom> out;
  for (const TrailEntry& e : trail_.entries()) {
    const Var v = e.lit.var();
    if (atom_of_[v] != nullptr) out.push_back(AssignedAtom{v, *atom_of_[v], !e.lit.negated()});
  }
  return out;
}

std::optional<Conflict> Solver::theory_propagate() {
  if (formula_.atoms.empty()) return std::nullopt;
  std::vector<Var> unassigned;
  for (Var v : formula_.atoms.bound_vars())
    if (!trail_.assigned(v)) unassigned.push_back(v);
  const TheoryVerdict verdict = theory_->propagate(assigned_atoms(), unassigned, *this);
  if (verdict.outcome == TheoryVerdict::Outcome::Conflict) {
    ++stats_.theory_conflicts;
    check_falsified(verdict.conflict);
    return Conflict{verdict.conflict, true};
  }
  for (const TheoryImplication& imp : verdict.implied) {
    if (trail_.is_true(imp.lit)) continue;
    if (std::find(imp.reason.begin(), imp.reason.end(), imp.lit) == imp.reason.end())
      throw std::logic_error("theory explanation does not contain the implied literal");
    int level = 0;
    for (Lit r : imp.reason) {
      if (r == imp.lit) continue;
      if (!trail_.is_false(r)) throw std::logic_error("theory explanation is not unit");
      level = std::max(level, trail_.level(r.var()));
    }
    if (trail_.is_false(imp.lit)) {
      ++stats_.theory_conflicts;
      return Conflict{imp.reason, true};
    }
    theory_reasons_[imp.lit.var()] = imp.reason;
    trail_.push(imp.lit, level, Reason::theory());
    ++stats_.propagations;
  }
  return std::nullopt;
}

std::optional<Conflict> Solver::theory_check() {
  const TheoryVerdict verdict = theory_->check(assigned_atoms(), *this);
  if (verdict.outcome != TheoryVerdict::Outcome::Conflict) return std::nullopt;
  ++stats_.theory_conflicts;
  check_falsified(verdict.conflict);
  return Conflict{verdict.conflict, true};
}

std::vector<Lit> Solver::reason_clause(const TrailEntry& e) const {
  switch (e.reason.kind) {
    case ReasonKind::Propagated:
      if (e.reason.is_theory()) return theory_reasons_[e.lit.var()];
      return db_[e.reason.clause].lits;
    case ReasonKind::Backtrue:
      return trail_.virtual_reason(e.lit);
    case ReasonKind::Decision:
    case ReasonKind::Unit:
      break;
  }
  throw std::logic_error("literal has no reason clause");
}

Control Solver::analyze_conflict(const Conflict& conflict) {
  ++stats_.conflicts;
  trace(TraceEvent::Kind::Conflict, conflict.lits, trail_.decision_level());
  std::vector<Lit> clause = conflict.lits;
  for (;;) {
    int m = 0;
    for (Lit l : clause) m = std::max(m, trail_.level(l.var()));
    if (m < trail_.decision_level()) backtrack(m);
    const int dl = trail_.decision_level();
    if (dl == 0) {
      stats_.terminated_by_conflict = true;
      trace(TraceEvent::Kind::Terminate, {}, 0);
      return Control::Terminate;
    }

    const std::size_t sigma_pos = trail_.position(trail_.decision_at(dl)->var());
    std::vector<char> seen(num_vars(), 0);
    std::vector<Lit> lower;
    int pending = 0;
    auto add = [&](Lit l) {
      const Var v = l.var();
      if (seen[v]) return;
      const int lv = trail_.level(v);
      if (lv == 0) return;
      seen[v] = 1;
      if (lv == dl) {
        ++pending;
      } else {
        lower.push_back(l);
      }
    };
    for (Lit l : clause) add(l);

    std::optional<Lit> asserted;
    for (std::size_t i = trail_.size(); i-- > sigma_pos;) {
      const TrailEntry& e = trail_[i];
      const Var v = e.lit.var();
      if (!seen[v] || e.level != dl) continue;
      if (e.reason.is_decision() || (config_.uip == UipScheme::First && pending == 1)) {
        asserted = ~e.lit;
        break;
      }
      seen[v] = 0;
      --pending;
      for (Lit r : reason_clause(e))
        if (r != e.lit) add(r);
    }
    if (!asserted) {
      // Nothing at this level after all; the remaining clause is a conflict
      // at a lower level.
      ++stats_.reanalyses;
      clause = std::move(lower);
      continue;
    }

    std::vector<Lit> learned{*asserted};
    int assert_level = 0;
    std::size_t second = 0;
    for (Lit l : lower) {
      learned.push_back(l);
      const int lv = trail_.level(l.var());
      if (lv > assert_level) {
        assert_level = lv;
        second = learned.size() - 1;
      }
    }
    if (second > 1) std::swap(learned[1], learned[second]);
    for (Lit l : learned) vsads_.bump(l.var());
    vsads_.decay();

    const int target = config_.uip == UipScheme::Last ? dl - 1 : assert_level;
    backtrack(target);
    const ClauseRef ref = add_learned(learned);
    trail_.push(*asserted, assert_level, Reason::propagated(ref));
    set_limit(target);
    trace(TraceEvent::Kind::Learn, learned, assert_level);
    return Control::Continue;
  }
}

int Solver::lowest_irrelevant_decision() const {
  const int dl = trail_.decision_level();
  for (int k = 1; k <= dl; ++k)
    if (filter_.is_irrelevant(trail_.decision_at(k)->var())) return k;
  return 0;
}

Control Solver::analyze_assignment(const ModelSink& sink) {
  std::vector<LBool> before;
  if (config_.check_invariants) {
    before.resize(num_vars());
    for (Var v = 0; v < num_vars(); ++v) before[v] = trail_.value(v);
  }
  // Levels from the lowest irrelevant decision upward hold no relevant
  // literal, so the cube never needs them and flipping them would repeat it.
  const int k = lowest_irrelevant_decision();
  const int cap = k == 0 ? trail_.decision_level() : k - 1;

  int new_dl = 0;
  switch (config_.shrinker) {
    case ShrinkerKind::None:
      new_dl = std::min(trail_.decision_level(), cap);
      backtrack(new_dl);
      break;
    case ShrinkerKind::WatchBased:
      new_dl = std::min(shrink_watch_based(trail_, db_, watches_, filter_), cap);
      backtrack(new_dl);
      break;
    case ShrinkerKind::Aggressive:
      new_dl = shrink_aggressive();
      break;
  }
  if (config_.check_invariants) check_shrunk_trail(before);
  emit(sink);

  if (new_dl == 0) {
    trace(TraceEvent::Kind::Terminate, {}, 0);
    return Control::Terminate;
  }
  const Lit sigma = *trail_.decision_at(new_dl);
  backtrack(new_dl - 1);
  trail_.push(~sigma, new_dl - 1, Reason::backtrue());
  set_limit(new_dl - 1);
  trace(TraceEvent::Kind::Flip, {~sigma}, new_dl - 1);
  return Control::Continue;
}

int Solver::shrink_aggressive() {
  int limit = limit_;
  if (const int k = lowest_irrelevant_decision(); k != 0) limit = std::min(limit, k - 1);
  ShrinkState state = initialize(trail_, db_);
  get_important_literals(state, trail_, limit, filter_);
  return lift_literals(state.keep, limit);
}

int Solver::lift_literals(const std::vector<Lit>& keep, int limit) {
  backtrack(limit);
  for (auto it = keep.rbegin(); it != keep.rend(); ++it) {
    const Lit l = *it;
    if (trail_.is_true(l)) continue;
    if (trail_.is_false(l)) throw std::logic_error("kept literal was propagated false");
    trail_.push_decision(l);
    ++stats_.replayed_decisions;
    if (unit_propagate()) throw std::logic_error("conflict while replaying kept literals");
  }
  return trail_.decision_level();
}

void Solver::emit(const ModelSink& sink) {
  PartialModel m;
  for (const TrailEntry& e : trail_.entries()) m.literals.push_back(e.lit);
  std::sort(m.literals.begin(), m.literals.end());
  for (Lit l : m.literals)
    if (!filter_.is_irrelevant(l.var())) m.relevant.push_back(l);
  m.weight_exponent = num_relevant_ - m.relevant.size();
  ++stats_.models;
  stats_.model_sum += BigInt(1) << m.weight_exponent;
  trace(TraceEvent::Kind::Model, m.relevant, trail_.decision_level());
  if (sink) sink(m);
}

std::optional<Lit> Solver::pick_branch_literal() const {
  auto pick = [&](bool relevant) -> std::optional<Var> {
    for (Var v : config_.fixed_order)
      if (v < num_vars() && !trail_.assigned(v) && is_relevant(v) == relevant) return v;
    std::optional<Var> best;
    double best_score = 0;
    bool best_watched = false;
    for (Var v = 0; v < num_vars(); ++v) {
      if (trail_.assigned(v) || is_relevant(v) != relevant) continue;
      const double s = vsads_.score(v);
      const bool w = watches_.var_watched(v);
      if (!best || s > best_score || (s == best_score && w && !best_watched)) {
        best = v;
        best_score = s;
        best_watched = w;
      }
    }
    return best;
  };
  std::optional<Var> v = pick(true);
  if (!v) v = pick(false);
  if (!v) return std::nullopt;
  return Lit(*v, !config_.default_phase);
}

void Solver::decide(Lit lit) {
  trail_.push_decision(lit);
  ++stats_.decisions;
  trace(TraceEvent::Kind::Decide, {lit}, trail_.decision_level());
}

void Solver::backtrack(int level) {
  trail_.backtrack(level);
  if (limit_ > trail_.decision_level()) limit_ = trail_.decision_level();
}

void Solver::set_limit(int limit) { limit_ = limit; }

Var Solver::register_atom(const TheoryAtom& atom) {
  if (auto existing = formula_.atoms.find(atom)) return *existing;
  const Var v = static_cast<Var>(num_vars());
  if (formula_.relevant.empty()) formula_.relevant.assign(v, true);
  formula_.atoms.bind(v, atom);
  formula_.relevant.push_back(false);
  formula_.num_vars = v + 1;
  grow(v + 1);
  filter_.irrelevant[v] = true;
  atom_of_[v] = formula_.atoms.atom_of(v);
  ++stats_.registered_atoms;
  return v;
}

void Solver::check_falsified(const std::vector<Lit>& clause) const {
  if (!config_.check_invariants) return;
  for (Lit l : clause)
    if (!trail_.is_false(l)) throw std::logic_error("conflict clause is not falsified");
}

void Solver::check_shrunk_trail(const std::vector<LBool>& before) const {
  for (const Clause& c : db_) {
    if (c.origin != ClauseOrigin::Original) continue;
    const bool ok = std::any_of(c.lits.begin(), c.lits.end(), [&](Lit l) {
      if (trail_.is_true(l)) return true;
      return filter_.is_irrelevant(l.var()) && (before[l.var()] ^ l.negated()) == LBool::True;
    });
    if (!ok) throw std::logic_error("shrunk trail leaves a clause unsatisfied");
  }
}

bool Solver::out_of_time() {
  if (!config_.deadline) return false;
  if ((clock_ticks_++ & 1023u) != 0) return false;
  return std::chrono::steady_clock::now() > *config_.deadline;
}

void Solver::trace(TraceEvent::Kind kind, std::vector<Lit> lits, int level) {
  if (!trace_) return;
  trace_(TraceEvent{kind, std::move(lits), level, limit_, format_trail(trail_)});
}

EnumStats enumerate(const Formula& formula, const SolverConfig& config, const ModelSink& sink,
                    Theory* theory) {
  Solver solver(formula, config, theory);
  return solver.enumerate(sink);
}

}  // namespace disjenum
