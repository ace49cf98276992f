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

#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "disjenum/clause_db.hpp"
#include "disjenum/literal.hpp"

namespace disjenum {

enum class ReasonKind : std::uint8_t { Decision, Unit, Propagated, Backtrue };

/// Why a literal holds. `Propagated` carries the forcing clause; literals
/// implied by a theory carry the `kTheoryClause` sentinel and their
/// explanation is kept by the solver.
struct Reason {
  static constexpr ClauseRef kNoClause = std::numeric_limits<ClauseRef>::max();
  static constexpr ClauseRef kTheoryClause = kNoClause - 1;

  ReasonKind kind = ReasonKind::Decision;
  ClauseRef clause = kNoClause;

  static constexpr Reason decision() { return {ReasonKind::Decision, kNoClause}; }
  static constexpr Reason unit() { return {ReasonKind::Unit, kNoClause}; }
  static constexpr Reason backtrue() { return {ReasonKind::Backtrue, kNoClause}; }
  static constexpr Reason propagated(ClauseRef c) { return {ReasonKind::Propagated, c}; }
  static constexpr Reason theory() { return {ReasonKind::Propagated, kTheoryClause}; }

  bool is_decision() const { return kind == ReasonKind::Decision; }
  bool is_theory() const {
    return kind == ReasonKind::Propagated && clause == kTheoryClause;
  }
  bool operator==(const Reason&) const = default;
};

struct TrailEntry {
  Lit lit;
  int level = 0;
  Reason reason;
};

/// Ordered assignment stack with per-literal decision level and reason.
///
/// Levels are not required to be monotone along the trail: a literal may be
/// assigned at a level lower than the current decision level. `backtrack`
/// keeps such out-of-order entries and compacts them behind the retained
/// prefix, preserving their relative order.
class Trail {
 public:
  explicit Trail(std::size_t num_vars = 0) { grow(num_vars); }

  void grow(std::size_t num_vars);
  std::size_t num_vars() const { return value_.size(); }

  LBool value(Var v) const { return value_[v]; }
  LBool value(Lit l) const { return value_[l.var()] ^ l.negated(); }
  bool is_true(Lit l) const { return value(l) == LBool::True; }
  bool is_false(Lit l) const { return value(l) == LBool::False; }
  bool assigned(Var v) const { return value_[v] != LBool::Undef; }

  int level(Var v) const { return level_[v]; }
  const Reason& reason(Var v) const { return reason_[v]; }
  std::size_t position(Var v) const { return pos_[v]; }

  /// Current decision level `dl`.
  int decision_level() const { return static_cast<int>(decision_pos_.size()) - 1; }
  /// The decision literal of `level`, or nothing for level 0 / unused levels.
  std::optional<Lit> decision_at(int level) const;

  /// Appends `lit`. A Decision opens level `decision_level() + 1`; any other
  /// reason must use a level no higher than the current one.
  void push(Lit lit, int level, Reason reason);
  void push_decision(Lit lit) { push(lit, decision_level() + 1, Reason::decision()); }

  /// Removes every entry with level > `target` and lowers the decision level.
  void backtrack(int target);

  std::span<const TrailEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const TrailEntry& operator[](std::size_t i) const { return entries_[i]; }
  bool total() const { return entries_.size() == value_.size(); }

  /// Propagation queue over the trail.
  bool has_pending() const { return qhead_ < entries_.size(); }
  Lit next_pending() { return entries_[qhead_++].lit; }
  std::size_t queue_head() const { return qhead_; }
  void flush_queue() { qhead_ = entries_.size(); }

  /// The implicit clause justifying a Backtrue literal: the literal itself
  /// plus the negation of every decision at a level <= its own. Rebuilt on
  /// demand and never stored.
  std::vector<Lit> virtual_reason(Lit lit) const;

 private:
  std::vector<TrailEntry> entries_;
  std::vector<LBool> value_;
  std::vector<int> level_;
  std::vector<Reason> reason_;
  std::vector<std::size_t> pos_;
  // decision_pos_[k] = index of sigma(k); slot 0 is unused.
  std::vector<std::size_t> decision_pos_ = {0};
  std::size_t qhead_ = 0;
};

}  // namespace disjenum
