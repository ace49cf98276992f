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

#include "disjenum/trail.hpp"

#include <algorithm>

namespace disjenum {

bool normalize_clause(std::vector<Lit>& lits) {
  // Keeps first-occurrence order so the initial watches stay predictable.
  std::vector<Lit> out;
  out.reserve(lits.size());
  for (Lit l : lits) {
    if (std::find(out.begin(), out.end(), ~l) != out.end()) return false;
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  lits = std::move(out);
  return true;
}

void Trail::grow(std::size_t num_vars) {
  if (num_vars <= value_.size()) return;
  value_.resize(num_vars, LBool::Undef);
  level_.resize(num_vars, -1);
  reason_.resize(num_vars);
  pos_.resize(num_vars, 0);
}

std::optional<Lit> Trail::decision_at(int level) const {
  if (level <= 0 || level > decision_level()) return std::nullopt;
  return entries_[decision_pos_[level]].lit;
}

void Trail::push(Lit lit, int level, Reason reason) {
  const Var v = lit.var();
  assert(v < value_.size());
  assert(!assigned(v) && "variable already on the trail");
  if (reason.is_decision()) {
    assert(level == decision_level() + 1);
    decision_pos_.push_back(entries_.size());
  } else {
    assert(level >= 0 && level <= decision_level());
    assert(reason.kind != ReasonKind::Unit || level == 0);
  }
  value_[v] = lit.negated() ? LBool::False : LBool::True;
  level_[v] = level;
  reason_[v] = reason;
  pos_[v] = entries_.size();
  entries_.push_back(TrailEntry{lit, level, reason});
}

void Trail::backtrack(int target) {
  if (target >= decision_level()) return;
  assert(target >= 0);
  // Everything before sigma(target + 1) has level <= target.
  const std::size_t first = decision_pos_[target + 1];
  std::size_t j = first;
  for (std::size_t i = first; i < entries_.size(); ++i) {
    const TrailEntry e = entries_[i];
    if (e.level > target) {
      const Var v = e.lit.var();
      value_[v] = LBool::Undef;
      level_[v] = -1;
      reason_[v] = Reason{};
    } else {
      pos_[e.lit.var()] = j;
      entries_[j++] = e;
    }
  }
  entries_.resize(j);
  decision_pos_.resize(static_cast<std::size_t>(target) + 1);
  // Retained out-of-order literals are propagated again so that watches
  // falsified above `target` are repaired.
  qhead_ = std::min(qhead_, first);
}

std::vector<Lit> Trail::virtual_reason(Lit lit) const {
  assert(is_true(lit));
  assert(reason(lit.var()).kind == ReasonKind::Backtrue);
  std::vector<Lit> clause{lit};
  const int lvl = level(lit.var());
  for (int k = 1; k <= lvl; ++k) {
    clause.push_back(~entries_[decision_pos_[k]].lit);
  }
  return clause;
}

}  // namespace disjenum
