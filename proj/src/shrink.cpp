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

#include "disjenum/shrink.hpp"

#include <algorithm>

namespace disjenum {
namespace {

// Check-Literal: `lit` (a decision at position `pos`) may go only if every
// clause it watches is also satisfied by its co-watch on the older part of
// the trail.
int check_literal(Lit lit, std::size_t pos, int b, const Trail& trail, const ClauseDb& db,
                  const WatchLists& watches, const ShrinkFilter& filter) {
  for (ClauseRef ref : watches[lit]) {
    const Clause& c = db[ref];
    const Lit other = c[0] == lit ? c[1] : c[0];
    if (!trail.is_true(other)) return std::max(b, trail.level(lit.var()));
    if (filter.is_irrelevant(other.var())) continue;
    if (trail.position(other.var()) > pos) return std::max(b, trail.level(lit.var()));
  }
  return b;
}

}  // namespace

int shrink_watch_based(const Trail& trail, const ClauseDb& db, const WatchLists& watches,
                       const ShrinkFilter& filter) {
  int b = 0;
  for (std::size_t i = trail.size(); i-- > 0;) {
    const TrailEntry& e = trail[i];
    const Var v = e.lit.var();
    if (filter.is_irrelevant(v)) continue;
    if (!e.reason.is_decision() || filter.is_pinned(v)) {
      b = std::max(b, e.level);
      continue;
    }
    if (e.level <= b) break;
    b = check_literal(e.lit, i, b, trail, db, watches, filter);
  }
  return b;
}

ShrinkState initialize(const Trail& trail, const ClauseDb& db) {
  ShrinkState s;
  s.watched_by.resize(2 * trail.num_vars());
  s.support.assign(db.size(), 0);
  for (ClauseRef ref = 0; ref < db.size(); ++ref) {
    for (Lit l : db[ref].lits) {
      if (!trail.is_true(l)) continue;
      s.watched_by[l.code()].push_back(ref);
      ++s.support[ref];
    }
  }
  return s;
}

void get_important_literals(ShrinkState& state, const Trail& trail, int limit,
                            const ShrinkFilter& filter) {
  for (std::size_t i = trail.size(); i-- > 0;) {
    const TrailEntry& e = trail[i];
    if (e.level <= limit || filter.is_irrelevant(e.lit.var())) continue;
    const auto& clauses = state.clauses_of(e.lit);
    const bool needed =
        filter.is_pinned(e.lit.var()) ||
        std::any_of(clauses.begin(), clauses.end(),
                    [&](ClauseRef c) { return state.support[c] == 1; });
    if (needed) {
      state.keep.push_back(e.lit);
    } else {
      for (ClauseRef c : clauses) --state.support[c];
    }
  }
}

}  // namespace disjenum
