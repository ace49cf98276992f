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

#include <vector>

#include "disjenum/clause_db.hpp"
#include "disjenum/trail.hpp"
#include "disjenum/watch_lists.hpp"

namespace disjenum {

/// Per-variable flags the shrinkers consult.
struct ShrinkFilter {
  /// V_i: never dropped by the scan itself, and their current values count
  /// as support for the clauses they satisfy.
  std::vector<bool> irrelevant;
  /// Literals that must survive whenever they are above the protected
  /// prefix (relevant theory atoms in AllSMT mode).
  std::vector<bool> pinned;

  bool is_irrelevant(Var v) const { return v < irrelevant.size() && irrelevant[v]; }
  bool is_pinned(Var v) const { return v < pinned.size() && pinned[v]; }
};

/// Conservative shrinking on the watch lists. Returns the level b such that
/// the trail restricted to levels <= b still satisfies every clause. Watch
/// lists are only read.
int shrink_watch_based(const Trail& trail, const ClauseDb& db, const WatchLists& watches,
                       const ShrinkFilter& filter = {});

struct ShrinkState {
  /// W, indexed by literal code: clauses containing that (true) literal.
  std::vector<std::vector<ClauseRef>> watched_by;
  /// N: number of true literals per clause.
  std::vector<int> support;
  /// S, newest first.
  std::vector<Lit> keep;

  const std::vector<ClauseRef>& clauses_of(Lit l) const { return watched_by[l.code()]; }
};

/// Builds W and N over every clause of `db` from the (total) trail.
ShrinkState initialize(const Trail& trail, const ClauseDb& db);

/// Newest-first scan filling `state.keep`. Levels <= limit and irrelevant
/// literals are skipped; a literal is kept iff it is the last support of
/// some clause, otherwise its clauses lose one support.
void get_important_literals(ShrinkState& state, const Trail& trail, int limit,
                            const ShrinkFilter& filter = {});

}  // namespace disjenum
