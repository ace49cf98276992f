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

#include <optional>
#include <vector>

#include "disjenum/clause_db.hpp"
#include "disjenum/trail.hpp"

namespace disjenum {

/// omega: for every literal, the clauses it currently watches. The two
/// watched literals of a clause are kept in positions 0 and 1.
class WatchLists {
 public:
  explicit WatchLists(std::size_t num_vars = 0) { grow(num_vars); }

  void grow(std::size_t num_vars) {
    if (2 * num_vars > lists_.size()) lists_.resize(2 * num_vars);
  }

  std::vector<ClauseRef>& operator[](Lit l) { return lists_[l.code()]; }
  const std::vector<ClauseRef>& operator[](Lit l) const { return lists_[l.code()]; }

  /// Watches positions 0 and 1 of a clause with at least two literals.
  void attach(const Clause& c, ClauseRef ref) {
    lists_[c[0].code()].push_back(ref);
    lists_[c[1].code()].push_back(ref);
  }

  bool var_watched(Var v) const {
    return !lists_[Lit::pos(v).code()].empty() || !lists_[Lit::neg(v).code()].empty();
  }

 private:
  std::vector<std::vector<ClauseRef>> lists_;
};

struct WatchUpdateResult {
  std::optional<ClauseRef> conflict;
  std::size_t implied = 0;
};

/// Processes omega(falsified) after `falsified` became false: each clause is
/// either kept (other watch true), re-watched by a non-false literal,
/// found unit (the other watch is pushed onto the trail at the highest level
/// among the clause's false literals), or reported as the conflict.
WatchUpdateResult watch_update(Lit falsified, ClauseDb& db, WatchLists& watches,
                               Trail& trail);

}  // namespace disjenum
