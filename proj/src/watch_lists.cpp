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

#include "disjenum/watch_lists.hpp"

#include <algorithm>
#include <utility>

namespace disjenum {

WatchUpdateResult watch_update(Lit falsified, ClauseDb& db, WatchLists& watches,
                               Trail& trail) {
  WatchUpdateResult result;
  std::vector<ClauseRef>& ws = watches[falsified];
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ws.size()) {
    const ClauseRef ref = ws[i++];
    Clause& c = db[ref];
    if (c[0] == falsified) std::swap(c[0], c[1]);
    const Lit other = c[0];
    if (trail.is_true(other)) {
      ws[j++] = ref;
      continue;
    }
    bool moved = false;
    for (std::size_t k = 2; k < c.size(); ++k) {
      if (!trail.is_false(c[k])) {
        std::swap(c[1], c[k]);
        watches[c[1]].push_back(ref);
        moved = true;
        break;
      }
    }
    if (moved) continue;
    ws[j++] = ref;
    if (trail.is_false(other)) {
      result.conflict = ref;
      while (i < ws.size()) ws[j++] = ws[i++];
      break;
    }
    int level = 0;
    for (std::size_t k = 1; k < c.size(); ++k) {
      level = std::max(level, trail.level(c[k].var()));
    }
    trail.push(other, level, Reason::propagated(ref));
    ++result.implied;
  }
  ws.resize(j);
  return result;
}

}  // namespace disjenum
