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

#include <cstdint>
#include <span>
#include <vector>

#include "disjenum/literal.hpp"

namespace disjenum {

using ClauseRef = std::uint32_t;

/// There is intentionally no "blocking" origin: enumeration never stores
/// clauses that exclude found models.
enum class ClauseOrigin : std::uint8_t { Original, LearnedConflict };

struct Clause {
  std::vector<Lit> lits;
  ClauseOrigin origin = ClauseOrigin::Original;

  std::size_t size() const { return lits.size(); }
  Lit operator[](std::size_t i) const { return lits[i]; }
  Lit& operator[](std::size_t i) { return lits[i]; }
};

/// Append-only arena of original and learned clauses. Clauses are never
/// deleted, so a ClauseRef stays valid for the lifetime of the database.
class ClauseDb {
 public:
  ClauseRef add(std::vector<Lit> lits, ClauseOrigin origin) {
    clauses_.push_back(Clause{std::move(lits), origin});
    if (origin == ClauseOrigin::LearnedConflict) ++num_learned_;
    return static_cast<ClauseRef>(clauses_.size() - 1);
  }

  const Clause& operator[](ClauseRef r) const { return clauses_[r]; }
  Clause& operator[](ClauseRef r) { return clauses_[r]; }

  std::size_t size() const { return clauses_.size(); }
  std::size_t num_learned() const { return num_learned_; }
  std::size_t num_original() const { return clauses_.size() - num_learned_; }

  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

 private:
  std::vector<Clause> clauses_;
  std::size_t num_learned_ = 0;
};

/// Removes duplicate literals; returns false if the clause is a tautology.
bool normalize_clause(std::vector<Lit>& lits);

}  // namespace disjenum
