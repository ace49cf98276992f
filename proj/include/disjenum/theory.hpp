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

#include "disjenum/literal.hpp"
#include "disjenum/theory_atom.hpp"

namespace disjenum {

/// An atom-bound Boolean variable and its current value.
struct AssignedAtom {
  Var var = 0;
  TheoryAtom atom;
  bool value = false;

  /// The trail literal that makes this assignment.
  Lit lit() const { return Lit(var, !value); }
};

struct TheoryImplication {
  Lit lit;
  /// Clause containing `lit`; every other literal is false on the trail.
  std::vector<Lit> reason;
};

struct TheoryVerdict {
  enum class Outcome { Consistent, Conflict, Implied };

  Outcome outcome = Outcome::Consistent;
  /// Falsified clause over assigned atom literals (Conflict only).
  std::vector<Lit> conflict;
  std::vector<TheoryImplication> implied;

  static TheoryVerdict consistent() { return {}; }
  static TheoryVerdict conflicting(std::vector<Lit> clause) {
    return {Outcome::Conflict, std::move(clause), {}};
  }
};

/// What a theory may ask of the search engine.
class TheoryContext {
 public:
  virtual ~TheoryContext() = default;
  virtual const AtomTable& atoms() const = 0;
  /// Returns the variable bound to `atom`, creating a fresh irrelevant one
  /// if needed. May be called from inside check() / propagate().
  virtual Var register_atom(const TheoryAtom& atom) = 0;
};

class Theory {
 public:
  virtual ~Theory() = default;

  /// Consistency of a total Boolean assignment's atoms.
  virtual TheoryVerdict check(const std::vector<AssignedAtom>& assigned,
                              TheoryContext& ctx) = 0;

  /// Early pruning on a partial assignment. The default implies nothing.
  virtual TheoryVerdict propagate(const std::vector<AssignedAtom>& assigned,
                                  const std::vector<Var>& unassigned, TheoryContext& ctx) {
    (void)unassigned;
    return check(assigned, ctx);
  }
};

/// Accepts every assignment.
class TrivialTheory : public Theory {
 public:
  TheoryVerdict check(const std::vector<AssignedAtom>&, TheoryContext&) override {
    return TheoryVerdict::consistent();
  }
};

}  // namespace disjenum
