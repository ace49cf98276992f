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

#include "disjenum/formula.hpp"

#include <algorithm>
#include <stdexcept>

#include "disjenum/theory_atom.hpp"

namespace disjenum {

bool Formula::has_projection() const {
  return std::find(relevant.begin(), relevant.end(), false) != relevant.end();
}

std::vector<Var> Formula::relevant_vars() const {
  std::vector<Var> out;
  for (Var v = 0; v < num_vars; ++v)
    if (is_relevant(v)) out.push_back(v);
  return out;
}

std::vector<Var> Formula::irrelevant_vars() const {
  std::vector<Var> out;
  for (Var v = 0; v < num_vars; ++v)
    if (!is_relevant(v)) out.push_back(v);
  return out;
}

void Formula::set_relevant(const std::vector<Var>& vars) {
  relevant.assign(num_vars, false);
  for (Var v : vars) {
    if (v >= num_vars) throw std::out_of_range("relevant variable out of range");
    relevant[v] = true;
  }
}

TheoryVar AtomTable::intern(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, static_cast<TheoryVar>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

std::optional<TheoryVar> AtomTable::lookup(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void AtomTable::bind(Var var, const TheoryAtom& atom) {
  if (atom.u >= names_.size() || atom.v >= names_.size())
    throw std::invalid_argument("theory atom refers to an unknown theory variable");
  if (by_var_.contains(var))
    throw std::invalid_argument("variable already bound to a theory atom");
  if (by_atom_.contains(atom))
    throw std::invalid_argument("theory atom already bound to another variable");
  by_var_.emplace(var, atom);
  by_atom_.emplace(atom, var);
  bound_.push_back(var);
}

std::optional<Var> AtomTable::find(const TheoryAtom& atom) const {
  auto it = by_atom_.find(atom);
  if (it == by_atom_.end()) return std::nullopt;
  return it->second;
}

const TheoryAtom* AtomTable::atom_of(Var var) const {
  auto it = by_var_.find(var);
  return it == by_var_.end() ? nullptr : &it->second;
}

}  // namespace disjenum
