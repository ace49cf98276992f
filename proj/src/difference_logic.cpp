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

#include "disjenum/difference_logic.hpp"

#include <stdexcept>

namespace disjenum {

DlEdge edge_for(const AssignedAtom& a) {
  if (a.value) return {a.atom.v, a.atom.u, {a.atom.bound, 0}, a.lit()};
  return {a.atom.u, a.atom.v, {-a.atom.bound, -1}, a.lit()};
}

std::optional<std::vector<Lit>> find_negative_cycle(std::size_t num_nodes,
                                                    const std::vector<DlEdge>& edges) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<DlWeight> dist(num_nodes);
  std::vector<std::size_t> pred(num_nodes, kNone);
  std::size_t relaxed = kNone;
  for (std::size_t round = 0; round <= num_nodes; ++round) {
    relaxed = kNone;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const DlEdge& e = edges[i];
      const DlWeight cand = dist[e.from] + e.weight;
      if (cand < dist[e.to]) {
        dist[e.to] = cand;
        pred[e.to] = i;
        relaxed = e.to;
      }
    }
    if (relaxed == kNone) return std::nullopt;
  }
  // Still relaxing after |V| rounds: walking back |V| predecessors lands on
  // a cycle of the predecessor graph, and every such cycle is negative.
  std::size_t x = relaxed;
  for (std::size_t i = 0; i < num_nodes; ++i) x = edges[pred[x]].from;
  std::vector<Lit> clause;
  std::size_t y = x;
  do {
    const DlEdge& e = edges[pred[y]];
    clause.push_back(~e.lit);
    y = e.from;
  } while (y != x);
  return clause;
}

namespace {

void check_vars(const std::vector<AssignedAtom>& assigned, const AtomTable& atoms) {
  for (const auto& a : assigned)
    if (a.atom.u >= atoms.num_theory_vars() || a.atom.v >= atoms.num_theory_vars())
      throw std::invalid_argument("atom refers to an unknown theory variable");
}

}  // namespace

TheoryVerdict DifferenceLogic::check(const std::vector<AssignedAtom>& assigned,
                                     TheoryContext& ctx) {
  check_vars(assigned, ctx.atoms());
  std::vector<DlEdge> edges;
  edges.reserve(assigned.size());
  for (const auto& a : assigned) edges.push_back(edge_for(a));
  if (auto cycle = find_negative_cycle(ctx.atoms().num_theory_vars(), edges))
    return TheoryVerdict::conflicting(std::move(*cycle));
  return TheoryVerdict::consistent();
}

TheoryVerdict DifferenceLogic::propagate(const std::vector<AssignedAtom>& assigned,
                                         const std::vector<Var>& unassigned,
                                         TheoryContext& ctx) {
  TheoryVerdict verdict = check(assigned, ctx);
  if (verdict.outcome != TheoryVerdict::Outcome::Consistent || unassigned.empty()) return verdict;

  const std::size_t n = ctx.atoms().num_theory_vars();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<DlEdge> edges;
  for (const auto& a : assigned) edges.push_back(edge_for(a));

  // dist[i][j] with pred[i][j] = last edge of the best known path i -> j.
  std::vector<std::vector<std::optional<DlWeight>>> dist(
      n, std::vector<std::optional<DlWeight>>(n));
  std::vector<std::vector<std::size_t>> pred(n, std::vector<std::size_t>(n, kNone));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = DlWeight{};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const DlEdge& e = edges[k];
    if (e.from == e.to) continue;
    if (!dist[e.from][e.to] || e.weight < *dist[e.from][e.to]) {
      dist[e.from][e.to] = e.weight;
      pred[e.from][e.to] = k;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!dist[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!dist[k][j]) continue;
        const DlWeight cand = *dist[i][k] + *dist[k][j];
        if (!dist[i][j] || cand < *dist[i][j]) {
          dist[i][j] = cand;
          pred[i][j] = pred[k][j];
        }
      }
    }

  auto path_negations = [&](std::size_t from, std::size_t to, std::vector<Lit>& out) {
    std::size_t at = to;
    for (std::size_t steps = 0; at != from; ++steps) {
      if (steps > n) throw std::logic_error("shortest-path reconstruction did not terminate");
      const DlEdge& e = edges[pred[from][at]];
      out.push_back(~e.lit);
      at = e.from;
    }
  };

  const AtomTable& atoms = ctx.atoms();
  for (Var var : unassigned) {
    const TheoryAtom* atom = atoms.atom_of(var);
    if (atom == nullptr) continue;
    const DlWeight bound{atom->bound, 0};
    if (const auto& d = dist[atom->v][atom->u]; d && *d <= bound) {
      TheoryImplication imp{Lit::pos(var), {Lit::pos(var)}};
      path_negations(atom->v, atom->u, imp.reason);
      verdict.implied.push_back(std::move(imp));
    } else if (const auto& r = dist[atom->u][atom->v]; r && *r + bound < DlWeight{}) {
      TheoryImplication imp{Lit::neg(var), {Lit::neg(var)}};
      path_negations(atom->u, atom->v, imp.reason);
      verdict.implied.push_back(std::move(imp));
    }
  }
  if (!verdict.implied.empty()) verdict.outcome = TheoryVerdict::Outcome::Implied;
  return verdict;
}

}  // namespace disjenum
