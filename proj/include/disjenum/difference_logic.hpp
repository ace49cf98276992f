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

#include <compare>
#include <optional>
#include <vector>

#include "disjenum/theory.hpp"

namespace disjenum {

/// c + eps * epsilon for an infinitesimal epsilon > 0. Strict edges carry
/// eps = -1, so `x < c` becomes `x <= c - epsilon` without leaving the
/// rationals.
struct DlWeight {
  Rational c{0};
  int eps = 0;

  DlWeight operator+(const DlWeight& o) const { return {c + o.c, eps + o.eps}; }
  bool operator==(const DlWeight&) const = default;
  std::strong_ordering operator<=>(const DlWeight& o) const {
    if (c != o.c) return c < o.c ? std::strong_ordering::less : std::strong_ordering::greater;
    return eps <=> o.eps;
  }
};

struct DlEdge {
  TheoryVar from = 0;
  TheoryVar to = 0;
  DlWeight weight;
  Lit lit;  // the assigned literal that produced this edge
};

/// u - v <= c true  gives v -> u with weight c;
/// u - v <= c false gives u -> v with weight -c - epsilon.
DlEdge edge_for(const AssignedAtom& a);

/// Literals of the edges on one negative cycle, or nothing.
std::optional<std::vector<Lit>> find_negative_cycle(std::size_t num_nodes,
                                                    const std::vector<DlEdge>& edges);

/// Rational difference logic: Bellman-Ford for consistency and conflict
/// cycles, all-pairs shortest paths for propagation.
class DifferenceLogic : public Theory {
 public:
  TheoryVerdict check(const std::vector<AssignedAtom>& assigned, TheoryContext& ctx) override;
  TheoryVerdict propagate(const std::vector<AssignedAtom>& assigned,
                          const std::vector<Var>& unassigned, TheoryContext& ctx) override;
};

}  // namespace disjenum
