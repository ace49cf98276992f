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

#include <cstddef>
#include <functional>
#include <vector>

#include "disjenum/literal.hpp"

namespace disjenum {

/// One emitted cube. Both literal lists are sorted by variable.
struct PartialModel {
  /// Every literal left on the trail, irrelevant ones included.
  std::vector<Lit> literals;
  /// `literals` restricted to V_r; this is what the caller reports.
  std::vector<Lit> relevant;
  /// |V_r| - |relevant|: the cube covers 2^weight_exponent total models.
  std::size_t weight_exponent = 0;
};

/// Runs on the solver's thread; must not call back into the solver.
using ModelSink = std::function<void(const PartialModel&)>;

}  // namespace disjenum
