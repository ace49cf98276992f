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
#include <vector>

#include "disjenum/literal.hpp"

namespace disjenum {

struct VsadsParams {
  double occurrence_weight = 1.0;
  double activity_weight = 1.0;
  double bump = 1.0;
  double decay = 0.95;
};

/// Variable State Aware Decaying Sum: a static occurrence count (DLCS)
/// blended with a conflict-driven decaying activity (VSIDS).
///
/// Activity is stored unscaled and divided by a growing increment, so a
/// decay touches one number instead of every variable.
class Vsads {
 public:
  explicit Vsads(VsadsParams params = {}) : params_(params) {}

  void grow(std::size_t num_vars) {
    if (num_vars > occurrences_.size()) {
      occurrences_.resize(num_vars, 0.0);
      raw_activity_.resize(num_vars, 0.0);
    }
  }
  std::size_t num_vars() const { return occurrences_.size(); }

  void add_occurrence(Var v) { occurrences_[v] += 1.0; }
  void bump(Var v) {
    raw_activity_[v] += params_.bump * increment_;
    if (raw_activity_[v] > 1e100) rescale();
  }
  /// Called once per conflict.
  void decay() {
    increment_ /= params_.decay;
    if (increment_ > 1e100) rescale();
  }

  double occurrences(Var v) const { return occurrences_[v]; }
  double activity(Var v) const { return raw_activity_[v] / increment_; }
  double score(Var v) const {
    return params_.occurrence_weight * occurrences_[v] + params_.activity_weight * activity(v);
  }
  const VsadsParams& params() const { return params_; }

 private:
  void rescale() {
    for (double& a : raw_activity_) a /= increment_;
    increment_ = 1.0;
  }

  VsadsParams params_;
  std::vector<double> occurrences_;
  std::vector<double> raw_activity_;
  double increment_ = 1.0;
};

}  // namespace disjenum
