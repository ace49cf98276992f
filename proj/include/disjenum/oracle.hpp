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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "disjenum/formula.hpp"
#include "disjenum/partial_model.hpp"
#include "disjenum/theory.hpp"

namespace disjenum {

struct OracleOptions {
  /// Refuse formulas with more variables than this.
  std::size_t max_vars = 24;
};

/// Projected satisfying assignments. Assignment `a` over V_r is encoded as
/// an integer whose bit i is the value of relevant[i].
struct ModelSet {
  std::vector<Var> relevant;
  /// Bit `a` set iff `a` is a projected model.
  std::vector<std::uint64_t> bitmap;
  boost::multiprecision::cpp_int count = 0;

  bool contains(std::uint64_t a) const { return (bitmap[a >> 6] >> (a & 63)) & 1u; }
  /// Sorted encodings of every model.
  std::vector<std::uint64_t> models() const;
  /// Encoding of a total assignment given per variable of the formula.
  std::uint64_t encode(const std::vector<bool>& assignment) const;
};

/// Exhaustive enumeration of all 2^|V| assignments, 64 at a time. With a
/// theory, satisfying assignments must also be consistent. Throws
/// std::length_error above `options.max_vars` variables.
ModelSet brute_force(const Formula& formula, Theory* theory = nullptr,
                     const OracleOptions& options = {});

struct VerificationReport {
  bool disjoint = true;
  bool sound = true;
  bool complete = true;
  boost::multiprecision::cpp_int covered = 0;
  boost::multiprecision::cpp_int expected = 0;
  /// First overlapping pair of cube indices.
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  /// First cube with a non-model extension, and that extension.
  std::optional<std::size_t> unsound_cube;
  std::optional<std::uint64_t> witness;
  std::vector<std::string> errors;

  bool ok() const { return disjoint && sound && complete; }
  std::string summary() const;
};

/// Checks that the cubes (over V_r literals) are pairwise clashing, that all
/// their total extensions are models, and that sum 2^(|V_r| - |cube|)
/// equals the model count.
VerificationReport verify_enumeration(const std::vector<std::vector<Lit>>& cubes,
                                      const ModelSet& truth);
VerificationReport verify_enumeration(const std::vector<PartialModel>& partials,
                                      const ModelSet& truth);

/// Some variable occurs with opposite signs in `a` and `b`.
bool cubes_clash(const std::vector<Lit>& a, const std::vector<Lit>& b);

}  // namespace disjenum
