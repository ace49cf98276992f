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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "disjenum/formula.hpp"

namespace disjenum {

/// Malformed input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads DIMACS CNF. Recognised comment extensions:
///   c p show v1 v2 ... 0        projection onto the listed variables
///   c atom <var> <u> <v> <q>     var <-> (u - v <= q), q = n or n/d
/// Duplicate literals are merged and tautological clauses dropped.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(std::string_view text);

void write_dimacs(std::ostream& out, const Formula& f);
std::string serialize_dimacs(const Formula& f);

}  // namespace disjenum
