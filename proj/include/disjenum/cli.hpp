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

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "disjenum/solver.hpp"

namespace disjenum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitTimeout = 3;
inline constexpr int kExitVerifyFailed = 10;

/// `args[0]` is the program name. Subcommands: `bench`, `gen`; anything else
/// is an enumeration run.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::vector<ShrinkerKind> shrinkers{ShrinkerKind::WatchBased, ShrinkerKind::Aggressive};
  std::optional<Mode> mode;  // default: chosen per instance
  double timeout_s = 60.0;
  bool verify = false;
  unsigned jobs = 1;
};

struct BenchRow {
  std::string instance;
  ShrinkerKind shrinker = ShrinkerKind::Aggressive;
  Mode mode = Mode::AllSat;
  double wall_s = 0;
  EnumStats stats;
  /// "yes", "no" or "skipped".
  std::string verified = "skipped";
};

/// Every `*.cnf` file directly inside `dir`, sorted by file name.
std::vector<std::filesystem::path> bench_corpus(const std::filesystem::path& dir);

/// One row per (instance, shrinker), in corpus-then-shrinker order whatever
/// the number of jobs.
std::vector<BenchRow> bench(const std::vector<std::filesystem::path>& corpus,
                            const BenchOptions& options);

inline constexpr const char* kBenchHeader =
    "instance,shrinker,mode,wall_s,partials,conflicts,decisions,peak_db,model_sum,verified,"
    "timed_out";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Mode implied by the input: AllSmt with atoms, Projected with a
/// projection, AllSat otherwise.
Mode infer_mode(const Formula& f);

}  // namespace disjenum::cli
