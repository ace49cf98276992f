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

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "disjenum/cli.hpp"
#include "disjenum/dimacs.hpp"

namespace disjenum::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;

  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
  std::vector<std::string> model_lines() const {
    std::vector<std::string> v;
    for (const auto& l : lines())
      if (!l.empty() && l[0] != 'c') v.push_back(l);
    return v;
  }
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "enum");
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("disjenum_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

constexpr const char* kSmallCnf = "p cnf 3 3\n1 -2 0\n1 -3 0\n-1 -2 0\n";

TEST_F(CliTest, PrintsModelsAndTrailer) {
  const Result r = invoke({write("small.cnf", kSmallCnf), "--shrink", "none", "--order", "3,2,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.model_lines(), (std::vector<std::string>{"-1 -2 -3 0", "1 -2 -3 0", "1 -2 3 0"}));
  EXPECT_NE(r.out.find("c mode allsat\n"), std::string::npos);
  EXPECT_NE(r.out.find("c shrinker none\n"), std::string::npos);
  EXPECT_NE(r.out.find("c partials 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("c model-sum 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("c conflicts 1\n"), std::string::npos);
}

TEST_F(CliTest, CountOnly) {
  const std::string f = write("small.cnf", kSmallCnf);
  EXPECT_EQ(invoke({f, "--count", "only"}).out, "3\n");
  EXPECT_EQ(invoke({f, "--output", "count"}).out, "3\n");
}

TEST_F(CliTest, StatsJson) {
  const Result r = invoke({write("small.cnf", kSmallCnf), "--output", "stats-json", "--verify",
                           "--seed", "17"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mode"], "allsat");
  EXPECT_EQ(j["shrinker"], "aggressive");
  EXPECT_EQ(j["vars"], 3);
  EXPECT_EQ(j["model_sum"], "3");
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["seed"], 17);
  EXPECT_EQ(j["timed_out"], false);
  // The final conflict at level 0 ends the search without learning.
  EXPECT_EQ(j["terminated_by_conflict"], true);
  EXPECT_EQ(j["learned"].get<int>(), j["conflicts"].get<int>() - 1);
}

TEST_F(CliTest, ProjectionAndAtomsSelectMode) {
  const Result p = invoke({write("p.cnf", "p cnf 4 2\nc p show 1 3 0\n1 2 0\n3 4 0\n"),
                           "--output", "stats-json", "--verify"});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  const auto jp = nlohmann::json::parse(p.out);
  EXPECT_EQ(jp["mode"], "projected");
  EXPECT_EQ(jp["relevant_vars"], 2);
  EXPECT_EQ(jp["model_sum"], "4");

  const Result s = invoke({write("s.cnf",
                                 "p cnf 3 2\nc atom 1 x y 0\nc atom 2 y x -1\n1 3 0\n2 3 0\n"),
                           "--count", "only", "--verify"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_EQ(s.lines().at(0), "3");
  EXPECT_EQ(s.lines().at(1), "c verify ok: covered 3 of 3");
}

TEST_F(CliTest, ForcedAllSatIgnoresProjection) {
  const Result r = invoke(
      {write("p.cnf", "p cnf 4 2\nc p show 1 3 0\n1 2 0\n3 4 0\n"), "--mode", "allsat", "--count",
       "only"});
  EXPECT_EQ(r.out, "9\n");
}

TEST_F(CliTest, FormulaInput) {
  const std::string f = write("f.txt", "(a | b) & !(a & c)\n");
  const Result r = invoke({f, "--format", "formula", "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.lines().at(0), "c var 1 a");
  EXPECT_EQ(r.lines().at(1), "c var 2 b");
  EXPECT_EQ(r.lines().at(2), "c var 3 c");
  EXPECT_NE(r.out.find("c mode projected\n"), std::string::npos);
  EXPECT_NE(r.out.find("c model-sum 4\n"), std::string::npos);
  EXPECT_EQ(invoke({f, "--format", "formula", "--cnfize", "pg", "--count", "only"}).out, "4\n");
}

TEST_F(CliTest, ParseErrorExitCode) {
  const Result r = invoke({write("bad.cnf", "p cnf 2 1\n1 3 0\n")});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({write("bad.txt", "a &"), "--format", "formula"}).code, kExitParse);
}

TEST_F(CliTest, UsageErrors) {
  const std::string f = write("small.cnf", kSmallCnf);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({f, "--shrink", "bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({f, "--no-such-flag"}).code, kExitUsage);
  EXPECT_EQ(invoke({(dir_ / "missing.cnf").string()}).code, kExitUsage);
  EXPECT_EQ(invoke({f, "--order", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({f, "--mode", "allsmt"}).code, kExitUsage);
  std::string big = "p cnf 25 1\n1 25 0\n";
  EXPECT_EQ(invoke({write("big.cnf", big), "--verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST_F(CliTest, FirstUipFailsVerification) {
  const Result r = invoke({write("small.cnf", kSmallCnf), "--shrink", "none", "--order", "3,2,1",
                           "--uip", "first", "--verify"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.err.find("overlap"), std::string::npos) << r.err;
}

TEST_F(CliTest, TimeoutExitCode) {
  std::ostringstream text;
  text << "p cnf 60 30\n";
  for (int i = 1; i <= 59; i += 2) text << i << ' ' << i + 1 << " 0\n";
  const Result r =
      invoke({write("pairs.cnf", text.str()), "--shrink", "none", "--timeout", "0.2", "--count",
              "only"});
  EXPECT_EQ(r.code, kExitTimeout);
}

TEST_F(CliTest, MaxModels) {
  const Result r = invoke({write("small.cnf", kSmallCnf), "--shrink", "none", "--max-models", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.model_lines().size(), 2u);
}

TEST_F(CliTest, GenIsDeterministicAndHonoursEnumSeed) {
  const Result a = invoke({"gen", "3sat", "--n", "12", "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(parse_dimacs(a.out).clauses.size(), 18u);
  EXPECT_EQ(invoke({"gen", "3sat", "--n", "12", "--seed", "5"}).out, a.out);
  const Result b = invoke({"gen", "3sat", "--n", "12", "--seed", "6"});
  EXPECT_NE(b.out, a.out);

  ::setenv("ENUM_SEED", "6", 1);
  const Result c = invoke({"gen", "3sat", "--n", "12", "--seed", "5"});
  ::unsetenv("ENUM_SEED");
  EXPECT_EQ(c.out, b.out);
}

TEST_F(CliTest, GenKinds) {
  const Result p = invoke({"gen", "pairs", "--n", "3"});
  EXPECT_EQ(p.out, "p cnf 6 3\n1 2 0\n3 4 0\n5 6 0\n");
  const Result d = invoke({"gen", "dl", "--seed", "3", "--atoms", "5"});
  ASSERT_EQ(d.code, kExitOk);
  EXPECT_EQ(parse_dimacs(d.out).atoms.bound_vars().size(), 5u);
  const std::string out = (dir_ / "f.txt").string();
  ASSERT_EQ(invoke({"gen", "formula", "--n", "4", "--seed", "2", "-o", out}).code, kExitOk);
  EXPECT_EQ(invoke({out, "--format", "formula", "--verify", "--count", "only"}).code, kExitOk);
  EXPECT_EQ(invoke({"gen", "3sat", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "nope"}).code, kExitUsage);
}

TEST_F(CliTest, BenchEmptyDirectoryPrintsHeaderOnly) {
  const Result r = invoke({"bench", dir_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, std::string(kBenchHeader) + "\n");
}

TEST_F(CliTest, BenchOneRowPerShrinker) {
  write("small.cnf", kSmallCnf);
  write("notes.txt", "ignored");
  const Result r = invoke({"bench", dir_.string(), "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], kBenchHeader);
  EXPECT_EQ(lines[1].rfind("small.cnf,watch,allsat,", 0), 0u) << lines[1];
  EXPECT_EQ(lines[2].rfind("small.cnf,aggressive,allsat,", 0), 0u) << lines[2];
  for (int i : {1, 2}) {
    std::vector<std::string> cols;
    std::stringstream ss(lines[i]);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    ASSERT_EQ(cols.size(), 11u);
    EXPECT_EQ(cols[8], "3");
    EXPECT_EQ(cols[9], "yes");
    EXPECT_EQ(cols[10], "0");
  }
}

TEST_F(CliTest, BenchRowOrderIndependentOfJobs) {
  for (int i = 0; i < 5; ++i) {
    std::ostringstream text;
    text << "p cnf 8 " << i + 1 << '\n';
    for (int k = 0; k <= i; ++k) text << k + 1 << ' ' << -(k + 2) << " 0\n";
    write("i" + std::to_string(i) + ".cnf", text.str());
  }
  write("broken.cnf", "p cnf x\n");
  std::vector<BenchRow> serial = bench(bench_corpus(dir_), BenchOptions{});
  BenchOptions parallel;
  parallel.jobs = 4;
  std::vector<BenchRow> threaded = bench(bench_corpus(dir_), parallel);
  ASSERT_EQ(serial.size(), 12u);
  ASSERT_EQ(threaded.size(), serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].instance, threaded[i].instance);
    EXPECT_EQ(serial[i].shrinker, threaded[i].shrinker);
    EXPECT_EQ(serial[i].stats.model_sum, threaded[i].stats.model_sum);
  }
  EXPECT_EQ(serial[0].instance, "broken.cnf");
  EXPECT_EQ(serial[0].verified, "parse-error");
}

TEST_F(CliTest, BenchWritesCsvFile) {
  write("small.cnf", kSmallCnf);
  const std::string csv = (dir_ / "out.csv.txt").string();
  const Result r = invoke({"bench", dir_.string(), "--shrink", "none", "--out", csv});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(csv);
  std::string header;
  std::string row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, kBenchHeader);
  EXPECT_EQ(row.rfind("small.cnf,none,allsat,", 0), 0u) << row;
}

TEST(BenchCsvTest, QuotesAwkwardInstanceNames) {
  BenchRow row;
  row.instance = "a,\"b\".cnf";
  std::ostringstream out;
  write_bench_csv(out, {row});
  EXPECT_NE(out.str().find("\n\"a,\"\"b\"\".cnf\",aggressive,"), std::string::npos) << out.str();
}

}  // namespace
}  // namespace disjenum::cli
