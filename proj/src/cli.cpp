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

#include "disjenum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "disjenum/difference_logic.hpp"
#include "disjenum/dimacs.hpp"
#include "disjenum/generators.hpp"
#include "disjenum/oracle.hpp"
#include "disjenum/prop_formula.hpp"

namespace disjenum::cli {
namespace {

using Clock = std::chrono::steady_clock;

const std::map<std::string, Mode> kModes{
    {"allsat", Mode::AllSat}, {"projected", Mode::Projected}, {"allsmt", Mode::AllSmt}};
const std::map<std::string, ShrinkerKind> kShrinkers{{"none", ShrinkerKind::None},
                                                     {"watch", ShrinkerKind::WatchBased},
                                                     {"aggressive", ShrinkerKind::Aggressive}};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("ENUM_SEED")) return std::strtoull(env, nullptr, 10);
  return flag;
}

// CLI11 wants argc/argv.
int parse_args(CLI::App& app, const std::vector<std::string>& args, std::size_t skip,
               std::ostream& out, std::ostream& err, bool& done) {
  std::vector<const char*> argv;
  argv.push_back(args.empty() ? "enum" : args[0].c_str());
  for (std::size_t i = 1 + skip; i < args.size(); ++i) argv.push_back(args[i].c_str());
  done = false;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    done = true;
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return kExitOk;
}

std::string model_line(const std::vector<Lit>& cube) {
  std::string s;
  for (Lit l : cube) {
    s += std::to_string(l.to_dimacs());
    s += ' ';
  }
  return s + "0";
}

int run_enumerate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjoint model enumeration (AllSAT, projected AllSAT, AllSMT)", "enum"};
  std::string input;
  std::string mode_name = "auto";
  std::string shrink_name = "aggressive";
  std::string uip_name = "last";
  std::string output = "models";
  std::string count_flag;
  std::string format = "dimacs";
  std::string cnfize_name = "tseitin";
  std::string order;
  bool phase = false;
  bool verify = false;
  bool no_tprop = false;
  bool check_invariants = false;
  double timeout_s = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_models = 0;
  VsadsParams vsads;

  app.add_option("input", input, "Input file, '-' for stdin")->required();
  app.add_option("--mode", mode_name, "auto | allsat | projected | allsmt")
      ->check(CLI::IsMember({"auto", "allsat", "projected", "allsmt"}));
  app.add_option("--shrink", shrink_name, "none | watch | aggressive")
      ->check(CLI::IsMember({"none", "watch", "aggressive"}));
  app.add_option("--uip", uip_name, "last | first (first is for demonstrations only)")
      ->check(CLI::IsMember({"last", "first"}));
  app.add_option("--phase", phase, "Decision polarity (default false)");
  app.add_option("--output", output, "models | count | stats-json")
      ->check(CLI::IsMember({"models", "count", "stats-json"}));
  app.add_option("--count", count_flag, "'only': same as --output count")
      ->check(CLI::IsMember({"only"}));
  app.add_option("--format", format, "dimacs | formula")
      ->check(CLI::IsMember({"dimacs", "formula"}));
  app.add_option("--cnfize", cnfize_name, "tseitin | pg (formula input)")
      ->check(CLI::IsMember({"tseitin", "pg"}));
  app.add_option("--order", order, "Comma-separated variables decided first, e.g. 3,2,1");
  app.add_option("--vsads-occ", vsads.occurrence_weight, "Occurrence weight");
  app.add_option("--vsads-act", vsads.activity_weight, "Activity weight");
  app.add_option("--vsads-bump", vsads.bump, "Activity bump per conflict clause");
  app.add_option("--vsads-decay", vsads.decay, "Activity decay per conflict")
      ->check(CLI::Range(0.0, 1.0));
  app.add_flag("--verify", verify, "Check the run against the brute-force oracle");
  app.add_flag("--no-theory-propagation", no_tprop, "Theory checks on total assignments only");
  app.add_flag("--check-invariants", check_invariants, "Re-verify conflicts and shrunk trails");
  app.add_option("--timeout", timeout_s, "Seconds; 0 = none")->check(CLI::NonNegativeNumber);
  app.add_option("--max-models", max_models, "Stop after this many partial models");
  app.add_option("--seed", seed, "Recorded in statistics; ENUM_SEED overrides");

  bool done = false;
  const int code = parse_args(app, args, 0, out, err, done);
  if (done) return code;
  if (count_flag == "only") output = "count";
  seed = effective_seed(seed);

  Formula formula;
  std::vector<std::string> names;
  try {
    const std::string text = read_input(input);
    if (format == "dimacs") {
      formula = parse_dimacs(std::string_view(text));
    } else {
      ParsedFormula parsed = parse_prop_formula(text);
      names = parsed.names;
      formula = cnfize(parsed.ast,
                       cnfize_name == "pg" ? CnfEncoding::PlaistedGreenbaum : CnfEncoding::Tseitin,
                       parsed.names.size());
    }
  } catch (const ParseError& e) {
    err << input << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  SolverConfig config;
  config.mode = mode_name == "auto" ? infer_mode(formula) : kModes.at(mode_name);
  config.shrinker = kShrinkers.at(shrink_name);
  config.uip = uip_name == "first" ? UipScheme::First : UipScheme::Last;
  config.default_phase = phase;
  config.vsads = vsads;
  config.theory_propagation = !no_tprop;
  config.check_invariants = check_invariants;
  config.model_limit = max_models;
  if (timeout_s > 0)
    config.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(timeout_s));
  if (!order.empty()) {
    std::stringstream ss(order);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const long v = std::strtol(tok.c_str(), nullptr, 10);
      if (v < 1 || static_cast<std::size_t>(v) > formula.num_vars) {
        err << "--order: variable " << tok << " out of range\n";
        return kExitUsage;
      }
      config.fixed_order.push_back(static_cast<Var>(v - 1));
    }
  }
  if (config.mode == Mode::AllSmt && formula.atoms.empty()) {
    err << "allsmt mode needs 'c atom' lines in the input\n";
    return kExitUsage;
  }
  OracleOptions oracle_opts;
  if (verify && formula.num_vars > oracle_opts.max_vars) {
    err << "--verify supports at most " << oracle_opts.max_vars << " variables, input has "
        << formula.num_vars << '\n';
    return kExitUsage;
  }
  if (config.mode == Mode::AllSat) formula.relevant.clear();

  DifferenceLogic theory;
  Solver solver(formula, config, config.mode == Mode::AllSmt ? &theory : nullptr);
  std::vector<std::vector<Lit>> cubes;
  const bool print_models = output == "models";
  if (print_models)
    for (std::size_t i = 0; i < names.size(); ++i)
      out << "c var " << i + 1 << ' ' << names[i] << '\n';
  const auto start = Clock::now();
  const EnumStats stats = solver.enumerate([&](const PartialModel& m) {
    if (print_models) out << model_line(m.relevant) << '\n';
    if (verify) cubes.push_back(m.relevant);
  });
  const double wall = std::chrono::duration<double>(Clock::now() - start).count();

  std::optional<VerificationReport> report;
  if (verify) {
    DifferenceLogic oracle_theory;
    report = verify_enumeration(
        cubes, brute_force(formula, config.mode == Mode::AllSmt ? &oracle_theory : nullptr,
                           oracle_opts));
  }

  if (output == "count") {
    out << stats.model_sum << '\n';
    if (report) out << "c verify " << report->summary() << '\n';
  } else if (output == "models") {
    out << "c mode " << to_string(config.mode) << '\n';
    out << "c shrinker " << to_string(config.shrinker) << '\n';
    out << "c partials " << stats.models << '\n';
    out << "c model-sum " << stats.model_sum << '\n';
    out << "c conflicts " << stats.conflicts << '\n';
    out << "c decisions " << stats.decisions << '\n';
    out << "c peak-db " << stats.peak_db << '\n';
    out << "c wall-s " << std::fixed << std::setprecision(6) << wall << '\n';
    if (stats.timed_out) out << "c timed-out\n";
    if (report) out << "c verify " << report->summary() << '\n';
  } else {
    nlohmann::json j;
    j["mode"] = to_string(config.mode);
    j["shrinker"] = to_string(config.shrinker);
    j["vars"] = formula.num_vars;
    j["relevant_vars"] = solver.num_relevant();
    j["clauses"] = formula.clauses.size();
    j["partials"] = stats.models;
    j["model_sum"] = stats.model_sum.str();
    j["conflicts"] = stats.conflicts;
    j["theory_conflicts"] = stats.theory_conflicts;
    j["decisions"] = stats.decisions;
    j["replayed_decisions"] = stats.replayed_decisions;
    j["propagations"] = stats.propagations;
    j["initial_db"] = stats.initial_db;
    j["peak_db"] = stats.peak_db;
    j["learned"] = stats.learned;
    j["terminated_by_conflict"] = stats.terminated_by_conflict;
    j["wall_s"] = wall;
    j["timed_out"] = stats.timed_out;
    j["seed"] = seed;
    if (report) {
      j["verified"] = report->ok();
      j["verification"] = report->summary();
    } else {
      j["verified"] = nullptr;
    }
    out << j.dump(2) << '\n';
  }
  if (report && !report->ok()) {
    err << "verification failed: " << report->summary() << '\n';
    return kExitVerifyFailed;
  }
  return stats.timed_out ? kExitTimeout : kExitOk;
}

int run_bench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Run every *.cnf in a directory and print one CSV row per configuration",
               "enum bench"};
  std::string dir;
  std::vector<std::string> shrinkers{"watch", "aggressive"};
  std::string mode_name = "auto";
  std::string csv_path;
  BenchOptions options;
  app.add_option("dir", dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  app.add_option("--shrink", shrinkers, "Shrinkers to run (repeatable)")
      ->check(CLI::IsMember({"none", "watch", "aggressive"}));
  app.add_option("--mode", mode_name, "auto | allsat | projected | allsmt")
      ->check(CLI::IsMember({"auto", "allsat", "projected", "allsmt"}));
  app.add_option("--timeout", options.timeout_s, "Seconds per run")->check(CLI::PositiveNumber);
  app.add_option("--jobs", options.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--verify", options.verify, "Check runs with the oracle (<= 24 variables)");
  app.add_option("--out", csv_path, "Write the CSV here instead of stdout");

  bool done = false;
  const int code = parse_args(app, args, 1, out, err, done);
  if (done) return code;
  options.shrinkers.clear();
  for (const auto& s : shrinkers) options.shrinkers.push_back(kShrinkers.at(s));
  if (mode_name != "auto") options.mode = kModes.at(mode_name);

  const auto rows = bench(bench_corpus(dir), options);
  if (csv_path.empty()) {
    write_bench_csv(out, rows);
  } else {
    std::ofstream f(csv_path);
    if (!f) {
      err << "cannot write " << csv_path << '\n';
      return kExitUsage;
    }
    write_bench_csv(f, rows);
  }
  return kExitOk;
}

int run_gen(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Write a generated instance", "enum gen"};
  std::string kind = "3sat";
  int n = 16;
  int depth = 4;
  std::uint64_t seed = 0;
  DlInstanceShape shape;
  std::string path;
  app.add_option("kind", kind, "3sat | pairs | dl | formula")
      ->check(CLI::IsMember({"3sat", "pairs", "dl", "formula"}));
  app.add_option("--n", n, "Variables (3sat, formula) or clauses (pairs)");
  app.add_option("--depth", depth, "Formula depth");
  app.add_option("--seed", seed, "RNG seed; ENUM_SEED overrides");
  app.add_option("--theory-vars", shape.theory_vars);
  app.add_option("--atoms", shape.atoms);
  app.add_option("--bool-vars", shape.bool_vars);
  app.add_option("--clauses", shape.clauses);
  app.add_option("-o,--out", path, "Output file (default stdout)");

  bool done = false;
  const int code = parse_args(app, args, 1, out, err, done);
  if (done) return code;
  seed = effective_seed(seed);

  std::ostringstream text;
  try {
    if (kind == "3sat") {
      write_dimacs(text, gen_random_3sat(n, seed));
    } else if (kind == "pairs") {
      write_dimacs(text, gen_disjoint_pairs(n));
    } else if (kind == "dl") {
      write_dimacs(text, gen_random_dl_instance(shape, seed));
    } else {
      text << gen_random_prop_formula(n, depth, seed).to_string() << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (path.empty()) {
    out << text.str();
  } else {
    std::ofstream f(path);
    if (!f) {
      err << "cannot write " << path << '\n';
      return kExitUsage;
    }
    f << text.str();
  }
  return kExitOk;
}

}  // namespace

Mode infer_mode(const Formula& f) {
  if (!f.atoms.empty()) return Mode::AllSmt;
  if (f.has_projection()) return Mode::Projected;
  return Mode::AllSat;
}

std::vector<std::filesystem::path> bench_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cnf") out.push_back(entry.path());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  return out;
}

std::vector<BenchRow> bench(const std::vector<std::filesystem::path>& corpus,
                            const BenchOptions& options) {
  std::vector<BenchRow> rows(corpus.size() * options.shrinkers.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      const auto& path = corpus[i / options.shrinkers.size()];
      BenchRow& row = rows[i];
      row.instance = path.filename().string();
      row.shrinker = options.shrinkers[i % options.shrinkers.size()];
      Formula f;
      try {
        std::ifstream in(path);
        f = parse_dimacs(in);
      } catch (const std::exception&) {
        row.verified = "parse-error";
        continue;
      }
      SolverConfig config;
      config.mode = options.mode.value_or(infer_mode(f));
      config.shrinker = row.shrinker;
      config.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(options.timeout_s));
      row.mode = config.mode;
      if (config.mode == Mode::AllSat) f.relevant.clear();
      const bool verify = options.verify && f.num_vars <= OracleOptions{}.max_vars;
      DifferenceLogic theory;
      std::vector<std::vector<Lit>> cubes;
      const auto start = Clock::now();
      Solver solver(f, config, config.mode == Mode::AllSmt ? &theory : nullptr);
      row.stats = solver.enumerate([&](const PartialModel& m) {
        if (verify) cubes.push_back(m.relevant);
      });
      row.wall_s = std::chrono::duration<double>(Clock::now() - start).count();
      if (verify && !row.stats.timed_out) {
        DifferenceLogic oracle_theory;
        const auto truth =
            brute_force(f, config.mode == Mode::AllSmt ? &oracle_theory : nullptr);
        row.verified = verify_enumeration(cubes, truth).ok() ? "yes" : "no";
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

namespace {

// RFC 4180 quoting, only when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.instance) << ',' << to_string(r.shrinker) << ',' << to_string(r.mode) << ','
        << std::fixed << std::setprecision(6) << r.wall_s << ',' << r.stats.models << ','
        << r.stats.conflicts << ',' << r.stats.decisions << ',' << r.stats.peak_db << ','
        << r.stats.model_sum << ',' << r.verified << ',' << (r.stats.timed_out ? 1 : 0) << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.size() >= 2 && args[1] == "bench") return run_bench(args, out, err);
  if (args.size() >= 2 && args[1] == "gen") return run_gen(args, out, err);
  return run_enumerate(args, out, err);
}

}  // namespace disjenum::cli
