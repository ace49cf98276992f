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

#include "disjenum/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "disjenum/clause_db.hpp"

namespace disjenum {
namespace {

std::optional<long long> to_integer(std::string_view tok) {
  long long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Rational parse_rational(std::string_view tok, int line) {
  const auto slash = tok.find('/');
  const auto num = to_integer(tok.substr(0, slash));
  long long den = 1;
  if (slash != std::string_view::npos) {
    const auto d = to_integer(tok.substr(slash + 1));
    if (!d) throw ParseError(line, "bad rational denominator '" + std::string(tok) + "'");
    den = *d;
  }
  if (!num) throw ParseError(line, "bad rational '" + std::string(tok) + "'");
  if (den <= 0) throw ParseError(line, "rational denominator must be positive");
  return Rational(*num, den);
}

struct PendingAtom {
  int line;
  long long var;
  std::string u;
  std::string v;
  Rational bound;
};

}  // namespace

Formula parse_dimacs(std::istream& in) {
  Formula f;
  bool have_header = false;
  long long declared_vars = 0;
  std::vector<Lit> clause;
  int clause_line = 0;
  std::vector<std::pair<int, long long>> show;
  bool have_show = false;
  std::vector<PendingAtom> atoms;

  auto check_var = [&](long long v, int line) {
    if (v < 1 || v > declared_vars)
      throw ParseError(line, "variable " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(declared_vars));
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = split(raw);
    if (toks.empty()) continue;
    if (toks[0][0] == 'c') {
      if (toks.size() >= 3 && toks[0] == "c" && toks[1] == "p" && toks[2] == "show") {
        have_show = true;
        bool terminated = false;
        for (std::size_t i = 3; i < toks.size(); ++i) {
          const auto v = to_integer(toks[i]);
          if (!v)
            throw ParseError(line_no, "bad projection variable '" + std::string(toks[i]) + "'");
          if (*v == 0) {
            terminated = true;
            break;
          }
          show.emplace_back(line_no, *v);
        }
        if (!terminated) throw ParseError(line_no, "projection line not terminated by 0");
      } else if (toks.size() >= 2 && toks[0] == "c" && toks[1] == "atom") {
        if (toks.size() != 6) throw ParseError(line_no, "expected 'c atom <var> <u> <v> <bound>'");
        const auto v = to_integer(toks[2]);
        if (!v) throw ParseError(line_no, "bad atom variable");
        atoms.push_back(PendingAtom{line_no, *v, std::string(toks[3]), std::string(toks[4]),
                                    parse_rational(toks[5], line_no)});
      }
      continue;
    }
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError(line_no, "malformed header");
      const auto nv = to_integer(toks[2]);
      const auto nc = to_integer(toks[3]);
      if (!nv || !nc || *nv < 0 || *nc < 0) throw ParseError(line_no, "malformed header");
      declared_vars = *nv;
      f.num_vars = static_cast<std::size_t>(*nv);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
    for (auto tok : toks) {
      const auto lit = to_integer(tok);
      if (!lit) throw ParseError(line_no, "bad literal '" + std::string(tok) + "'");
      if (*lit == 0) {
        if (normalize_clause(clause)) f.clauses.push_back(std::move(clause));
        clause.clear();
        clause_line = 0;
        continue;
      }
      check_var(*lit < 0 ? -*lit : *lit, line_no);
      if (clause.empty()) clause_line = line_no;
      clause.push_back(Lit::from_dimacs(static_cast<int>(*lit)));
    }
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
  if (!clause.empty()) throw ParseError(clause_line, "unterminated clause");

  if (have_show) {
    std::vector<Var> vars;
    for (auto [line, v] : show) {
      check_var(v, line);
      vars.push_back(static_cast<Var>(v - 1));
    }
    f.set_relevant(vars);
  }
  for (const auto& a : atoms) {
    check_var(a.var, a.line);
    TheoryAtom atom{f.atoms.intern(a.u), f.atoms.intern(a.v), a.bound};
    try {
      f.atoms.bind(static_cast<Var>(a.var - 1), atom);
    } catch (const std::invalid_argument& e) {
      throw ParseError(a.line, e.what());
    }
  }
  return f;
}

Formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Formula& f) {
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  if (f.has_projection()) {
    out << "c p show";
    for (Var v : f.relevant_vars()) out << ' ' << v + 1;
    out << " 0\n";
  }
  for (Var v : f.atoms.bound_vars()) {
    const TheoryAtom& a = *f.atoms.atom_of(v);
    out << "c atom " << v + 1 << ' ' << f.atoms.name(a.u) << ' ' << f.atoms.name(a.v) << ' '
        << a.bound.numerator();
    if (a.bound.denominator() != 1) out << '/' << a.bound.denominator();
    out << '\n';
  }
  for (const auto& c : f.clauses) {
    for (Lit l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string serialize_dimacs(const Formula& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

}  // namespace disjenum
