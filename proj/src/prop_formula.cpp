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

#include "disjenum/prop_formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "disjenum/clause_db.hpp"
#include "disjenum/dimacs.hpp"

namespace disjenum {

PropAst PropAst::variable(Var v) {
  PropAst a;
  a.kind = Kind::Var;
  a.var = v;
  return a;
}

PropAst PropAst::negation(PropAst child) {
  PropAst a;
  a.kind = Kind::Not;
  a.children.push_back(std::move(child));
  return a;
}

PropAst PropAst::conjunction(std::vector<PropAst> children) {
  PropAst a;
  a.kind = Kind::And;
  a.children = std::move(children);
  return a;
}

PropAst PropAst::disjunction(std::vector<PropAst> children) {
  PropAst a;
  a.kind = Kind::Or;
  a.children = std::move(children);
  return a;
}

PropAst PropAst::iff(PropAst left, PropAst right) {
  PropAst a;
  a.kind = Kind::Iff;
  a.children.push_back(std::move(left));
  a.children.push_back(std::move(right));
  return a;
}

PropAst PropAst::implies(PropAst left, PropAst right) {
  PropAst a;
  a.kind = Kind::Implies;
  a.children.push_back(std::move(left));
  a.children.push_back(std::move(right));
  return a;
}

std::size_t PropAst::num_vars() const {
  if (kind == Kind::Var) return static_cast<std::size_t>(var) + 1;
  std::size_t n = 0;
  for (const auto& c : children) n = std::max(n, c.num_vars());
  return n;
}

bool PropAst::evaluate(const std::vector<bool>& assignment) const {
  switch (kind) {
    case Kind::Var:
      return assignment.at(var);
    case Kind::Not:
      return !children[0].evaluate(assignment);
    case Kind::And:
      return std::all_of(children.begin(), children.end(),
                         [&](const PropAst& c) { return c.evaluate(assignment); });
    case Kind::Or:
      return std::any_of(children.begin(), children.end(),
                         [&](const PropAst& c) { return c.evaluate(assignment); });
    case Kind::Iff:
      return children[0].evaluate(assignment) == children[1].evaluate(assignment);
    case Kind::Implies:
      return !children[0].evaluate(assignment) || children[1].evaluate(assignment);
  }
  return false;
}

std::string PropAst::to_string() const {
  auto join = [this](const char* op) {
    std::string s = "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) s += op;
      s += children[i].to_string();
    }
    return s + ")";
  };
  switch (kind) {
    case Kind::Var:
      return "x" + std::to_string(var + 1);
    case Kind::Not:
      return "!" + children[0].to_string();
    case Kind::And:
      return join(" & ");
    case Kind::Or:
      return join(" | ");
    case Kind::Iff:
      return join(" <-> ");
    case Kind::Implies:
      return join(" -> ");
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedFormula run() {
    ParsedFormula out;
    out.ast = parse_iff();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    out.names = std::move(names_);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, what + " at column " + std::to_string(pos_ - line_start_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      } else if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        break;
      }
      ++pos_;
    }
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  PropAst parse_iff() {
    PropAst left = parse_implies();
    while (accept("<->")) left = PropAst::iff(std::move(left), parse_implies());
    return left;
  }

  PropAst parse_implies() {
    PropAst left = parse_or();
    if (accept("->")) return PropAst::implies(std::move(left), parse_implies());
    return left;
  }

  PropAst parse_or() {
    std::vector<PropAst> parts;
    parts.push_back(parse_and());
    while (accept("|")) parts.push_back(parse_and());
    if (parts.size() == 1) return std::move(parts[0]);
    return PropAst::disjunction(std::move(parts));
  }

  PropAst parse_and() {
    std::vector<PropAst> parts;
    parts.push_back(parse_unary());
    while (accept("&")) parts.push_back(parse_unary());
    if (parts.size() == 1) return std::move(parts[0]);
    return PropAst::conjunction(std::move(parts));
  }

  PropAst parse_unary() {
    if (accept("!")) return PropAst::negation(parse_unary());
    if (accept("(")) {
      PropAst inner = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(ch)) && ch != '_')
      fail("expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') break;
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    auto [it, inserted] = ids_.try_emplace(name, static_cast<Var>(names_.size()));
    if (inserted) names_.push_back(name);
    return PropAst::variable(it->second);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
  std::map<std::string, Var> ids_;
  std::vector<std::string> names_;
};

enum class Polarity { Pos, Neg, Both };

Polarity flip(Polarity p) {
  if (p == Polarity::Pos) return Polarity::Neg;
  if (p == Polarity::Neg) return Polarity::Pos;
  return Polarity::Both;
}

class Encoder {
 public:
  Encoder(CnfEncoding encoding, std::size_t num_vars) : encoding_(encoding) {
    out_.num_vars = num_vars;
  }

  Formula finish(const PropAst& root) {
    const std::size_t original = out_.num_vars;
    const Lit top = encode(root, Polarity::Pos);
    emit({top});
    if (out_.num_vars > original) {
      std::vector<Var> vr(original);
      for (Var v = 0; v < original; ++v) vr[v] = v;
      out_.set_relevant(vr);
    }
    return std::move(out_);
  }

 private:
  bool need_pos(Polarity p) const {
    return encoding_ == CnfEncoding::Tseitin || p != Polarity::Neg;
  }
  bool need_neg(Polarity p) const {
    return encoding_ == CnfEncoding::Tseitin || p != Polarity::Pos;
  }

  void emit(std::vector<Lit> clause) {
    if (normalize_clause(clause)) out_.clauses.push_back(std::move(clause));
  }

  Lit fresh() { return Lit::pos(static_cast<Var>(out_.num_vars++)); }

  Lit encode(const PropAst& node, Polarity p) {
    using Kind = PropAst::Kind;
    switch (node.kind) {
      case Kind::Var:
        return Lit::pos(node.var);
      case Kind::Not:
        return ~encode(node.children[0], flip(p));
      case Kind::And:
      case Kind::Or: {
        std::vector<Lit> kids;
        for (const auto& c : node.children) kids.push_back(encode(c, p));
        return node.kind == Kind::And ? define_and(kids, p) : define_or(kids, p);
      }
      case Kind::Implies: {
        const Lit a = encode(node.children[0], flip(p));
        const Lit c = encode(node.children[1], p);
        return define_or({~a, c}, p);
      }
      case Kind::Iff: {
        const Lit a = encode(node.children[0], Polarity::Both);
        const Lit c = encode(node.children[1], Polarity::Both);
        const Lit b = fresh();
        if (need_pos(p)) {
          emit({~b, ~a, c});
          emit({~b, a, ~c});
        }
        if (need_neg(p)) {
          emit({b, a, c});
          emit({b, ~a, ~c});
        }
        return b;
      }
    }
    return Lit::pos(0);
  }

  Lit define_and(const std::vector<Lit>& kids, Polarity p) {
    const Lit b = fresh();
    if (need_pos(p))
      for (Lit k : kids) emit({~b, k});
    if (need_neg(p)) {
      std::vector<Lit> c{b};
      for (Lit k : kids) c.push_back(~k);
      emit(std::move(c));
    }
    return b;
  }

  Lit define_or(const std::vector<Lit>& kids, Polarity p) {
    const Lit b = fresh();
    if (need_pos(p)) {
      std::vector<Lit> c{~b};
      c.insert(c.end(), kids.begin(), kids.end());
      emit(std::move(c));
    }
    if (need_neg(p))
      for (Lit k : kids) emit({b, ~k});
    return b;
  }

  CnfEncoding encoding_;
  Formula out_;
};

}  // namespace

ParsedFormula parse_prop_formula(std::string_view text) { return Parser(text).run(); }

Formula cnfize(const PropAst& ast, CnfEncoding encoding, std::optional<std::size_t> num_vars) {
  const std::size_t n = num_vars.value_or(ast.num_vars());
  if (n < ast.num_vars()) throw std::invalid_argument("num_vars smaller than formula");
  return Encoder(encoding, n).finish(ast);
}

}  // namespace disjenum
