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

#include "disjenum/oracle.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace disjenum {
namespace {

class FixedAtoms : public TheoryContext {
 public:
  explicit FixedAtoms(const AtomTable& atoms) : atoms_(atoms) {}
  const AtomTable& atoms() const override { return atoms_; }
  Var register_atom(const TheoryAtom& atom) override {
    if (auto v = atoms_.find(atom)) return *v;
    throw std::logic_error("the oracle does not support new theory atoms");
  }

 private:
  const AtomTable& atoms_;
};

constexpr std::uint64_t kLowPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

std::vector<std::uint64_t> ModelSet::models() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < bitmap.size(); ++w) {
    std::uint64_t bits = bitmap[w];
    while (bits) {
      out.push_back(64 * w + static_cast<std::uint64_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t ModelSet::encode(const std::vector<bool>& assignment) const {
  std::uint64_t a = 0;
  for (std::size_t i = 0; i < relevant.size(); ++i)
    if (assignment.at(relevant[i])) a |= std::uint64_t{1} << i;
  return a;
}

ModelSet brute_force(const Formula& formula, Theory* theory, const OracleOptions& options) {
  const std::size_t n = formula.num_vars;
  if (n > options.max_vars)
    throw std::length_error("oracle refuses " + std::to_string(n) + " variables (cap " +
                            std::to_string(options.max_vars) + ")");
  ModelSet out;
  out.relevant = formula.relevant_vars();
  const std::size_t r = out.relevant.size();
  out.bitmap.assign(r >= 6 ? (std::size_t{1} << (r - 6)) : 1, 0);

  for (const auto& c : formula.clauses)
    if (c.empty()) return out;

  std::vector<int> rel_index(n, -1);
  for (std::size_t i = 0; i < r; ++i) rel_index[out.relevant[i]] = static_cast<int>(i);

  FixedAtoms ctx(formula.atoms);
  const std::vector<Var>& atom_vars = formula.atoms.bound_vars();
  if (theory != nullptr && atom_vars.size() > 64)
    throw std::length_error("oracle supports at most 64 theory atoms");
  std::unordered_map<std::uint64_t, bool> consistent;
  auto theory_ok = [&](std::uint64_t a) {
    if (theory == nullptr || atom_vars.empty()) return true;
    std::uint64_t key = 0;
    std::vector<AssignedAtom> assigned;
    for (std::size_t i = 0; i < atom_vars.size(); ++i) {
      const Var v = atom_vars[i];
      const bool value = (a >> v) & 1u;
      if (value) key |= std::uint64_t{1} << i;
      assigned.push_back(AssignedAtom{v, *formula.atoms.atom_of(v), value});
    }
    auto it = consistent.find(key);
    if (it != consistent.end()) return it->second;
    const bool ok =
        theory->check(assigned, ctx).outcome != TheoryVerdict::Outcome::Conflict;
    consistent.emplace(key, ok);
    return ok;
  };

  const std::uint64_t valid = n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
  const std::uint64_t blocks = n > 6 ? (std::uint64_t{1} << (n - 6)) : 1;
  std::vector<std::uint64_t> word(n);
  for (std::uint64_t block = 0; block < blocks; ++block) {
    for (std::size_t v = 0; v < n; ++v)
      word[v] = v < 6 ? kLowPattern[v] : (((block >> (v - 6)) & 1u) ? ~std::uint64_t{0} : 0);
    std::uint64_t sat = valid;
    for (const auto& c : formula.clauses) {
      std::uint64_t w = 0;
      for (Lit l : c) w |= l.negated() ? ~word[l.var()] : word[l.var()];
      sat &= w;
      if (!sat) break;
    }
    while (sat) {
      const std::uint64_t a = block * 64 + static_cast<std::uint64_t>(std::countr_zero(sat));
      sat &= sat - 1;
      if (!theory_ok(a)) continue;
      std::uint64_t p = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (rel_index[v] >= 0 && ((a >> v) & 1u)) p |= std::uint64_t{1} << rel_index[v];
      out.bitmap[p >> 6] |= std::uint64_t{1} << (p & 63);
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t w : out.bitmap) count += static_cast<std::uint64_t>(std::popcount(w));
  out.count = count;
  return out;
}

bool cubes_clash(const std::vector<Lit>& a, const std::vector<Lit>& b) {
  for (Lit x : a)
    for (Lit y : b)
      if (x == ~y) return true;
  return false;
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << (ok() ? "ok" : "FAILED") << ": covered " << covered << " of " << expected;
  for (const auto& e : errors) out << "; " << e;
  return out.str();
}

VerificationReport verify_enumeration(const std::vector<std::vector<Lit>>& cubes,
                                      const ModelSet& truth) {
  VerificationReport rep;
  rep.expected = truth.count;
  const std::size_t r = truth.relevant.size();
  if (r > 30) throw std::length_error("verification supports at most 30 relevant variables");
  std::unordered_map<Var, std::size_t> index;
  for (std::size_t i = 0; i < r; ++i) index.emplace(truth.relevant[i], i);
  const std::uint64_t all = r == 0 ? 0 : ((std::uint64_t{1} << r) - 1);
  std::vector<std::uint64_t> covered(r >= 6 ? (std::size_t{1} << (r - 6)) : 1, 0);

  // Cube k as (mask of fixed positions, their values).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> encoded;
  for (std::size_t k = 0; k < cubes.size(); ++k) {
    std::uint64_t mask = 0;
    std::uint64_t bits = 0;
    bool valid = true;
    for (Lit l : cubes[k]) {
      auto it = index.find(l.var());
      if (it == index.end()) {
        rep.sound = false;
        rep.errors.push_back("cube " + std::to_string(k) + " mentions irrelevant variable " +
                             std::to_string(l.var() + 1));
        valid = false;
        break;
      }
      const std::uint64_t bit = std::uint64_t{1} << it->second;
      if (mask & bit) {
        rep.sound = false;
        rep.errors.push_back("cube " + std::to_string(k) + " repeats variable " +
                             std::to_string(l.var() + 1));
        valid = false;
        break;
      }
      mask |= bit;
      if (!l.negated()) bits |= bit;
    }
    encoded.emplace_back(mask, bits);
    if (!valid) continue;

    const std::uint64_t free = all & ~mask;
    rep.covered += boost::multiprecision::cpp_int(1) << std::popcount(free);
    std::uint64_t sub = 0;
    do {
      const std::uint64_t a = bits | sub;
      if (!truth.contains(a) && rep.sound) {
        rep.sound = false;
        rep.unsound_cube = k;
        rep.witness = a;
        rep.errors.push_back("cube " + std::to_string(k) + " extends to a non-model");
      }
      std::uint64_t& word = covered[a >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (a & 63);
      if ((word & bit) && rep.disjoint) {
        rep.disjoint = false;
        for (std::size_t j = 0; j < k; ++j) {
          const auto [mj, bj] = encoded[j];
          if ((a & mj) == bj) {
            rep.overlap = std::make_pair(j, k);
            break;
          }
        }
        std::ostringstream msg;
        msg << "cubes " << (rep.overlap ? rep.overlap->first : 0) << " and " << k << " overlap";
        rep.errors.push_back(msg.str());
      }
      word |= bit;
      sub = (sub - free) & free;
    } while (sub != 0);
  }
  rep.complete = rep.covered == rep.expected;
  if (!rep.complete) rep.errors.push_back("coverage differs from the model count");
  return rep;
}

VerificationReport verify_enumeration(const std::vector<PartialModel>& partials,
                                      const ModelSet& truth) {
  std::vector<std::vector<Lit>> cubes;
  cubes.reserve(partials.size());
  for (const auto& p : partials) cubes.push_back(p.relevant);
  return verify_enumeration(cubes, truth);
}

}  // namespace disjenum
