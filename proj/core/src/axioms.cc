// Copyright 2026 The jdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jdl/axioms.h"

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace jdl {

std::string_view SystemName(SystemId sys) {
  switch (sys) {
    case SystemId::kJD: return "jd";
    case SystemId::kJNoC: return "jnoc";
    case SystemId::kJNoCMinus: return "jnoc-minus";
    case SystemId::kJNoCPlus: return "jnoc-plus";
  }
  return "?";
}

std::optional<SystemId> ParseSystemName(std::string_view name) {
  for (SystemId sys : {SystemId::kJD, SystemId::kJNoC, SystemId::kJNoCMinus,
                       SystemId::kJNoCPlus}) {
    if (SystemName(sys) == name) return sys;
  }
  return std::nullopt;
}

std::string_view AxiomTagName(AxiomTag tag) {
  switch (tag) {
    case AxiomTag::kCl: return "cl";
    case AxiomTag::kJPlus: return "j+";
    case AxiomTag::kJ: return "j";
    case AxiomTag::kJd: return "jd";
    case AxiomTag::kNoc: return "noc";
    case AxiomTag::kJTop: return "jtop";
  }
  return "?";
}

std::optional<AxiomTag> ParseAxiomTagName(std::string_view name) {
  for (AxiomTag tag : {AxiomTag::kCl, AxiomTag::kJPlus, AxiomTag::kJ,
                       AxiomTag::kJd, AxiomTag::kNoc, AxiomTag::kJTop}) {
    if (AxiomTagName(tag) == name) return tag;
  }
  return std::nullopt;
}

bool HasSchema(SystemId sys, AxiomTag tag) {
  switch (tag) {
    case AxiomTag::kCl:
    case AxiomTag::kJ:
      return true;
    case AxiomTag::kJPlus:
      return sys != SystemId::kJNoCMinus;
    case AxiomTag::kJd:
      return sys == SystemId::kJD;
    case AxiomTag::kNoc:
      return sys != SystemId::kJD;
    case AxiomTag::kJTop:
      return sys == SystemId::kJNoCPlus;
  }
  return false;
}

bool HasSum(SystemId sys) { return sys != SystemId::kJNoCMinus; }

// ---------------------------------------------------------------------------
// Tautologies

namespace {

void CollectModalAtoms(const Formula& f, std::vector<Formula>& out,
                       std::map<Formula, std::size_t>& seen) {
  switch (f.kind()) {
    case Formula::Kind::kFalsum:
      return;
    case Formula::Kind::kImplies:
      CollectModalAtoms(f.antecedent(), out, seen);
      CollectModalAtoms(f.consequent(), out, seen);
      return;
    case Formula::Kind::kAtom:
    case Formula::Kind::kHolds:
      if (seen.emplace(f, out.size()).second) out.push_back(f);
      return;
  }
}

// Bit-parallel truth table: bit k of the table is the value under the
// assignment whose i-th modal atom takes bit i of k.
using Table = std::vector<std::uint64_t>;

class TableEvaluator {
 public:
  explicit TableEvaluator(const std::vector<Formula>& atoms) {
    const std::size_t n = atoms.size();
    if (n > 30) throw std::length_error("too many modal atoms for a truth table");
    rows_ = std::size_t{1} << n;
    words_ = (rows_ + 63) / 64;
    for (std::size_t i = 0; i < n; ++i) {
      Table t(words_, 0);
      for (std::size_t row = 0; row < rows_; ++row) {
        if ((row >> i) & 1U) t[row / 64] |= std::uint64_t{1} << (row % 64);
      }
      atom_tables_.emplace(atoms[i], std::move(t));
    }
  }

  Table Eval(const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::kFalsum:
        return Table(words_, 0);
      case Formula::Kind::kAtom:
      case Formula::Kind::kHolds:
        return atom_tables_.at(f);
      case Formula::Kind::kImplies: {
        Table a = Eval(f.antecedent());
        const Table b = Eval(f.consequent());
        for (std::size_t w = 0; w < words_; ++w) a[w] = ~a[w] | b[w];
        return a;
      }
    }
    return {};
  }

  bool AllTrue(const Table& t) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t mask = ~std::uint64_t{0};
      if (w + 1 == words_ && rows_ % 64 != 0) {
        mask = (std::uint64_t{1} << (rows_ % 64)) - 1;
      }
      if ((t[w] & mask) != mask) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 1;
  std::size_t words_ = 1;
  std::map<Formula, Table> atom_tables_;
};

}  // namespace

std::vector<Formula> ModalAtoms(const Formula& f) {
  std::vector<Formula> out;
  std::map<Formula, std::size_t> seen;
  CollectModalAtoms(f, out, seen);
  return out;
}

bool IsTautology(const Formula& f) {
  TableEvaluator eval(ModalAtoms(f));
  return eval.AllTrue(eval.Eval(f));
}

// ---------------------------------------------------------------------------
// Schemas

Formula AxiomJ(const Term& s, const Term& t, const Formula& a, const Formula& b) {
  return Formula::Implies(
      Formula::Holds(s, Formula::Implies(a, b)),
      Formula::Implies(Formula::Holds(t, a), Formula::Holds(Term::App(s, t), b)));
}

Formula AxiomJPlus(const Term& s, const Term& t, const Formula& a) {
  return Formula::Implies(Or(Formula::Holds(s, a), Formula::Holds(t, a)),
                          Formula::Holds(Term::Sum(s, t), a));
}

Formula AxiomJd(const Term& t) { return Not(Formula::Holds(t, Formula::Falsum())); }

Formula AxiomNoc(const Term& t, const Formula& a) {
  return Not(And(Formula::Holds(t, a), Formula::Holds(t, Not(a))));
}

Formula AxiomJTop(const Term& s) { return Formula::Holds(s, Verum()); }

namespace {

bool IsNot(const Formula& f) { return f.is_implies() && f.consequent().is_falsum(); }

// s:(A -> B) -> (t:A -> s.t:B)
bool MatchesJ(const Formula& f) {
  if (!f.is_implies()) return false;
  const Formula& major = f.antecedent();
  const Formula& rest = f.consequent();
  if (!major.is_holds() || !major.body().is_implies()) return false;
  if (!rest.is_implies()) return false;
  const Formula& minor = rest.antecedent();
  const Formula& concl = rest.consequent();
  if (!minor.is_holds() || !concl.is_holds()) return false;
  const Term& app = concl.term();
  if (app.kind() != Term::Kind::kApp) return false;
  return app.left() == major.term() && app.right() == minor.term() &&
         minor.body() == major.body().antecedent() &&
         concl.body() == major.body().consequent();
}

// (~s:A -> t:A) -> (s+t):A
bool MatchesJPlus(const Formula& f) {
  if (!f.is_implies()) return false;
  const Formula& disj = f.antecedent();
  const Formula& concl = f.consequent();
  if (!disj.is_implies() || !IsNot(disj.antecedent())) return false;
  const Formula& left = disj.antecedent().antecedent();
  const Formula& right = disj.consequent();
  if (!left.is_holds() || !right.is_holds() || !concl.is_holds()) return false;
  const Term& sum = concl.term();
  if (sum.kind() != Term::Kind::kSum) return false;
  return sum.left() == left.term() && sum.right() == right.term() &&
         left.body() == concl.body() && right.body() == concl.body();
}

// t:_|_ -> _|_
bool MatchesJd(const Formula& f) {
  return IsNot(f) && f.antecedent().is_holds() && f.antecedent().body().is_falsum();
}

// ((t:A -> (t:(A -> _|_) -> _|_)) -> _|_) -> _|_
bool MatchesNoc(const Formula& f) {
  if (!IsNot(f) || !IsNot(f.antecedent())) return false;
  const Formula& inner = f.antecedent().antecedent();
  if (!inner.is_implies() || !IsNot(inner.consequent())) return false;
  const Formula& first = inner.antecedent();
  const Formula& second = inner.consequent().antecedent();
  if (!first.is_holds() || !second.is_holds()) return false;
  if (first.term() != second.term()) return false;
  return IsNot(second.body()) && second.body().antecedent() == first.body();
}

// s:(_|_ -> _|_)
bool MatchesJTop(const Formula& f) {
  return f.is_holds() && IsNot(f.body()) && f.body().antecedent().is_falsum();
}

}  // namespace

std::optional<AxiomTag> MatchAxiom(const Formula& f, SystemId sys) {
  if (!HasSum(sys) && f.contains_sum()) return std::nullopt;
  struct Candidate {
    AxiomTag tag;
    bool (*matches)(const Formula&);
  };
  static constexpr Candidate kOrder[] = {
      {AxiomTag::kJ, MatchesJ},     {AxiomTag::kJPlus, MatchesJPlus},
      {AxiomTag::kJd, MatchesJd},   {AxiomTag::kNoc, MatchesNoc},
      {AxiomTag::kJTop, MatchesJTop}, {AxiomTag::kCl, IsTautology},
  };
  for (const Candidate& c : kOrder) {
    if (HasSchema(sys, c.tag) && c.matches(f)) return c.tag;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constant specifications

ConstantSpec ConstantSpec::Empty(SystemId sys) { return ConstantSpec(sys, false); }

ConstantSpec ConstantSpec::Total(SystemId sys) { return ConstantSpec(sys, true); }

ConstantSpec ConstantSpec::Finite(SystemId sys,
                                  std::span<const std::pair<Term, Formula>> pairs) {
  ConstantSpec cs(sys, false);
  for (const auto& [c, a] : pairs) {
    if (!c.is_constant()) {
      throw std::invalid_argument("constant specification pairs need a constant, got " +
                                  PrintTerm(c));
    }
    if (!MatchAxiom(a, sys)) {
      throw std::invalid_argument(PrintFormula(a) + " is not an axiom of " +
                                  std::string(SystemName(sys)));
    }
    cs.pairs_.emplace(c, a);
  }
  return cs;
}

bool ConstantSpec::Contains(const Term& c, const Formula& a) const {
  if (!c.is_constant()) return false;
  if (total_) return MatchAxiom(a, system_).has_value();
  return pairs_.contains({c, a});
}

std::optional<Term> ConstantSpec::ConstantFor(const Formula& a) const {
  if (total_) {
    if (MatchAxiom(a, system_)) return Term::Constant(0);
    return std::nullopt;
  }
  std::optional<Term> best;
  for (const auto& [c, axiom] : pairs_) {
    if (axiom == a && (!best || c.index() < best->index())) best = c;
  }
  return best;
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ConstantSpec ParseConstantSpec(std::string_view text, SystemId sys) {
  std::optional<bool> total;
  std::vector<std::pair<Term, Formula>> pairs;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    const std::size_t end = std::min(text.find('\n', offset), text.size());
    const std::string_view raw = text.substr(offset, end - offset);
    const std::size_t line_offset = offset;
    offset = end + 1;
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!total) {
      if (line.substr(0, 4) != "mode") {
        throw ParseError(where + "expected 'mode total' or 'mode finite'", line_offset);
      }
      const std::string_view mode = Trim(line.substr(4));
      if (mode == "total") {
        total = true;
      } else if (mode == "finite") {
        total = false;
      } else {
        throw ParseError(where + "unknown mode '" + std::string(mode) + "'", line_offset);
      }
      continue;
    }
    if (*total) throw ParseError(where + "a total specification lists no pairs", line_offset);
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(where + "expected 'c<i> : <formula>'", line_offset);
    }
    const ParseOptions options{.allow_sum = HasSum(sys)};
    try {
      Term c = ParseTerm(line.substr(0, colon), options);
      Formula a = ParseFormula(line.substr(colon + 1), options);
      pairs.emplace_back(std::move(c), std::move(a));
    } catch (const ParseError& e) {
      throw ParseError(where + e.what(), line_offset + e.position());
    }
  }
  if (!total) throw ParseError("missing 'mode' line", 0);
  if (*total) return ConstantSpec::Total(sys);
  return ConstantSpec::Finite(sys, pairs);
}

std::string FormatConstantSpec(const ConstantSpec& cs) {
  std::ostringstream out;
  if (cs.is_total()) {
    out << "mode total\n";
    return out.str();
  }
  out << "mode finite\n";
  for (const auto& [c, a] : cs.pairs()) {
    out << PrintTerm(c) << " : " << PrintFormula(a) << "\n";
  }
  return out.str();
}

}  // namespace jdl
