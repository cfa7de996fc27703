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

#include "jdl/syntax.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <vector>

namespace jdl {

namespace {

std::size_t Mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Term

struct Term::Rep {
  Kind kind;
  std::uint32_t index = 0;
  std::optional<Term> a;
  std::optional<Term> b;
  std::size_t hash = 0;
  std::size_t size = 1;
  bool has_sum = false;
};

Term Term::Constant(std::uint32_t index) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kConstant;
  rep->index = index;
  rep->hash = Mix(0x11, index);
  return Term(std::move(rep));
}

Term Term::Variable(std::uint32_t index) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kVariable;
  rep->index = index;
  rep->hash = Mix(0x22, index);
  return Term(std::move(rep));
}

Term Term::App(Term left, Term right) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kApp;
  rep->hash = Mix(Mix(0x33, left.hash()), right.hash());
  rep->size = 1 + left.size() + right.size();
  rep->has_sum = left.contains_sum() || right.contains_sum();
  rep->a = std::move(left);
  rep->b = std::move(right);
  return Term(std::move(rep));
}

Term Term::Sum(Term left, Term right) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kSum;
  rep->hash = Mix(Mix(0x44, left.hash()), right.hash());
  rep->size = 1 + left.size() + right.size();
  rep->has_sum = true;
  rep->a = std::move(left);
  rep->b = std::move(right);
  return Term(std::move(rep));
}

Term Term::Bang(Term inner) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kBang;
  rep->hash = Mix(0x55, inner.hash());
  rep->size = 1 + inner.size();
  rep->has_sum = inner.contains_sum();
  rep->a = std::move(inner);
  return Term(std::move(rep));
}

Term::Kind Term::kind() const { return rep_->kind; }
std::uint32_t Term::index() const { return rep_->index; }
const Term& Term::left() const { return *rep_->a; }
const Term& Term::right() const { return *rep_->b; }
const Term& Term::inner() const { return *rep_->a; }
std::size_t Term::hash() const { return rep_->hash; }
std::size_t Term::size() const { return rep_->size; }
bool Term::contains_sum() const { return rep_->has_sum; }

bool operator==(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::kConstant:
    case Term::Kind::kVariable:
      return a.index() <=> b.index();
    case Term::Kind::kBang:
      return a.inner() <=> b.inner();
    case Term::Kind::kApp:
    case Term::Kind::kSum:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Rep {
  Kind kind;
  std::uint32_t index = 0;
  std::optional<Formula> a;
  std::optional<Formula> b;
  std::optional<Term> term;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 1;
  bool has_sum = false;
};

Formula Formula::Atom(std::uint32_t index) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kAtom;
  rep->index = index;
  rep->hash = Mix(0x66, index);
  return Formula(std::move(rep));
}

Formula Formula::Falsum() {
  static const Formula falsum = [] {
    auto rep = std::make_shared<Rep>();
    rep->kind = Kind::kFalsum;
    rep->hash = 0x77;
    return Formula(std::move(rep));
  }();
  return falsum;
}

Formula Formula::Implies(Formula antecedent, Formula consequent) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kImplies;
  rep->hash = Mix(Mix(0x88, antecedent.hash()), consequent.hash());
  rep->size = 1 + antecedent.size() + consequent.size();
  rep->depth = 1 + std::max(antecedent.depth(), consequent.depth());
  rep->has_sum = antecedent.contains_sum() || consequent.contains_sum();
  rep->a = std::move(antecedent);
  rep->b = std::move(consequent);
  return Formula(std::move(rep));
}

Formula Formula::Holds(Term term, Formula body) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::kHolds;
  rep->hash = Mix(Mix(0x99, term.hash()), body.hash());
  rep->size = 1 + term.size() + body.size();
  rep->depth = 1 + body.depth();
  rep->has_sum = term.contains_sum() || body.contains_sum();
  rep->a = std::move(body);
  rep->term = std::move(term);
  return Formula(std::move(rep));
}

Formula::Kind Formula::kind() const { return rep_->kind; }
std::uint32_t Formula::atom_index() const { return rep_->index; }
const Formula& Formula::antecedent() const { return *rep_->a; }
const Formula& Formula::consequent() const { return *rep_->b; }
const Term& Formula::term() const { return *rep_->term; }
const Formula& Formula::body() const { return *rep_->a; }
std::size_t Formula::hash() const { return rep_->hash; }
std::size_t Formula::size() const { return rep_->size; }
std::size_t Formula::depth() const { return rep_->depth; }
bool Formula::contains_sum() const { return rep_->has_sum; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::kAtom:
      return a.atom_index() <=> b.atom_index();
    case Formula::Kind::kFalsum:
      return std::strong_ordering::equal;
    case Formula::Kind::kImplies:
      if (auto c = a.antecedent() <=> b.antecedent(); c != 0) return c;
      return a.consequent() <=> b.consequent();
    case Formula::Kind::kHolds:
      if (auto c = a.term() <=> b.term(); c != 0) return c;
      return a.body() <=> b.body();
  }
  return std::strong_ordering::equal;
}

Formula Not(Formula a) { return Formula::Implies(std::move(a), Formula::Falsum()); }
Formula Verum() { return Not(Formula::Falsum()); }
Formula And(Formula a, Formula b) {
  return Not(Formula::Implies(std::move(a), Not(std::move(b))));
}
Formula Or(Formula a, Formula b) {
  return Formula::Implies(Not(std::move(a)), std::move(b));
}
Formula Iff(Formula a, Formula b) {
  return And(Formula::Implies(a, b), Formula::Implies(b, a));
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("at " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

enum class Tok {
  kLParen, kRParen, kDot, kPlus, kBang, kColon, kTilde, kAmp, kBar,
  kArrow, kIff, kFalsum, kVerum, kAtom, kConst, kVar, kEnd
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::uint32_t index = 0;
};

std::vector<Token> Lex(std::string_view text, const ParseOptions& options) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto number = [&](std::size_t start) {
    std::size_t j = start;
    std::uint64_t value = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      value = value * 10 + static_cast<unsigned>(text[j] - '0');
      if (value > UINT32_MAX) throw ParseError("index out of range", start);
      ++j;
    }
    if (j == start) throw ParseError("expected an index", start);
    i = j;
    return static_cast<std::uint32_t>(value);
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    switch (ch) {
      case '(': out.push_back({Tok::kLParen, pos}); ++i; continue;
      case ')': out.push_back({Tok::kRParen, pos}); ++i; continue;
      case '.': out.push_back({Tok::kDot, pos}); ++i; continue;
      case '!': out.push_back({Tok::kBang, pos}); ++i; continue;
      case ':': out.push_back({Tok::kColon, pos}); ++i; continue;
      case '~': out.push_back({Tok::kTilde, pos}); ++i; continue;
      case '&': out.push_back({Tok::kAmp, pos}); ++i; continue;
      case '+':
        if (!options.allow_sum) {
          throw ParseError("'+' is not part of the plus-free language", pos);
        }
        out.push_back({Tok::kPlus, pos});
        ++i;
        continue;
      default:
        break;
    }
    if (text.substr(i, 3) == "_|_") {
      out.push_back({Tok::kFalsum, pos});
      i += 3;
    } else if (text.substr(i, 3) == "<->") {
      out.push_back({Tok::kIff, pos});
      i += 3;
    } else if (text.substr(i, 2) == "->") {
      out.push_back({Tok::kArrow, pos});
      i += 2;
    } else if (ch == '|') {
      out.push_back({Tok::kBar, pos});
      ++i;
    } else if (ch == 'T' && (i + 1 == text.size() ||
                             !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      out.push_back({Tok::kVerum, pos});
      ++i;
    } else if (ch == 'P' || ch == 'c' || ch == 'x') {
      const Tok kind = ch == 'P' ? Tok::kAtom : ch == 'c' ? Tok::kConst : Tok::kVar;
      const std::uint32_t index = number(i + 1);
      out.push_back({kind, pos, index});
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", pos);
    }
  }
  out.push_back({Tok::kEnd, text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Term WholeTerm() {
    Term t = ParseSum();
    Expect(Tok::kEnd, "end of input");
    return t;
  }

  Formula WholeFormula() {
    Formula f = ParseIff();
    Expect(Tok::kEnd, "end of input");
    return f;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  void Expect(Tok kind, const char* what) {
    if (!Accept(kind)) throw ParseError(std::string("expected ") + what, Peek().pos);
  }

  Term ParseSum() {
    Term t = ParseApp();
    while (Accept(Tok::kPlus)) t = Term::Sum(std::move(t), ParseApp());
    return t;
  }

  Term ParseApp() {
    Term t = ParseBase();
    while (Accept(Tok::kDot)) t = Term::App(std::move(t), ParseBase());
    return t;
  }

  Term ParseBase() {
    const Token tok = Peek();
    switch (tok.kind) {
      case Tok::kBang:
        ++pos_;
        return Term::Bang(ParseBase());
      case Tok::kConst:
        ++pos_;
        return Term::Constant(tok.index);
      case Tok::kVar:
        ++pos_;
        return Term::Variable(tok.index);
      case Tok::kLParen: {
        ++pos_;
        Term t = ParseSum();
        Expect(Tok::kRParen, "')'");
        return t;
      }
      default:
        throw ParseError("expected a term", tok.pos);
    }
  }

  Formula ParseIff() {
    Formula f = ParseImp();
    if (Accept(Tok::kIff)) return Iff(std::move(f), ParseImp());
    return f;
  }

  Formula ParseImp() {
    Formula f = ParseJunct();
    if (Accept(Tok::kArrow)) return Formula::Implies(std::move(f), ParseImp());
    return f;
  }

  Formula ParseJunct() {
    Formula f = ParseUnary();
    for (;;) {
      if (Accept(Tok::kAmp)) {
        f = And(std::move(f), ParseUnary());
      } else if (Accept(Tok::kBar)) {
        f = Or(std::move(f), ParseUnary());
      } else {
        return f;
      }
    }
  }

  Formula ParseUnary() {
    const Token tok = Peek();
    switch (tok.kind) {
      case Tok::kTilde:
        ++pos_;
        return Not(ParseUnary());
      case Tok::kFalsum:
        ++pos_;
        return Formula::Falsum();
      case Tok::kVerum:
        ++pos_;
        return Verum();
      case Tok::kAtom:
        ++pos_;
        return Formula::Atom(tok.index);
      case Tok::kBang:
      case Tok::kConst:
      case Tok::kVar:
        return ParseHolds();
      case Tok::kLParen: {
        // Either a parenthesised term in front of ':' or a parenthesised
        // formula.
        const std::size_t saved = pos_;
        try {
          Term t = ParseSum();
          if (Peek().kind == Tok::kColon) {
            ++pos_;
            return Formula::Holds(std::move(t), ParseUnary());
          }
        } catch (const ParseError&) {
        }
        pos_ = saved;
        ++pos_;
        Formula f = ParseIff();
        Expect(Tok::kRParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", tok.pos);
    }
  }

  Formula ParseHolds() {
    Term t = ParseSum();
    Expect(Tok::kColon, "':' after justification term");
    return Formula::Holds(std::move(t), ParseUnary());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Term ParseTerm(std::string_view text, ParseOptions options) {
  return Parser(Lex(text, options)).WholeTerm();
}

Formula ParseFormula(std::string_view text, ParseOptions options) {
  return Parser(Lex(text, options)).WholeFormula();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Term precedence levels: 0 sum, 1 application, 2 base.
void PrintTermAt(const Term& t, int level, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::kConstant:
      out += 'c';
      out += std::to_string(t.index());
      return;
    case Term::Kind::kVariable:
      out += 'x';
      out += std::to_string(t.index());
      return;
    case Term::Kind::kBang:
      out += '!';
      PrintTermAt(t.inner(), 2, out);
      return;
    case Term::Kind::kApp:
      if (level > 1) out += '(';
      PrintTermAt(t.left(), 1, out);
      out += '.';
      PrintTermAt(t.right(), 2, out);
      if (level > 1) out += ')';
      return;
    case Term::Kind::kSum:
      if (level > 0) out += '(';
      PrintTermAt(t.left(), 0, out);
      out += '+';
      PrintTermAt(t.right(), 1, out);
      if (level > 0) out += ')';
      return;
  }
}

bool IsNegation(const Formula& f) {
  return f.is_implies() && f.consequent().is_falsum();
}

// Matches ~(a -> ~b), the expansion of a & b.
bool IsConjunction(const Formula& f) {
  return IsNegation(f) && f.antecedent().is_implies() &&
         IsNegation(f.antecedent().consequent());
}

// Formula precedence levels: 0 implication, 1 conjunction, 2 unary.
void PrintFormulaAt(const Formula& f, int level, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out += 'P';
      out += std::to_string(f.atom_index());
      return;
    case Formula::Kind::kFalsum:
      out += "_|_";
      return;
    case Formula::Kind::kHolds:
      PrintTermAt(f.term(), 0, out);
      out += ':';
      PrintFormulaAt(f.body(), 2, out);
      return;
    case Formula::Kind::kImplies:
      break;
  }
  if (f.antecedent().is_falsum() && f.consequent().is_falsum()) {
    out += 'T';
    return;
  }
  if (IsConjunction(f)) {
    if (level > 1) out += '(';
    PrintFormulaAt(f.antecedent().antecedent(), 1, out);
    out += " & ";
    PrintFormulaAt(f.antecedent().consequent().antecedent(), 2, out);
    if (level > 1) out += ')';
    return;
  }
  if (IsNegation(f)) {
    out += '~';
    PrintFormulaAt(f.antecedent(), 2, out);
    return;
  }
  if (level > 0) out += '(';
  PrintFormulaAt(f.antecedent(), 1, out);
  out += " -> ";
  PrintFormulaAt(f.consequent(), 0, out);
  if (level > 0) out += ')';
}

}  // namespace

std::string PrintTerm(const Term& t) {
  std::string out;
  PrintTermAt(t, 0, out);
  return out;
}

std::string PrintFormula(const Formula& f) {
  std::string out;
  PrintFormulaAt(f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Closures

FormulaSet SubformulaClosure(const FormulaSet& seed) {
  FormulaSet out;
  std::vector<Formula> stack(seed.begin(), seed.end());
  while (!stack.empty()) {
    Formula f = std::move(stack.back());
    stack.pop_back();
    if (!out.insert(f).second) continue;
    if (f.is_implies()) {
      stack.push_back(f.antecedent());
      stack.push_back(f.consequent());
    } else if (f.is_holds()) {
      stack.push_back(f.body());
    }
  }
  return out;
}

TermSet SubtermClosure(const TermSet& seed) {
  TermSet out;
  std::vector<Term> stack(seed.begin(), seed.end());
  while (!stack.empty()) {
    Term t = std::move(stack.back());
    stack.pop_back();
    if (!out.insert(t).second) continue;
    switch (t.kind()) {
      case Term::Kind::kApp:
      case Term::Kind::kSum:
        stack.push_back(t.left());
        stack.push_back(t.right());
        break;
      case Term::Kind::kBang:
        stack.push_back(t.inner());
        break;
      default:
        break;
    }
  }
  return out;
}

TermSet TermsOf(const FormulaSet& formulas) {
  TermSet seed;
  for (const Formula& f : SubformulaClosure(formulas)) {
    if (f.is_holds()) seed.insert(f.term());
  }
  return SubtermClosure(seed);
}

}  // namespace jdl
