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

#ifndef JDL_SYNTAX_H_
#define JDL_SYNTAX_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jdl {

// Justification terms: constants c<i>, variables x<i>, application s.t,
// sum s+t and proof checker !t. Terms are immutable values that share
// structure; equality and ordering are structural.
class Term {
 public:
  enum class Kind : std::uint8_t { kConstant, kVariable, kApp, kSum, kBang };

  static Term Constant(std::uint32_t index);
  static Term Variable(std::uint32_t index);
  static Term App(Term left, Term right);
  static Term Sum(Term left, Term right);
  static Term Bang(Term inner);

  Kind kind() const;
  bool is_constant() const { return kind() == Kind::kConstant; }
  bool is_variable() const { return kind() == Kind::kVariable; }

  // Only meaningful for constants and variables.
  std::uint32_t index() const;
  // left()/right() for App and Sum; inner() for Bang.
  const Term& left() const;
  const Term& right() const;
  const Term& inner() const;

  std::size_t hash() const;
  std::size_t size() const;
  bool contains_sum() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Rep;
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Formulas over the primitive basis {->, _|_}. Negation, verum, conjunction,
// disjunction and equivalence are abbreviations; see the helpers below.
class Formula {
 public:
  enum class Kind : std::uint8_t { kAtom, kFalsum, kImplies, kHolds };

  static Formula Atom(std::uint32_t index);
  static Formula Falsum();
  static Formula Implies(Formula antecedent, Formula consequent);
  static Formula Holds(Term term, Formula body);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_falsum() const { return kind() == Kind::kFalsum; }
  bool is_implies() const { return kind() == Kind::kImplies; }
  bool is_holds() const { return kind() == Kind::kHolds; }

  std::uint32_t atom_index() const;
  const Formula& antecedent() const;
  const Formula& consequent() const;
  const Term& term() const;
  const Formula& body() const;

  std::size_t hash() const;
  // Number of nodes, counting each term occurrence as one node.
  std::size_t size() const;
  std::size_t depth() const;
  bool contains_sum() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Rep;
  explicit Formula(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

using TermSet = std::set<Term>;
using FormulaSet = std::set<Formula>;

// Abbreviations. Not(A) = A -> _|_, Verum = ~_|_, And(A,B) = ~(A -> ~B),
// Or(A,B) = ~A -> B, Iff(A,B) = (A -> B) & (B -> A).
Formula Not(Formula a);
Formula Verum();
Formula And(Formula a, Formula b);
Formula Or(Formula a, Formula b);
Formula Iff(Formula a, Formula b);

// Thrown on malformed input. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  // When false, the '+' operation is rejected (the plus-free language).
  bool allow_sum = true;
};

Term ParseTerm(std::string_view text, ParseOptions options = {});
Formula ParseFormula(std::string_view text, ParseOptions options = {});

// Printing re-sugars ~, & and T so that output stays readable. The output
// always parses back to a structurally equal value.
std::string PrintTerm(const Term& t);
std::string PrintFormula(const Formula& f);

// Smallest superset of `seed` closed under immediate subformulas.
FormulaSet SubformulaClosure(const FormulaSet& seed);
// Smallest superset of `seed` closed under immediate subterms.
TermSet SubtermClosure(const TermSet& seed);
// Terms t occurring as t:F anywhere inside `formulas`, closed under subterms.
TermSet TermsOf(const FormulaSet& formulas);

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

}  // namespace jdl

#endif  // JDL_SYNTAX_H_
