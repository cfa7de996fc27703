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

#ifndef JDL_AXIOMS_H_
#define JDL_AXIOMS_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jdl/syntax.h"

namespace jdl {

enum class SystemId { kJD, kJNoC, kJNoCMinus, kJNoCPlus };

enum class AxiomTag { kCl, kJPlus, kJ, kJd, kNoc, kJTop };

// Canonical spellings: "jd", "jnoc", "jnoc-minus", "jnoc-plus".
std::string_view SystemName(SystemId sys);
std::optional<SystemId> ParseSystemName(std::string_view name);

// Canonical spellings: "cl", "j+", "j", "jd", "noc", "jtop".
std::string_view AxiomTagName(AxiomTag tag);
std::optional<AxiomTag> ParseAxiomTagName(std::string_view name);

// Schemas of each system:
//   JD   cl j+ j jd       JNoC-   cl j noc
//   JNoC cl j+ j noc      JNoC+   cl j+ j noc jtop
bool HasSchema(SystemId sys, AxiomTag tag);
// JNoC- is formulated in the language without '+'.
bool HasSum(SystemId sys);

// The formula's modal atoms are its maximal subformulas that are atoms or
// of the form t:F. True iff `f` is true under every assignment to them,
// with _|_ false and -> classical.
bool IsTautology(const Formula& f);

// Distinct modal atoms of `f`, in first-occurrence order.
std::vector<Formula> ModalAtoms(const Formula& f);

// Matches `f` against the schemas of `sys` in the order j, j+, jd, noc,
// jtop, cl and returns the first hit. In JNoC- formulas containing '+' are
// outside the language and never match.
std::optional<AxiomTag> MatchAxiom(const Formula& f, SystemId sys);

// Schema instances.
Formula AxiomJ(const Term& s, const Term& t, const Formula& a, const Formula& b);
Formula AxiomJPlus(const Term& s, const Term& t, const Formula& a);
Formula AxiomJd(const Term& t);
Formula AxiomNoc(const Term& t, const Formula& a);
Formula AxiomJTop(const Term& s);

// A set of (constant, axiom) pairs tied to one system. Finite
// specifications hold explicit pairs; the total specification pairs every
// constant with every axiom of the system.
class ConstantSpec {
 public:
  static ConstantSpec Empty(SystemId sys);
  static ConstantSpec Total(SystemId sys);
  // Throws std::invalid_argument if a pair's first component is not a
  // constant or its formula is not an axiom of `sys`.
  static ConstantSpec Finite(SystemId sys,
                             std::span<const std::pair<Term, Formula>> pairs);

  SystemId system() const { return system_; }
  bool is_total() const { return total_; }
  const std::set<std::pair<Term, Formula>>& pairs() const { return pairs_; }

  bool Contains(const Term& c, const Formula& a) const;
  // Least-index constant justifying `a`, if any.
  std::optional<Term> ConstantFor(const Formula& a) const;
  // Only the total specification covers the infinitely many axioms.
  bool IsAxiomaticallyAppropriate() const { return total_; }

  friend bool operator==(const ConstantSpec&, const ConstantSpec&) = default;

 private:
  ConstantSpec(SystemId sys, bool total) : system_(sys), total_(total) {}

  SystemId system_;
  bool total_;
  std::set<std::pair<Term, Formula>> pairs_;
};

// Constant specification file:
//   mode total|finite
//   c<i> : <formula>        (finite mode, one pair per line)
// Blank lines and lines starting with '#' are ignored. Throws ParseError
// with the line number in the message on malformed input, and
// std::invalid_argument for pairs that are not axioms of `sys`.
ConstantSpec ParseConstantSpec(std::string_view text, SystemId sys);
std::string FormatConstantSpec(const ConstantSpec& cs);

}  // namespace jdl

#endif  // JDL_AXIOMS_H_
