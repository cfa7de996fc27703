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

#ifndef JDL_MODEL_H_
#define JDL_MODEL_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jdl/axioms.h"
#include "jdl/syntax.h"

namespace jdl {

using World = std::uint32_t;

inline constexpr std::size_t kMaxWorlds = 64;

// A set of worlds of one model, as a bitmask.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr WorldSet Of(std::initializer_list<World> worlds) {
    std::uint64_t bits = 0;
    for (World w : worlds) bits |= std::uint64_t{1} << w;
    return WorldSet(bits);
  }
  // {0, ..., n-1}
  static constexpr WorldSet FirstN(std::size_t n) {
    return WorldSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(World w) const { return (bits_ >> w) & 1U; }
  constexpr bool SubsetOf(WorldSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool Intersects(WorldSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr void insert(World w) { bits_ |= std::uint64_t{1} << w; }

  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  // Relative complement.
  constexpr WorldSet operator-(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
  constexpr WorldSet& operator&=(WorldSet o) { bits_ &= o.bits_; return *this; }
  constexpr WorldSet& operator|=(WorldSet o) { bits_ |= o.bits_; return *this; }

  std::vector<World> members() const;

  friend constexpr bool operator==(WorldSet, WorldSet) = default;
  friend constexpr auto operator<=>(WorldSet, WorldSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// The finite formula universe (closed under subformulas) and term universe
// (closed under subterms, containing every term of the formula universe),
// with dense indices. Formulas are ordered by depth, so subformulas come
// before the formulas that contain them.
class Universe {
 public:
  struct FormulaNode {
    Formula::Kind kind;
    std::size_t left = 0;   // antecedent or body
    std::size_t right = 0;  // consequent
    std::size_t term = 0;   // for t:F
  };
  struct TermNode {
    Term::Kind kind;
    std::size_t left = 0;
    std::size_t right = 0;
  };

  // Closes both seeds. Terms of the formulas are added to the term universe.
  Universe(const FormulaSet& phi, const TermSet& terms);

  const std::vector<Formula>& formulas() const { return formulas_; }
  const std::vector<Term>& terms() const { return terms_; }
  const FormulaSet& phi() const { return phi_; }
  const TermSet& term_set() const { return term_set_; }
  const FormulaNode& formula_node(std::size_t i) const { return formula_nodes_[i]; }
  const TermNode& term_node(std::size_t i) const { return term_nodes_[i]; }

  std::optional<std::size_t> FormulaIndex(const Formula& f) const;
  std::optional<std::size_t> TermIndex(const Term& t) const;

  std::optional<std::size_t> falsum() const { return falsum_; }
  // Indices of atomic formulas.
  const std::vector<std::size_t>& atoms() const { return atoms_; }
  // Indices of implications.
  const std::vector<std::size_t>& implications() const { return implications_; }
  // Pairs (A, A -> _|_) with both members in the universe.
  const std::vector<std::pair<std::size_t, std::size_t>>& negation_pairs() const {
    return negation_pairs_;
  }

 private:
  FormulaSet phi_;
  TermSet term_set_;
  std::vector<Formula> formulas_;
  std::vector<Term> terms_;
  std::vector<FormulaNode> formula_nodes_;
  std::vector<TermNode> term_nodes_;
  std::unordered_map<Formula, std::size_t, FormulaHash> formula_index_;
  std::unordered_map<Term, std::size_t, TermHash> term_index_;
  std::optional<std::size_t> falsum_;
  std::vector<std::size_t> atoms_;
  std::vector<std::size_t> implications_;
  std::vector<std::pair<std::size_t, std::size_t>> negation_pairs_;
};

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FormulaOutsideUniverse : public std::out_of_range {
 public:
  explicit FormulaOutsideUniverse(const Formula& f);
};

// Human-editable description of a model, keyed by world index.
struct ModelData {
  std::vector<std::string> world_names;
  WorldSet normal;
  FormulaSet phi;
  TermSet terms;
  // Valuation entries at non-normal worlds.
  std::map<std::pair<World, Formula>, bool> val;
  // Non-normal worlds whose default bit is 1.
  WorldSet default_true;
  // Atom values at normal worlds (absent means 0).
  std::map<std::pair<World, Formula>, bool> atoms;
  // Absent entries are the empty set.
  std::map<std::pair<World, Term>, WorldSet> evidence;
};

// A finite subset model (W, W0, V, E) relativised to a Universe. Non-normal
// worlds carry a valuation table; normal worlds evaluate classically and
// t:F holds at a normal world w iff E(w, t) is inside the truth set of F.
// Truth sets are computed once at construction.
class SubsetModel {
 public:
  // Throws ModelError when the data violates a structural invariant: no
  // normal world, unknown worlds, entries outside the universe, valuation
  // entries at normal worlds or atom entries at non-normal ones.
  explicit SubsetModel(const ModelData& data);

  // Dense form used by enumeration. `given[i]` holds, for the i-th formula
  // of the universe, the non-normal worlds where the table says 1 and the
  // normal worlds where an atom is true. `evidence[w * |T| + t]`.
  SubsetModel(std::shared_ptr<const Universe> universe,
              std::shared_ptr<const std::vector<std::string>> world_names, WorldSet normal,
              std::vector<WorldSet> given, WorldSet default_true,
              std::vector<WorldSet> evidence);

  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& shared_universe() const { return universe_; }
  std::size_t world_count() const { return world_names_->size(); }
  const std::vector<std::string>& world_names() const { return *world_names_; }
  std::optional<World> WorldByName(std::string_view name) const;
  WorldSet worlds() const { return WorldSet::FirstN(world_count()); }
  WorldSet normal() const { return normal_; }
  WorldSet default_true() const { return default_true_; }

  bool Eval(World w, const Formula& f) const;
  WorldSet TruthSet(const Formula& f) const;
  bool HoldsAtAllNormal(const Formula& f) const;
  // Throws std::out_of_range for terms outside the universe.
  WorldSet Evidence(World w, const Term& t) const;
  // APP_w(s, t) relativised to the universe: consequents F of implications
  // H -> F in the universe with E(w,s) inside [H -> F] and E(w,t) inside [H].
  FormulaSet AppSet(World w, const Term& s, const Term& t) const;

  // Worlds where _|_ is false.
  WorldSet ConsistentWorlds() const;
  // Worlds where no pair A, A -> _|_ of the universe is true together.
  WorldSet ConflictFreeWorlds() const;

  // Index-based access for the auditor and the enumerator.
  WorldSet truth_at(std::size_t formula) const { return truth_[formula]; }
  WorldSet evidence_at(World w, std::size_t term) const {
    return evidence_[w * universe_->terms().size() + term];
  }
  WorldSet given_at(std::size_t formula) const { return given_[formula]; }

  ModelData ToData() const;

 private:
  void Validate() const;
  void ComputeTruth();
  std::size_t IndexOrThrow(const Formula& f) const;

  std::shared_ptr<const Universe> universe_;
  std::shared_ptr<const std::vector<std::string>> world_names_;
  WorldSet normal_;
  std::vector<WorldSet> given_;
  WorldSet default_true_;
  std::vector<WorldSet> evidence_;
  std::vector<WorldSet> truth_;
};

enum class ModelClass { kGeneral, kDArbitrary, kNoC };

// "general", "d" (also read as "darbitrary"), "noc"
std::string_view ModelClassName(ModelClass cls);
std::optional<ModelClass> ParseModelClassName(std::string_view name);

enum class Condition { kSum, kApplication, kSerial, kConstantSpec, kLanguage };

// "sum", "application", "serial", "cs", "language"
std::string_view ConditionName(Condition c);

struct Violation {
  Condition condition;
  World world;
  std::vector<Term> terms;
  std::vector<Formula> formulas;
};

struct WellFormedReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Audits the conditions on E at every normal world:
//   sum          E(w, s+t) inside E(w, s) & E(w, t)
//   application  E(w, s.t) inside [F] for every F in AppSet(w, s, t)
//   serial       E(w, t) meets W0 (general), the _|_-free worlds (d), or
//                the conflict-free worlds (noc)
//   cs           E(w, c) inside [A] for (c, A) in the specification, and
//                E(w, !^n c) inside [!^(n-1)c : ... : c:A]
//   language     no '+' terms when the system lacks '+'
// Only terms of the term universe and formulas of the formula universe
// take part. The auditor precomputes everything that depends only on the
// universe, so one instance can audit many models over it.
class Auditor {
 public:
  // Throws std::invalid_argument if cs belongs to another system.
  Auditor(std::shared_ptr<const Universe> universe, ModelClass cls, ConstantSpec cs,
          SystemId sys);

  WellFormedReport Audit(const SubsetModel& m) const;
  bool Passes(const SubsetModel& m) const;

 private:
  template <typename Sink>
  void Run(const SubsetModel& m, Sink&& sink) const;

  std::shared_ptr<const Universe> universe_;
  ModelClass cls_;
  ConstantSpec cs_;
  SystemId sys_;
  struct Binary {
    std::size_t whole, left, right;
  };
  std::vector<Binary> sums_;
  std::vector<Binary> apps_;
  // E(w, term) must lie inside [formula].
  std::vector<std::pair<std::size_t, std::size_t>> cs_obligations_;
  std::vector<std::size_t> sum_terms_outside_language_;
};

WellFormedReport CheckWellFormed(const SubsetModel& m, ModelClass cls, const ConstantSpec& cs,
                                 SystemId sys);

// {F | t:F in gamma}
FormulaSet Project(const FormulaSet& gamma, const Term& t);

// Two worlds omega (normal) and nu; nu makes exactly _|_ true (default 0)
// and E(omega, t) = {nu} for every term of the universe. The universe is
// the closure of {t:_|_, ~(t:P1 & t:~P1)} plus the extras.
SubsetModel BuildJdCountermodel(const Term& t = Term::Variable(1),
                              const FormulaSet& extra_formulas = {},
                              const TermSet& extra_terms = {});

// Model file, one directive per line ('#' comments and blank lines are
// ignored):
//   worlds <name> ...
//   normal <name> ...
//   phi                      followed by one formula per line
//   terms                    followed by one term per line
//   default <world> <0|1>
//   val <world> <formula> <0|1>
//   atoms <world> <atom> <0|1>
//   E <world> <term> {<world>,...}
// The formula and term lists are closed on load.
ModelData ParseModelFile(std::string_view text);
std::string FormatModel(const SubsetModel& m);

}  // namespace jdl

#endif  // JDL_MODEL_H_
