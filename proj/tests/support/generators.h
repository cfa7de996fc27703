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

#ifndef JDL_TESTS_SUPPORT_GENERATORS_H_
#define JDL_TESTS_SUPPORT_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "jdl/axioms.h"
#include "jdl/derive.h"
#include "jdl/model.h"
#include "jdl/proof.h"
#include "jdl/syntax.h"

namespace jdl::testing {

// Hand-rolled random generators. Every generator is a pure function of the
// engine state, so a fixed seed reproduces a failure.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::size_t Below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool Coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Term RandomTerm(int depth, bool allow_sum = true, std::size_t index_range = 3) {
    if (depth <= 0 || Coin(0.3)) {
      return Coin() ? Term::Constant(Below(index_range)) : Term::Variable(Below(index_range));
    }
    switch (Below(allow_sum ? 3 : 2)) {
      case 0: return Term::App(RandomTerm(depth - 1, allow_sum, index_range),
                               RandomTerm(depth - 1, allow_sum, index_range));
      case 1: return Term::Bang(RandomTerm(depth - 1, allow_sum, index_range));
      default: return Term::Sum(RandomTerm(depth - 1, allow_sum, index_range),
                                RandomTerm(depth - 1, allow_sum, index_range));
    }
  }

  Formula RandomFormula(int depth, bool allow_sum = true, std::size_t atoms = 3,
                        int term_depth = 2) {
    if (depth <= 0 || Coin(0.25)) {
      return Coin(0.8) ? Formula::Atom(Below(atoms)) : Formula::Falsum();
    }
    if (Coin(0.6)) {
      return Formula::Implies(RandomFormula(depth - 1, allow_sum, atoms, term_depth),
                              RandomFormula(depth - 1, allow_sum, atoms, term_depth));
    }
    return Formula::Holds(RandomTerm(term_depth, allow_sum),
                          RandomFormula(depth - 1, allow_sum, atoms, term_depth));
  }

  // A random instance of `tag`.
  Formula RandomInstance(AxiomTag tag, bool allow_sum, int depth = 2) {
    const Term s = RandomTerm(1, allow_sum);
    const Term t = RandomTerm(1, allow_sum);
    const Formula a = RandomFormula(depth, allow_sum);
    const Formula b = RandomFormula(depth, allow_sum);
    switch (tag) {
      case AxiomTag::kJ: return AxiomJ(s, t, a, b);
      case AxiomTag::kJPlus: return AxiomJPlus(s, t, a);
      case AxiomTag::kJd: return AxiomJd(t);
      case AxiomTag::kNoc: return AxiomNoc(t, a);
      case AxiomTag::kJTop: return AxiomJTop(s);
      case AxiomTag::kCl: break;
    }
    // A few tautology shapes over random parts.
    switch (Below(4)) {
      case 0: return Formula::Implies(a, Formula::Implies(b, a));
      case 1: return Formula::Implies(Formula::Falsum(), a);
      case 2: return Formula::Implies(Not(Not(a)), a);
      default:
        return Formula::Implies(Formula::Implies(a, b),
                                Formula::Implies(Not(b), Not(a)));
    }
  }

  // A random accepted proof under the total specification of `sys`: axiom
  // instances, necessitations and modus ponens steps over earlier steps.
  Proof RandomProof(SystemId sys, std::size_t target_steps) {
    const bool allow_sum = HasSum(sys);
    std::vector<AxiomTag> tags;
    for (AxiomTag tag : {AxiomTag::kCl, AxiomTag::kJPlus, AxiomTag::kJ, AxiomTag::kJd,
                         AxiomTag::kNoc, AxiomTag::kJTop}) {
      if (HasSchema(sys, tag)) tags.push_back(tag);
    }
    Proof p{sys, ConstantSpec::Total(sys), {}};
    auto add_axiom = [&] {
      const AxiomTag tag = tags[Below(tags.size())];
      p.steps.push_back({RandomInstance(tag, allow_sum), ByAxiom{tag}});
    };
    while (p.steps.size() < target_steps) {
      const std::size_t roll = Below(10);
      if (roll < 3 || p.steps.empty()) {
        add_axiom();
      } else if (roll < 5) {
        const AxiomTag tag = tags[Below(tags.size())];
        const Formula a = RandomInstance(tag, allow_sum);
        const Term c = Term::Constant(Below(3));
        const std::uint32_t level = static_cast<std::uint32_t>(Below(3));
        p.steps.push_back({AnConclusion(c, a, level), ByAN{c, a, level}});
      } else {
        // MP: A -> (B -> A) against an earlier A, giving B -> A.
        const std::size_t minor = Below(p.steps.size()) + 1;
        const Formula a = p.steps[minor - 1].formula;
        const Formula b = RandomFormula(1, allow_sum);
        const Formula k = Formula::Implies(a, Formula::Implies(b, a));
        p.steps.push_back({k, ByAxiom{AxiomTag::kCl}});
        const std::size_t major = p.steps.size();
        p.steps.push_back({Formula::Implies(b, a), ByMP{major, minor}});
        // Sometimes discharge the new antecedent when an earlier step proves it.
        for (std::size_t k2 = 1; k2 < p.steps.size(); ++k2) {
          if (p.steps[k2 - 1].formula == b) {
            p.steps.push_back({a, ByMP{p.steps.size(), k2}});
            break;
          }
        }
      }
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jdl::testing

#endif  // JDL_TESTS_SUPPORT_GENERATORS_H_
