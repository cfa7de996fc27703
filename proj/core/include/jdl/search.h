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

#ifndef JDL_SEARCH_H_
#define JDL_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "jdl/axioms.h"
#include "jdl/model.h"
#include "jdl/syntax.h"

namespace jdl {

// Bounded model space. `phi` and `terms` are closed (and terms(phi) added)
// before use, exactly as Universe does.
//
// Order of enumeration:
//   1. world count n = 1 .. max_worlds (worlds are named w0, w1, ...);
//   2. normal-world mask over {0..n-1}, non-empty, at most max_normal
//      members, in increasing numeric order;
//   3. a mixed-radix counter whose least significant digits are
//        - the valuation bits of each non-normal world (world-major, then
//          formulas in universe order),
//        - the atom bits of each normal world,
//        - the evidence set of each (normal world, term) pair, drawn from
//          the candidates in order. The default candidates are all subsets
//          of the worlds in increasing mask order; `evidence_candidates`
//          replaces them (sets not inside the model's worlds are dropped).
// Non-normal worlds have default bit 0 and empty evidence: neither affects
// truth at normal worlds nor the audit.
struct SearchBounds {
  std::size_t max_worlds = 2;
  std::size_t max_normal = 2;
  FormulaSet phi;
  TermSet terms;
  std::optional<std::vector<WorldSet>> evidence_candidates;
  // Worker threads; the result does not depend on this.
  unsigned threads = 1;
};

struct SearchResult {
  std::optional<SubsetModel> model;
  // Position of `model` in the enumeration order.
  std::uint64_t ordinal = 0;
  // Number of models in the bounded space.
  std::uint64_t space = 0;

  explicit operator bool() const { return model.has_value(); }
};

// Throws std::invalid_argument when the bounds are malformed or the space
// does not fit in 64 bits.
std::uint64_t CountModels(const SearchBounds& b);

// Calls `visit` for every model in order until it returns false.
void EnumerateModels(const SearchBounds& b,
                     const std::function<bool(const SubsetModel&)>& visit);

// Least model satisfying `accept`. `accept` must be safe to call from
// several threads when b.threads > 1.
SearchResult FindFirst(const SearchBounds& b,
                       const std::function<bool(const SubsetModel&)>& accept);

// First model well-formed for (cls, cs, sys) with some normal world where
// f is false. Throws FormulaOutsideUniverse if f is not in the closure of
// b.phi.
SearchResult FindCountermodel(const Formula& f, ModelClass cls, SystemId sys,
                              const ConstantSpec& cs, const SearchBounds& b);

// First well-formed model with a normal world satisfying every goal.
SearchResult FindWitness(const FormulaSet& goals, ModelClass cls, SystemId sys,
                         const ConstantSpec& cs, const SearchBounds& b);

}  // namespace jdl

#endif  // JDL_SEARCH_H_
