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

#ifndef JDL_PROOF_H_
#define JDL_PROOF_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jdl/axioms.h"
#include "jdl/syntax.h"

namespace jdl {

// Step references are 1-based, matching the proof file format.
struct ByAxiom {
  AxiomTag tag;
  friend bool operator==(const ByAxiom&, const ByAxiom&) = default;
};

// `major` proves A -> B, `minor` proves A.
struct ByMP {
  std::size_t major;
  std::size_t minor;
  friend bool operator==(const ByMP&, const ByMP&) = default;
};

// Axiom necessitation at tower height `level` (0 yields c:A).
struct ByAN {
  Term constant;
  Formula axiom;
  std::uint32_t level;
  friend bool operator==(const ByAN&, const ByAN&) = default;
};

using Justification = std::variant<ByAxiom, ByMP, ByAN>;

struct ProofStep {
  Formula formula;
  Justification why;
  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct Proof {
  SystemId system;
  ConstantSpec cs;
  std::vector<ProofStep> steps;

  const Formula& conclusion() const { return steps.back().formula; }
};

// !^n c : ... : !c : c : a, with n leading bangs on the outermost term.
Formula AnConclusion(const Term& c, const Formula& a, std::uint32_t level);
// !^n c
Term BangTower(const Term& c, std::uint32_t level);

enum class RejectReason {
  kBadAxiom,
  kBadMpShape,
  kBadAnPair,
  kForwardReference,
  kPlusInMinusLanguage,
  kEmptyProof,
  kSystemMismatch,
};

// Stable machine-readable codes: "bad-axiom", "bad-mp-shape", ...
std::string_view RejectReasonCode(RejectReason reason);

struct Verdict {
  bool accepted = true;
  // 1-based index of the first failing step; 0 for whole-proof failures.
  std::size_t step = 0;
  RejectReason reason = RejectReason::kBadAxiom;
  std::string detail;

  static Verdict Accept() { return {}; }
  static Verdict Reject(std::size_t step, RejectReason reason, std::string detail) {
    return {false, step, reason, std::move(detail)};
  }
};

Verdict CheckProof(const Proof& proof);

// Proof file:
//   system <jd|jnoc|jnoc-minus|jnoc-plus>
//   cs <file|total|empty>
//   <k>. <formula>  [<tag> | mp <i> <j> | an c<i> n=<n> : <axiom formula>]
// Blank lines and '#' comments are ignored.
struct ProofFile {
  SystemId system;
  std::string cs_ref;
  std::vector<ProofStep> steps;
};

ProofFile ParseProofFile(std::string_view text);

// Resolves a `cs` header reference. The default resolver knows only
// "total" and "empty" and throws std::invalid_argument for anything else.
using CsResolver = std::function<ConstantSpec(std::string_view ref, SystemId sys)>;
ConstantSpec ResolveBuiltinCs(std::string_view ref, SystemId sys);

Proof LoadProof(std::string_view text, const CsResolver& resolver = ResolveBuiltinCs);

// `cs_ref` is written into the header. When empty it is derived from the
// proof's specification ("total" or "empty"); a non-empty finite
// specification then needs an explicit reference.
std::string FormatProof(const Proof& proof, std::string_view cs_ref = {});
std::string FormatJustification(const Justification& why);

}  // namespace jdl

#endif  // JDL_PROOF_H_
