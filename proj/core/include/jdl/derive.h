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

#ifndef JDL_DERIVE_H_
#define JDL_DERIVE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "jdl/axioms.h"
#include "jdl/proof.h"
#include "jdl/syntax.h"

namespace jdl {

// Builders for fully expanded linear proofs. Every propositional step is a
// single cl instance; no derived rules are referenced.

enum class DeriveErrorCode {
  kNotAccepted,
  kCsNotAppropriate,
  kPlusRequired,
  kCsMissingConstant,
  kWrongSystem,
};

// "not-accepted", "cs-not-appropriate", "plus-required",
// "cs-missing-constant", "wrong-system".
std::string_view DeriveErrorName(DeriveErrorCode code);

class DeriveError : public std::runtime_error {
 public:
  DeriveError(DeriveErrorCode code, const std::string& message);
  DeriveErrorCode code() const { return code_; }

 private:
  DeriveErrorCode code_;
};

struct Internalized {
  Term term;
  Proof proof;
};

// Given an accepted proof of A under an axiomatically appropriate
// specification, builds a term t and a proof of t:A in the same system.
// Axiom leaves get the least constant justifying them; MP becomes an
// instance of j plus two MPs; a necessitation step gains one more '!'.
Internalized Internalize(const Proof& proof);

// JD proof of ~(s:a & t:~a) from j (t:~a -> (s:a -> t.s:_|_)), jd for t.s
// and one propositional step. Uses no necessitation, so any specification
// over JD works.
Proof DeriveInterconsistency(const Term& s, const Term& t, const Formula& a,
                             const ConstantSpec& cs);

// The noc instance ~(t:a & t:~a) in JD.
Proof DeriveNocInJd(const Term& t, const Formula& a, const ConstantSpec& cs);

// JNoC (or JNoC+) proof of ~(s:a & t:~a): j+ lifts both justifications to
// s+t, then noc for s+t. Throws plus-required for JNoC-.
Proof DeriveInterconsistencyJNoC(const Term& s, const Term& t, const Formula& a,
                                 const ConstantSpec& cs);

// JNoC proof of ~(t:_|_). Needs constants r, s with r:(_|_ -> p) and
// s:(_|_ -> ~p) in the specification; throws cs-missing-constant otherwise.
Proof DeriveJdInJNoC(const Term& t, const Formula& atom, const ConstantSpec& cs);

// JNoC+ proof of ~(t:_|_) from noc for (t, _|_) and jtop for t.
Proof DeriveJdInJNoCPlus(const Term& t, const ConstantSpec& cs);
Proof DeriveJdInJNoCPlus(const Term& t);

}  // namespace jdl

#endif  // JDL_DERIVE_H_
