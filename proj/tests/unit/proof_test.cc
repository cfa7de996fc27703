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

#include "jdl/proof.h"

#include <gtest/gtest.h>

#include "jdl/derive.h"
#include "support/generators.h"

namespace jdl {
namespace {

const Term kC = Term::Constant(1);
const Term kT = Term::Variable(2);
const Formula kP1 = Formula::Atom(1);
const Formula kBot = Formula::Falsum();

Formula F(const char* text) { return ParseFormula(text); }

TEST(AnConclusionTest, Tower) {
  const Formula a = F("_|_ -> P1");
  EXPECT_EQ(AnConclusion(kC, a, 0), Formula::Holds(kC, a));
  EXPECT_EQ(AnConclusion(kC, a, 1), F("!c1:c1:(_|_ -> P1)"));
  EXPECT_EQ(AnConclusion(kC, a, 2), F("!!c1:!c1:c1:(_|_ -> P1)"));
  EXPECT_EQ(BangTower(kC, 3), Term::Bang(Term::Bang(Term::Bang(kC))));
}

TEST(CheckProofTest, JdIsNotAJNoCAxiom) {
  const Proof p{SystemId::kJNoC, ConstantSpec::Empty(SystemId::kJNoC),
                {{AxiomJd(kT), ByAxiom{AxiomTag::kJd}}}};
  const Verdict v = CheckProof(p);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.step, 1u);
  EXPECT_EQ(v.reason, RejectReason::kBadAxiom);
  EXPECT_EQ(RejectReasonCode(v.reason), "bad-axiom");
}

TEST(CheckProofTest, NecessitationDependsOnlyOnSpecification) {
  const Formula a = F("_|_ -> P1");
  const std::vector<ProofStep> steps = {{Formula::Holds(kC, a), ByAN{kC, a, 0}}};
  const Verdict empty = CheckProof({SystemId::kJNoC, ConstantSpec::Empty(SystemId::kJNoC), steps});
  EXPECT_FALSE(empty.accepted);
  EXPECT_EQ(empty.step, 1u);
  EXPECT_EQ(empty.reason, RejectReason::kBadAnPair);
  EXPECT_TRUE(CheckProof({SystemId::kJNoC, ConstantSpec::Total(SystemId::kJNoC), steps}).accepted);
}

TEST(CheckProofTest, NecessitationFormulaMustMatchItsPair) {
  const Formula a = F("_|_ -> P1");
  const Proof p{SystemId::kJD, ConstantSpec::Total(SystemId::kJD),
                {{AnConclusion(kC, a, 1), ByAN{kC, a, 2}}}};
  const Verdict v = CheckProof(p);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.reason, RejectReason::kBadAnPair);
}

TEST(CheckProofTest, ModusPonens) {
  const Formula a = F("_|_ -> P1");
  const Formula ka = Formula::Implies(a, Formula::Implies(F("P2"), a));
  Proof p{SystemId::kJD, ConstantSpec::Empty(SystemId::kJD),
          {{a, ByAxiom{AxiomTag::kCl}},
           {ka, ByAxiom{AxiomTag::kCl}},
           {ka.consequent(), ByMP{2, 1}}}};
  EXPECT_TRUE(CheckProof(p).accepted);

  p.steps[2].why = ByMP{1, 2};
  Verdict v = CheckProof(p);
  EXPECT_EQ(v.reason, RejectReason::kBadMpShape);
  EXPECT_EQ(v.step, 3u);

  p.steps[2].why = ByMP{3, 1};
  v = CheckProof(p);
  EXPECT_EQ(v.reason, RejectReason::kForwardReference);

  p.steps[2].why = ByMP{0, 1};
  EXPECT_EQ(CheckProof(p).reason, RejectReason::kForwardReference);
}

TEST(CheckProofTest, PlusFreeLanguage) {
  const Formula taut = F("x1+x2:P1 -> x1+x2:P1");
  const Proof p{SystemId::kJNoCMinus, ConstantSpec::Empty(SystemId::kJNoCMinus),
                {{taut, ByAxiom{AxiomTag::kCl}}}};
  const Verdict v = CheckProof(p);
  EXPECT_EQ(v.reason, RejectReason::kPlusInMinusLanguage);
  EXPECT_EQ(RejectReasonCode(v.reason), "plus-in-minus-language");
  // The same step is fine once '+' exists.
  const Proof q{SystemId::kJNoC, ConstantSpec::Empty(SystemId::kJNoC),
                {{taut, ByAxiom{AxiomTag::kCl}}}};
  EXPECT_TRUE(CheckProof(q).accepted);
}

TEST(CheckProofTest, WholeProofFailures) {
  EXPECT_EQ(CheckProof({SystemId::kJD, ConstantSpec::Empty(SystemId::kJD), {}}).reason,
            RejectReason::kEmptyProof);
  const Proof p{SystemId::kJD, ConstantSpec::Empty(SystemId::kJNoC),
                {{F("_|_ -> P1"), ByAxiom{AxiomTag::kCl}}}};
  const Verdict v = CheckProof(p);
  EXPECT_EQ(v.reason, RejectReason::kSystemMismatch);
  EXPECT_EQ(v.step, 0u);
}

TEST(CheckProofTest, WrongTagIsRejected) {
  const Proof p{SystemId::kJD, ConstantSpec::Empty(SystemId::kJD),
                {{AxiomJd(kT), ByAxiom{AxiomTag::kCl}}}};
  EXPECT_EQ(CheckProof(p).reason, RejectReason::kBadAxiom);
}

TEST(CheckProofTest, PrefixClosure) {
  testing::Gen g(99);
  for (SystemId sys : {SystemId::kJD, SystemId::kJNoC, SystemId::kJNoCMinus,
                       SystemId::kJNoCPlus}) {
    for (int i = 0; i < 25; ++i) {
      Proof p = g.RandomProof(sys, 12);
      ASSERT_TRUE(CheckProof(p).accepted);
      while (p.steps.size() > 1) {
        p.steps.pop_back();
        ASSERT_TRUE(CheckProof(p).accepted);
      }
    }
  }
}

TEST(CheckProofTest, Deterministic) {
  testing::Gen g(3);
  Proof p = g.RandomProof(SystemId::kJNoC, 10);
  p.steps[4].formula = kBot;
  const Verdict a = CheckProof(p);
  const Verdict b = CheckProof(p);
  EXPECT_EQ(a.accepted, b.accepted);
  EXPECT_EQ(a.step, b.step);
  EXPECT_EQ(a.reason, b.reason);
  EXPECT_EQ(a.detail, b.detail);
}

TEST(ProofFileTest, RoundTrip) {
  testing::Gen g(17);
  for (SystemId sys : {SystemId::kJD, SystemId::kJNoC, SystemId::kJNoCMinus,
                       SystemId::kJNoCPlus}) {
    const Proof p = g.RandomProof(sys, 15);
    const std::string text = FormatProof(p);
    const Proof q = LoadProof(text);
    EXPECT_EQ(q.system, p.system);
    EXPECT_EQ(q.cs, p.cs);
    EXPECT_EQ(q.steps, p.steps);
    EXPECT_EQ(FormatProof(q), text);
  }
}

TEST(ProofFileTest, Parse) {
  const char* text =
      "# a necessitation\n"
      "system jnoc\n"
      "cs total\n"
      "\n"
      "1. c1:(_|_ -> P1)  [an c1 n=0 : _|_ -> P1]\n"
      "2. _|_ -> P1  [cl]\n";
  const Proof p = LoadProof(text);
  ASSERT_EQ(p.steps.size(), 2u);
  EXPECT_EQ(p.system, SystemId::kJNoC);
  EXPECT_TRUE(p.cs.is_total());
  EXPECT_TRUE(CheckProof(p).accepted);
  EXPECT_EQ(std::get<ByAN>(p.steps[0].why).constant, kC);
}

TEST(ProofFileTest, Errors) {
  EXPECT_THROW(ParseProofFile("cs total\n1. P1 [cl]\n"), ParseError);
  EXPECT_THROW(ParseProofFile("system jd\ncs total\n2. P1 [cl]\n"), ParseError);
  EXPECT_THROW(ParseProofFile("system jd\ncs total\n1. P1\n"), ParseError);
  EXPECT_THROW(ParseProofFile("system jd\ncs total\n1. P1 [frobnicate]\n"), ParseError);
  EXPECT_THROW(ParseProofFile("system jd\ncs total\n1. P1 [mp 1]\n"), ParseError);
  EXPECT_THROW(ParseProofFile("system jq\ncs total\n"), ParseError);
  try {
    ParseProofFile("system jd\ncs total\n1. P1 -> [cl]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    EXPECT_GT(e.position(), 20u);
  }
  EXPECT_THROW(LoadProof("system jd\ncs other.cs\n1. P1 [cl]\n"), std::invalid_argument);
}

TEST(ProofFileTest, FiniteSpecificationNeedsReference) {
  const std::vector<std::pair<Term, Formula>> pairs = {{kC, F("_|_ -> P1")}};
  const Proof p{SystemId::kJD, ConstantSpec::Finite(SystemId::kJD, pairs),
                {{F("_|_ -> P1"), ByAxiom{AxiomTag::kCl}}}};
  EXPECT_THROW(FormatProof(p), std::invalid_argument);
  EXPECT_NE(FormatProof(p, "my.cs").find("cs my.cs"), std::string::npos);
}

}  // namespace
}  // namespace jdl
