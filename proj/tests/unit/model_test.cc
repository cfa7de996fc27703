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

#include "jdl/model.h"

#include <gtest/gtest.h>

#include "support/generators.h"
#include "support/model_gen.h"
#include "support/oracles.h"

namespace jdl {
namespace {

const Term kS = Term::Variable(1);
const Term kT = Term::Variable(2);
const Formula kP1 = Formula::Atom(1);
const Formula kBot = Formula::Falsum();

Formula F(const char* text) { return ParseFormula(text); }

constexpr World kOmega = 0;
constexpr World kNu = 1;

SubsetModel JdCountermodel(const FormulaSet& extra = {}, const TermSet& extra_terms = {}) {
  return BuildJdCountermodel(kT, extra, extra_terms);
}

TEST(JdCountermodelTest, Shape) {
  const SubsetModel m = JdCountermodel();
  EXPECT_EQ(m.world_count(), 2u);
  EXPECT_EQ(m.normal(), WorldSet::Of({kOmega}));
  EXPECT_EQ(m.universe().phi(),
            SubformulaClosure({Formula::Holds(kT, kBot), AxiomNoc(kT, kP1)}));
  EXPECT_EQ(m.universe().term_set(), TermSet{kT});
  EXPECT_EQ(m.Evidence(kOmega, kT), WorldSet::Of({kNu}));
}

TEST(JdCountermodelTest, Truth) {
  const SubsetModel m = JdCountermodel({AxiomJd(kT)});
  EXPECT_TRUE(m.Eval(kOmega, Formula::Holds(kT, kBot)));
  EXPECT_EQ(m.TruthSet(kBot), WorldSet::Of({kNu}));
  EXPECT_TRUE(m.TruthSet(kP1).empty());
  EXPECT_FALSE(m.HoldsAtAllNormal(AxiomJd(kT)));
  EXPECT_TRUE(m.HoldsAtAllNormal(AxiomNoc(kT, kP1)));
  EXPECT_TRUE(m.ConflictFreeWorlds().contains(kNu));
  EXPECT_FALSE(m.ConsistentWorlds().contains(kNu));
}

TEST(JdCountermodelTest, Audits) {
  const SubsetModel m = JdCountermodel();
  EXPECT_TRUE(CheckWellFormed(m, ModelClass::kNoC, ConstantSpec::Empty(SystemId::kJNoC),
                              SystemId::kJNoC)
                  .ok());
  const WellFormedReport d = CheckWellFormed(m, ModelClass::kDArbitrary,
                                             ConstantSpec::Empty(SystemId::kJNoC),
                                             SystemId::kJNoC);
  ASSERT_EQ(d.violations.size(), m.universe().terms().size());
  for (const Violation& v : d.violations) EXPECT_EQ(v.condition, Condition::kSerial);
  const WellFormedReport g = CheckWellFormed(m, ModelClass::kGeneral,
                                             ConstantSpec::Empty(SystemId::kJNoC),
                                             SystemId::kJNoC);
  ASSERT_FALSE(g.ok());
  EXPECT_EQ(g.violations[0].condition, Condition::kSerial);
}

TEST(JdCountermodelTest, EveryTermIsSeriallyBrokenForD) {
  const SubsetModel m = JdCountermodel({}, {kS, Term::App(kS, kT), Term::Sum(kS, kT)});
  const WellFormedReport d = CheckWellFormed(m, ModelClass::kDArbitrary,
                                             ConstantSpec::Empty(SystemId::kJNoC),
                                             SystemId::kJNoC);
  std::size_t serial = 0;
  for (const Violation& v : d.violations) serial += v.condition == Condition::kSerial;
  EXPECT_EQ(serial, m.universe().terms().size());
}

TEST(JdCountermodelTest, AppSetIsEmpty) {
  const SubsetModel m = JdCountermodel({}, {kS});
  // Hand enumeration: at nu only _|_ is true, and no H -> F of the universe
  // is true there, so no implication has E(omega, s) inside its truth set.
  EXPECT_TRUE(m.AppSet(kOmega, kS, kT).empty());
}

TEST(EvalTest, NormalWorldClauses) {
  const SubsetModel m = JdCountermodel();
  EXPECT_FALSE(m.Eval(kOmega, kBot));
  EXPECT_THROW(m.Eval(kOmega, F("P7")), FormulaOutsideUniverse);
  EXPECT_THROW(m.TruthSet(F("P7")), FormulaOutsideUniverse);
  EXPECT_THROW(m.HoldsAtAllNormal(F("P7")), FormulaOutsideUniverse);
  EXPECT_THROW(m.Evidence(kOmega, kS), std::out_of_range);
}

TEST(EvalTest, EmptyEvidenceJustifiesEverything) {
  ModelData d;
  d.world_names = {"w"};
  d.normal = WorldSet::Of({0});
  d.phi = {Formula::Holds(kT, kP1), Formula::Holds(kS, kP1)};
  const SubsetModel m(d);
  EXPECT_TRUE(m.Eval(0, Formula::Holds(kT, kP1)));
  EXPECT_EQ(m.AppSet(0, kS, kT), FormulaSet{});  // no implications in the universe
}

TEST(AppSetTest, EmptyEvidenceYieldsEveryConsequent) {
  ModelData d;
  d.world_names = {"w", "v"};
  d.normal = WorldSet::Of({0});
  d.phi = {F("P1 -> P2"), F("x1:P3"), F("P4 -> (P1 -> P2)")};
  d.terms = {kT};
  const SubsetModel m(d);
  EXPECT_EQ(m.AppSet(0, kS, kT), (FormulaSet{F("P2"), F("P1 -> P2")}));
}

TEST(AppSetTest, DefinitionInstance) {
  ModelData d;
  d.world_names = {"w", "v"};
  d.normal = WorldSet::Of({0, 1});
  d.phi = {F("P1 -> P2"), F("x1:(P1 -> P2)"), F("x2:P1")};
  d.atoms[{1, kP1}] = true;
  d.atoms[{1, F("P2")}] = true;
  d.evidence[{0, kS}] = WorldSet::Of({1});
  d.evidence[{0, kT}] = WorldSet::Of({1});
  const SubsetModel m(d);
  EXPECT_TRUE(m.AppSet(0, kS, kT).contains(F("P2")));
}

TEST(AppSetTest, MonotoneInUniverse) {
  testing::Gen g(31);
  for (int i = 0; i < 200; ++i) {
    FormulaSet small;
    for (int k = 0; k < 3; ++k) small.insert(g.RandomFormula(3, true, 2, 0));
    FormulaSet large = small;
    for (int k = 0; k < 3; ++k) large.insert(g.RandomFormula(3, true, 2, 0));
    const TermSet terms = {kS, kT};
    const auto us = std::make_shared<const Universe>(small, terms);
    const auto ul = std::make_shared<const Universe>(large, terms);
    // Same model data over both universes.
    const SubsetModel ml = testing::RandomModel(g, ul, 3);
    ModelData data = ml.ToData();
    data.phi = us->phi();
    data.terms = us->term_set();
    std::erase_if(data.val, [&](const auto& e) { return !us->FormulaIndex(e.first.second); });
    std::erase_if(data.evidence, [&](const auto& e) { return !us->TermIndex(e.first.second); });
    const SubsetModel ms(data);
    for (World w : ml.normal().members()) {
      for (const Term& a : ms.universe().terms()) {
        for (const Term& b : ms.universe().terms()) {
          const FormulaSet in_large = ml.AppSet(w, a, b);
          for (const Formula& f : ms.AppSet(w, a, b)) {
            EXPECT_TRUE(in_large.contains(f)) << PrintFormula(f);
          }
        }
      }
    }
  }
}

TEST(EvalTest, AgreesWithNaiveEvaluator) {
  testing::Gen g(77);
  for (int i = 0; i < 300; ++i) {
    FormulaSet phi;
    for (int k = 0; k < 4; ++k) phi.insert(g.RandomFormula(4, true, 3, 1));
    const auto u = std::make_shared<const Universe>(phi, TermSet{});
    const SubsetModel m = testing::RandomModel(g, u, 4);
    const testing::NaiveModel naive = testing::FromSubsetModel(m);
    for (const Formula& f : u->formulas()) {
      WorldSet expected;
      for (World w = 0; w < m.world_count(); ++w) {
        const bool value = naive.Eval(static_cast<int>(w), f);
        ASSERT_EQ(m.Eval(w, f), value) << PrintFormula(f) << " at w" << w;
        if (value) expected.insert(w);
      }
      ASSERT_EQ(m.TruthSet(f), expected);
      ASSERT_EQ(m.HoldsAtAllNormal(f), m.normal().SubsetOf(expected));
      if (f.is_falsum()) ASSERT_FALSE(m.TruthSet(f).Intersects(m.normal()));
    }
  }
}

TEST(AuditTest, AgreesWithNaiveAudit) {
  testing::Gen g(88);
  int well_formed = 0;
  for (int i = 0; i < 600; ++i) {
    FormulaSet phi;
    for (int k = 0; k < 3; ++k) phi.insert(g.RandomFormula(3, true, 2, 1));
    phi.insert(g.RandomInstance(AxiomTag::kCl, true, 1));
    TermSet terms = {Term::Constant(0), Term::Bang(Term::Constant(0))};
    const SystemId sys = i % 3 == 0 ? SystemId::kJNoCMinus
                                    : (i % 3 == 1 ? SystemId::kJD : SystemId::kJNoC);
    const ModelClass cls = static_cast<ModelClass>(i % 3);
    const ConstantSpec cs = i % 2 ? ConstantSpec::Total(sys) : ConstantSpec::Empty(sys);
    const auto u = std::make_shared<const Universe>(phi, terms);
    const Auditor auditor(u, cls, cs, sys);
    auto m = testing::RandomWellFormedModel(g, auditor, u, cls, 3);
    const SubsetModel model = m ? *m : testing::RandomModel(g, u, 3);
    const bool expected = testing::NaiveWellFormed(testing::FromSubsetModel(model), cls, cs, sys);
    ASSERT_EQ(auditor.Passes(model), expected) << FormatModel(model);
    ASSERT_EQ(CheckWellFormed(model, cls, cs, sys).ok(), expected);
    well_formed += expected;
  }
  EXPECT_GT(well_formed, 50);
  EXPECT_LT(well_formed, 550);
}

TEST(AuditTest, SpecificationTowers) {
  const Term c = Term::Constant(1);
  const Formula ax = F("_|_ -> P1");
  ModelData d;
  d.world_names = {"w", "v"};
  d.normal = WorldSet::Of({0});
  d.phi = {AnConclusion(c, ax, 1)};
  d.terms = {Term::Bang(c)};
  d.val[{1, ax}] = false;
  d.val[{1, AnConclusion(c, ax, 0)}] = false;
  d.evidence[{0, c}] = WorldSet::Of({0});
  d.evidence[{0, Term::Bang(c)}] = WorldSet::Of({0, 1});
  const SubsetModel m(d);
  const ConstantSpec total = ConstantSpec::Total(SystemId::kJD);
  const WellFormedReport r = CheckWellFormed(m, ModelClass::kGeneral, total, SystemId::kJD);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].condition, Condition::kConstantSpec);
  EXPECT_EQ(r.violations[0].terms, std::vector<Term>{Term::Bang(c)});
  EXPECT_EQ(r.violations[0].formulas, std::vector<Formula>{AnConclusion(c, ax, 0)});
  EXPECT_TRUE(CheckWellFormed(m, ModelClass::kGeneral, ConstantSpec::Empty(SystemId::kJD),
                              SystemId::kJD)
                  .ok());
}

TEST(AuditTest, SumAndLanguage) {
  ModelData d;
  d.world_names = {"w"};
  d.normal = WorldSet::Of({0});
  d.terms = {Term::Sum(kS, kT)};
  d.evidence[{0, kS}] = WorldSet::Of({0});
  d.evidence[{0, kT}] = WorldSet::Of({0});
  d.evidence[{0, Term::Sum(kS, kT)}] = WorldSet::Of({0});
  const SubsetModel ok(d);
  EXPECT_TRUE(CheckWellFormed(ok, ModelClass::kGeneral, ConstantSpec::Empty(SystemId::kJD),
                              SystemId::kJD)
                  .ok());
  const WellFormedReport minus = CheckWellFormed(
      ok, ModelClass::kGeneral, ConstantSpec::Empty(SystemId::kJNoCMinus), SystemId::kJNoCMinus);
  ASSERT_EQ(minus.violations.size(), 1u);
  EXPECT_EQ(minus.violations[0].condition, Condition::kLanguage);

  d.world_names = {"w", "v"};
  d.normal = WorldSet::Of({0, 1});
  d.evidence[{0, kT}] = WorldSet::Of({1});
  const SubsetModel bad(d);
  const WellFormedReport r =
      CheckWellFormed(bad, ModelClass::kGeneral, ConstantSpec::Empty(SystemId::kJD), SystemId::kJD);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations[0].condition, Condition::kSum);
  EXPECT_EQ(ConditionName(r.violations[0].condition), "sum");
}

TEST(AuditTest, EmptyUniverseStillNeedsSerialWitnesses) {
  ModelData d;
  d.world_names = {"w"};
  d.normal = WorldSet::Of({0});
  d.terms = {kT};
  const SubsetModel m(d);
  const WellFormedReport r =
      CheckWellFormed(m, ModelClass::kGeneral, ConstantSpec::Empty(SystemId::kJD), SystemId::kJD);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].condition, Condition::kSerial);
  d.terms.clear();
  EXPECT_TRUE(CheckWellFormed(SubsetModel(d), ModelClass::kGeneral,
                              ConstantSpec::Empty(SystemId::kJD), SystemId::kJD)
                  .ok());
}

TEST(AuditTest, RejectsForeignSpecification) {
  const SubsetModel m = JdCountermodel();
  EXPECT_THROW(CheckWellFormed(m, ModelClass::kNoC, ConstantSpec::Empty(SystemId::kJD),
                               SystemId::kJNoC),
               std::invalid_argument);
}

TEST(ProjectTest, Examples) {
  EXPECT_EQ(Project({Formula::Holds(kT, kBot), Formula::Holds(kS, kP1)}, kT), FormulaSet{kBot});
  EXPECT_TRUE(Project({}, kT).empty());
  EXPECT_EQ(Project({Formula::Holds(kT, kP1), Formula::Holds(kT, Not(kP1))}, kT),
            (FormulaSet{kP1, Not(kP1)}));
}

TEST(ModelDataTest, StructuralErrors) {
  ModelData d;
  EXPECT_THROW(SubsetModel{d}, ModelError);
  d.world_names = {"w", "v"};
  EXPECT_THROW(SubsetModel{d}, ModelError);  // no normal world
  d.normal = WorldSet::Of({0});
  EXPECT_NO_THROW(SubsetModel{d});
  ModelData e = d;
  e.val[{0, kBot}] = true;  // valuation entry at a normal world
  EXPECT_THROW(SubsetModel{e}, ModelError);
  e = d;
  e.val[{1, kP1}] = true;  // outside the universe
  EXPECT_THROW(SubsetModel{e}, ModelError);
  e = d;
  e.terms = {kT};
  e.evidence[{0, kT}] = WorldSet::Of({5});
  EXPECT_THROW(SubsetModel{e}, ModelError);
  e = d;
  e.world_names = {"w", "w"};
  EXPECT_THROW(SubsetModel{e}, ModelError);
  e = d;
  e.atoms[{1, kP1}] = true;
  EXPECT_THROW(SubsetModel{e}, ModelError);
}

TEST(ModelFileTest, RoundTrip) {
  testing::Gen g(5150);
  for (int i = 0; i < 100; ++i) {
    FormulaSet phi;
    for (int k = 0; k < 3; ++k) phi.insert(g.RandomFormula(3));
    const auto u = std::make_shared<const Universe>(phi, TermSet{g.RandomTerm(2)});
    const SubsetModel m = testing::RandomModel(g, u, 4);
    const std::string text = FormatModel(m);
    const SubsetModel back(ParseModelFile(text));
    ASSERT_EQ(FormatModel(back), text);
    for (const Formula& f : u->formulas()) ASSERT_EQ(back.TruthSet(f), m.TruthSet(f));
  }
}

TEST(ModelFileTest, Parse) {
  const char* text =
      "# two worlds\n"
      "worlds omega nu\n"
      "normal omega\n"
      "phi\n"
      "x2:_|_\n"
      "~(x2:P1 & x2:~P1)\n"
      "terms\n"
      "x2\n"
      "default nu 0\n"
      "val nu _|_ 1\n"
      "E omega x2 {nu}\n";
  const SubsetModel m(ParseModelFile(text));
  EXPECT_EQ(FormatModel(m), FormatModel(JdCountermodel()));
  EXPECT_EQ(m.WorldByName("nu"), kNu);
}

TEST(ModelFileTest, Errors) {
  EXPECT_THROW(ParseModelFile("normal w\n"), ParseError);
  EXPECT_THROW(ParseModelFile("worlds w\nnormal v\n"), ParseError);
  EXPECT_THROW(ParseModelFile("worlds w\nfrob\n"), ParseError);
  EXPECT_THROW(ParseModelFile("worlds w\nval w P1 2\n"), ParseError);
  EXPECT_THROW(ParseModelFile("worlds w\nE w x1 {w\n"), ParseError);
  EXPECT_THROW(ParseModelFile("worlds w\nphi\nP1 ->\n"), ParseError);
  try {
    ParseModelFile("worlds w\nnormal w\nphi\nP1 P2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace jdl
