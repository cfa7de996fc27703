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

#include "jdl/derive.h"

#include <utility>
#include <vector>

namespace jdl {

std::string_view DeriveErrorName(DeriveErrorCode code) {
  switch (code) {
    case DeriveErrorCode::kNotAccepted: return "not-accepted";
    case DeriveErrorCode::kCsNotAppropriate: return "cs-not-appropriate";
    case DeriveErrorCode::kPlusRequired: return "plus-required";
    case DeriveErrorCode::kCsMissingConstant: return "cs-missing-constant";
    case DeriveErrorCode::kWrongSystem: return "wrong-system";
  }
  return "?";
}

DeriveError::DeriveError(DeriveErrorCode code, const std::string& message)
    : std::runtime_error(std::string(DeriveErrorName(code)) + ": " + message), code_(code) {}

namespace {

class Builder {
 public:
  explicit Builder(const ConstantSpec& cs) : proof_{cs.system(), cs, {}} {}

  std::size_t Add(Formula f, Justification why) {
    proof_.steps.push_back({std::move(f), std::move(why)});
    return proof_.steps.size();
  }
  std::size_t Axiom(Formula f, AxiomTag tag) { return Add(std::move(f), ByAxiom{tag}); }
  std::size_t Necessitate(const Term& c, const Formula& a, std::uint32_t level) {
    return Add(AnConclusion(c, a, level), ByAN{c, a, level});
  }
  // Major must prove A -> B; adds B.
  std::size_t MP(std::size_t major, std::size_t minor) {
    Formula b = proof_.steps[major - 1].formula.consequent();
    return Add(std::move(b), ByMP{major, minor});
  }
  const Formula& at(std::size_t k) const { return proof_.steps[k - 1].formula; }

  Proof Take() && { return std::move(proof_); }

 private:
  Proof proof_;
};

void RequireSystem(const ConstantSpec& cs, std::initializer_list<SystemId> allowed,
                   std::string_view what) {
  for (SystemId sys : allowed) {
    if (cs.system() == sys) return;
  }
  throw DeriveError(DeriveErrorCode::kWrongSystem,
                    std::string(what) + " is not available in " +
                        std::string(SystemName(cs.system())));
}

Formula Interconsistency(const Term& s, const Term& t, const Formula& a) {
  return Not(And(Formula::Holds(s, a), Formula::Holds(t, Not(a))));
}

// Appends the j+/noc derivation of ~(s:a & t:~a) and returns its step.
std::size_t AppendInterconsistencyJNoC(Builder& b, const Term& s, const Term& t,
                                       const Formula& a) {
  const Term sum = Term::Sum(s, t);
  const Formula goal = Interconsistency(s, t, a);
  const std::size_t lift_a = b.Axiom(AxiomJPlus(s, t, a), AxiomTag::kJPlus);
  const std::size_t lift_not_a = b.Axiom(AxiomJPlus(s, t, Not(a)), AxiomTag::kJPlus);
  const std::size_t noc = b.Axiom(AxiomNoc(sum, a), AxiomTag::kNoc);
  const std::size_t glue = b.Axiom(
      Formula::Implies(b.at(lift_a),
                       Formula::Implies(b.at(lift_not_a), Formula::Implies(b.at(noc), goal))),
      AxiomTag::kCl);
  return b.MP(b.MP(b.MP(glue, lift_a), lift_not_a), noc);
}

}  // namespace

Internalized Internalize(const Proof& proof) {
  if (Verdict v = CheckProof(proof); !v.accepted) {
    throw DeriveError(DeriveErrorCode::kNotAccepted,
                      "step " + std::to_string(v.step) + ": " +
                          std::string(RejectReasonCode(v.reason)));
  }
  if (!proof.cs.IsAxiomaticallyAppropriate()) {
    throw DeriveError(DeriveErrorCode::kCsNotAppropriate,
                      "internalization needs an axiomatically appropriate specification");
  }
  Builder b(proof.cs);
  std::vector<Term> terms;
  std::vector<std::size_t> proves;  // step of the new proof showing terms[k]:A_k
  terms.reserve(proof.steps.size());
  for (const ProofStep& step : proof.steps) {
    if (std::holds_alternative<ByAxiom>(step.why)) {
      Term c = *proof.cs.ConstantFor(step.formula);
      proves.push_back(b.Necessitate(c, step.formula, 0));
      terms.push_back(std::move(c));
    } else if (const auto* an = std::get_if<ByAN>(&step.why)) {
      proves.push_back(b.Necessitate(an->constant, an->axiom, an->level + 1));
      terms.push_back(BangTower(an->constant, an->level + 1));
    } else {
      const auto& mp = std::get<ByMP>(step.why);
      const Term& s = terms[mp.major - 1];
      const Term& u = terms[mp.minor - 1];
      const Formula& a = proof.steps[mp.minor - 1].formula;
      const std::size_t j = b.Axiom(AxiomJ(s, u, a, step.formula), AxiomTag::kJ);
      const std::size_t partial = b.MP(j, proves[mp.major - 1]);
      proves.push_back(b.MP(partial, proves[mp.minor - 1]));
      terms.push_back(Term::App(s, u));
    }
  }
  return {terms.back(), std::move(b).Take()};
}

Proof DeriveInterconsistency(const Term& s, const Term& t, const Formula& a,
                             const ConstantSpec& cs) {
  RequireSystem(cs, {SystemId::kJD}, "the jd derivation");
  Builder b(cs);
  const Term ts = Term::App(t, s);
  const std::size_t j = b.Axiom(AxiomJ(t, s, a, Formula::Falsum()), AxiomTag::kJ);
  const std::size_t jd = b.Axiom(AxiomJd(ts), AxiomTag::kJd);
  // (P -> (Q -> R)) -> (~R -> ~(Q & P)) with P = t:~a, Q = s:a, R = t.s:_|_.
  const std::size_t glue = b.Axiom(
      Formula::Implies(b.at(j), Formula::Implies(b.at(jd), Interconsistency(s, t, a))),
      AxiomTag::kCl);
  b.MP(b.MP(glue, j), jd);
  return std::move(b).Take();
}

Proof DeriveNocInJd(const Term& t, const Formula& a, const ConstantSpec& cs) {
  return DeriveInterconsistency(t, t, a, cs);
}

Proof DeriveInterconsistencyJNoC(const Term& s, const Term& t, const Formula& a,
                                 const ConstantSpec& cs) {
  if (!HasSum(cs.system())) {
    throw DeriveError(DeriveErrorCode::kPlusRequired,
                      "lifting both reasons to s+t needs the '+' operation");
  }
  RequireSystem(cs, {SystemId::kJNoC, SystemId::kJNoCPlus}, "the noc derivation");
  Builder b(cs);
  AppendInterconsistencyJNoC(b, s, t, a);
  return std::move(b).Take();
}

Proof DeriveJdInJNoC(const Term& t, const Formula& atom, const ConstantSpec& cs) {
  if (!HasSum(cs.system())) {
    throw DeriveError(DeriveErrorCode::kPlusRequired,
                      "the derivation goes through s+t and needs '+'");
  }
  RequireSystem(cs, {SystemId::kJNoC, SystemId::kJNoCPlus}, "the noc derivation");
  const Formula falsum = Formula::Falsum();
  const Formula explode = Formula::Implies(falsum, atom);
  const Formula explode_neg = Formula::Implies(falsum, Not(atom));
  const auto r = cs.ConstantFor(explode);
  if (!r) {
    throw DeriveError(DeriveErrorCode::kCsMissingConstant,
                      "no constant justifies " + PrintFormula(explode));
  }
  const auto s = cs.ConstantFor(explode_neg);
  if (!s) {
    throw DeriveError(DeriveErrorCode::kCsMissingConstant,
                      "no constant justifies " + PrintFormula(explode_neg));
  }
  Builder b(cs);
  const std::size_t r_step = b.Necessitate(*r, explode, 0);
  const std::size_t s_step = b.Necessitate(*s, explode_neg, 0);
  const std::size_t jr = b.Axiom(AxiomJ(*r, t, falsum, atom), AxiomTag::kJ);
  const std::size_t js = b.Axiom(AxiomJ(*s, t, falsum, Not(atom)), AxiomTag::kJ);
  const std::size_t to_r = b.MP(jr, r_step);
  const std::size_t to_s = b.MP(js, s_step);
  const std::size_t consistent =
      AppendInterconsistencyJNoC(b, Term::App(*r, t), Term::App(*s, t), atom);
  const std::size_t glue = b.Axiom(
      Formula::Implies(
          b.at(to_r),
          Formula::Implies(b.at(to_s), Formula::Implies(b.at(consistent), AxiomJd(t)))),
      AxiomTag::kCl);
  b.MP(b.MP(b.MP(glue, to_r), to_s), consistent);
  return std::move(b).Take();
}

Proof DeriveJdInJNoCPlus(const Term& t, const ConstantSpec& cs) {
  RequireSystem(cs, {SystemId::kJNoCPlus}, "the jtop derivation");
  Builder b(cs);
  const std::size_t noc = b.Axiom(AxiomNoc(t, Formula::Falsum()), AxiomTag::kNoc);
  const std::size_t top = b.Axiom(AxiomJTop(t), AxiomTag::kJTop);
  const std::size_t glue = b.Axiom(
      Formula::Implies(b.at(noc), Formula::Implies(b.at(top), AxiomJd(t))), AxiomTag::kCl);
  b.MP(b.MP(glue, noc), top);
  return std::move(b).Take();
}

Proof DeriveJdInJNoCPlus(const Term& t) {
  return DeriveJdInJNoCPlus(t, ConstantSpec::Empty(SystemId::kJNoCPlus));
}

}  // namespace jdl
