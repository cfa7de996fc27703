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

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace jdl {

Term BangTower(const Term& c, std::uint32_t level) {
  Term t = c;
  for (std::uint32_t i = 0; i < level; ++i) t = Term::Bang(std::move(t));
  return t;
}

Formula AnConclusion(const Term& c, const Formula& a, std::uint32_t level) {
  Formula f = Formula::Holds(c, a);
  for (std::uint32_t k = 1; k <= level; ++k) {
    f = Formula::Holds(BangTower(c, k), std::move(f));
  }
  return f;
}

std::string_view RejectReasonCode(RejectReason reason) {
  switch (reason) {
    case RejectReason::kBadAxiom: return "bad-axiom";
    case RejectReason::kBadMpShape: return "bad-mp-shape";
    case RejectReason::kBadAnPair: return "bad-an-pair";
    case RejectReason::kForwardReference: return "forward-reference";
    case RejectReason::kPlusInMinusLanguage: return "plus-in-minus-language";
    case RejectReason::kEmptyProof: return "empty-proof";
    case RejectReason::kSystemMismatch: return "system-mismatch";
  }
  return "?";
}

namespace {

bool StepUsesSum(const ProofStep& step) {
  if (step.formula.contains_sum()) return true;
  if (const auto* an = std::get_if<ByAN>(&step.why)) {
    return an->constant.contains_sum() || an->axiom.contains_sum();
  }
  return false;
}

}  // namespace

Verdict CheckProof(const Proof& proof) {
  if (proof.steps.empty()) {
    return Verdict::Reject(0, RejectReason::kEmptyProof, "proof has no steps");
  }
  if (proof.cs.system() != proof.system) {
    return Verdict::Reject(0, RejectReason::kSystemMismatch,
                           "constant specification belongs to " +
                               std::string(SystemName(proof.cs.system())));
  }
  const bool minus = !HasSum(proof.system);
  for (std::size_t k = 1; k <= proof.steps.size(); ++k) {
    const ProofStep& step = proof.steps[k - 1];
    if (minus && StepUsesSum(step)) {
      return Verdict::Reject(k, RejectReason::kPlusInMinusLanguage,
                             "'+' does not exist in this language");
    }
    if (const auto* ax = std::get_if<ByAxiom>(&step.why)) {
      if (!HasSchema(proof.system, ax->tag)) {
        return Verdict::Reject(k, RejectReason::kBadAxiom,
                               std::string(AxiomTagName(ax->tag)) + " is not a schema of " +
                                   std::string(SystemName(proof.system)));
      }
      const auto tag = MatchAxiom(step.formula, proof.system);
      if (tag != ax->tag) {
        return Verdict::Reject(k, RejectReason::kBadAxiom,
                               "not an instance of " + std::string(AxiomTagName(ax->tag)));
      }
    } else if (const auto* mp = std::get_if<ByMP>(&step.why)) {
      if (mp->major == 0 || mp->minor == 0 || mp->major >= k || mp->minor >= k) {
        return Verdict::Reject(k, RejectReason::kForwardReference,
                               "premises must be earlier steps");
      }
      const Formula& major = proof.steps[mp->major - 1].formula;
      const Formula& minor = proof.steps[mp->minor - 1].formula;
      if (!major.is_implies() || major.antecedent() != minor ||
          major.consequent() != step.formula) {
        return Verdict::Reject(k, RejectReason::kBadMpShape,
                               "step " + std::to_string(mp->major) + " is not step " +
                                   std::to_string(mp->minor) + " -> this formula");
      }
    } else {
      const auto& an = std::get<ByAN>(step.why);
      if (!proof.cs.Contains(an.constant, an.axiom)) {
        return Verdict::Reject(k, RejectReason::kBadAnPair,
                               "pair not in the constant specification");
      }
      if (AnConclusion(an.constant, an.axiom, an.level) != step.formula) {
        return Verdict::Reject(k, RejectReason::kBadAnPair,
                               "formula is not the necessitation of its pair");
      }
    }
  }
  return Verdict::Accept();
}

// ---------------------------------------------------------------------------
// File format

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool ToNumber(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

struct LineError {
  std::size_t line;
  std::size_t offset;
  [[noreturn]] void Throw(const std::string& message, std::size_t column = 0) const {
    throw ParseError("line " + std::to_string(line) + ": " + message, offset + column);
  }
};

Justification ParseJustification(std::string_view text, const LineError& err,
                                 std::size_t column) {
  const auto words = Words(text);
  if (words.empty()) err.Throw("empty justification", column);
  if (words[0] == "mp") {
    std::size_t i = 0;
    std::size_t j = 0;
    if (words.size() != 3 || !ToNumber(words[1], i) || !ToNumber(words[2], j)) {
      err.Throw("expected 'mp <i> <j>'", column);
    }
    return ByMP{i, j};
  }
  if (words[0] == "an") {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) err.Throw("expected 'an c<i> n=<n> : <axiom>'", column);
    const auto head = Words(text.substr(0, colon));
    std::size_t level = 0;
    if (head.size() != 3 || head[2].substr(0, 2) != "n=" ||
        !ToNumber(head[2].substr(2), level) || level > UINT32_MAX) {
      err.Throw("expected 'an c<i> n=<n> : <axiom>'", column);
    }
    try {
      Term c = ParseTerm(head[1]);
      if (!c.is_constant()) err.Throw("necessitation needs a constant", column);
      Formula axiom = ParseFormula(text.substr(colon + 1));
      return ByAN{std::move(c), std::move(axiom), static_cast<std::uint32_t>(level)};
    } catch (const ParseError& e) {
      err.Throw(e.what(), column);
    }
  }
  if (words.size() == 1) {
    if (auto tag = ParseAxiomTagName(words[0])) return ByAxiom{*tag};
  }
  err.Throw("unknown justification '" + std::string(Trim(text)) + "'", column);
}

}  // namespace

ProofFile ParseProofFile(std::string_view text) {
  std::optional<SystemId> system;
  std::optional<std::string> cs_ref;
  std::vector<ProofStep> steps;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    const std::size_t end = std::min(text.find('\n', offset), text.size());
    const std::string_view raw = text.substr(offset, end - offset);
    const LineError err{++line_no, offset};
    offset = end + 1;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto words = Words(line);
    if (words[0] == "system") {
      if (system || words.size() != 2) err.Throw("expected a single 'system <id>' line");
      system = ParseSystemName(words[1]);
      if (!system) err.Throw("unknown system '" + std::string(words[1]) + "'");
      continue;
    }
    if (words[0] == "cs") {
      if (cs_ref || words.size() != 2) err.Throw("expected a single 'cs <file|total|empty>' line");
      cs_ref = std::string(words[1]);
      continue;
    }
    if (!system || !cs_ref) err.Throw("steps must follow the 'system' and 'cs' headers");
    const std::size_t dot = line.find('.');
    std::size_t number = 0;
    if (dot == std::string_view::npos || !ToNumber(line.substr(0, dot), number)) {
      err.Throw("expected '<k>. <formula> [<justification>]'");
    }
    if (number != steps.size() + 1) {
      err.Throw("expected step number " + std::to_string(steps.size() + 1));
    }
    const std::size_t open = line.rfind('[');
    if (open == std::string_view::npos || open < dot || line.back() != ']') {
      err.Throw("missing '[<justification>]'");
    }
    const std::size_t column = static_cast<std::size_t>(line.data() - raw.data());
    Formula formula = [&] {
      try {
        return ParseFormula(line.substr(dot + 1, open - dot - 1));
      } catch (const ParseError& e) {
        err.Throw(e.what(), column + dot + 1 + e.position());
      }
    }();
    Justification why = ParseJustification(line.substr(open + 1, line.size() - open - 2),
                                           err, column + open + 1);
    steps.push_back({std::move(formula), std::move(why)});
  }
  if (!system) throw ParseError("missing 'system' header", 0);
  if (!cs_ref) throw ParseError("missing 'cs' header", 0);
  return {*system, *cs_ref, std::move(steps)};
}

ConstantSpec ResolveBuiltinCs(std::string_view ref, SystemId sys) {
  if (ref == "total") return ConstantSpec::Total(sys);
  if (ref == "empty") return ConstantSpec::Empty(sys);
  throw std::invalid_argument("cannot resolve constant specification '" +
                              std::string(ref) + "'");
}

Proof LoadProof(std::string_view text, const CsResolver& resolver) {
  ProofFile file = ParseProofFile(text);
  return Proof{file.system, resolver(file.cs_ref, file.system), std::move(file.steps)};
}

std::string FormatJustification(const Justification& why) {
  if (const auto* ax = std::get_if<ByAxiom>(&why)) return std::string(AxiomTagName(ax->tag));
  if (const auto* mp = std::get_if<ByMP>(&why)) {
    return "mp " + std::to_string(mp->major) + " " + std::to_string(mp->minor);
  }
  const auto& an = std::get<ByAN>(why);
  return "an " + PrintTerm(an.constant) + " n=" + std::to_string(an.level) + " : " +
         PrintFormula(an.axiom);
}

std::string FormatProof(const Proof& proof, std::string_view cs_ref) {
  std::string ref(cs_ref);
  if (ref.empty()) {
    if (proof.cs.is_total()) {
      ref = "total";
    } else if (proof.cs.pairs().empty()) {
      ref = "empty";
    } else {
      throw std::invalid_argument("a finite constant specification needs a file reference");
    }
  }
  std::ostringstream out;
  out << "system " << SystemName(proof.system) << "\n";
  out << "cs " << ref << "\n";
  for (std::size_t k = 0; k < proof.steps.size(); ++k) {
    out << (k + 1) << ". " << PrintFormula(proof.steps[k].formula) << "  ["
        << FormatJustification(proof.steps[k].why) << "]\n";
  }
  return out.str();
}

}  // namespace jdl
