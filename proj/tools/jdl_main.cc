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

// jdl: batch front end for the proof checker, the derivation builders, the
// model auditor and the bounded model search.
//
// Exit codes: 0 accepted / well-formed / found, 1 rejected / violations /
// none, 2 usage or format error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jdl/axioms.h"
#include "jdl/derive.h"
#include "jdl/model.h"
#include "jdl/proof.h"
#include "jdl/search.h"
#include "jdl/syntax.h"
#include "json.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Thrown for unreadable files and bad flag values; reported with exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Relative CS references are resolved against the directory of the file
// that names them (the working directory for stdin).
jdl::CsResolver FileResolver(const std::string& origin) {
  const fs::path base = origin == "-" ? fs::path() : fs::path(origin).parent_path();
  return [base](std::string_view ref, jdl::SystemId sys) {
    if (ref == "total" || ref == "empty") return jdl::ResolveBuiltinCs(ref, sys);
    fs::path p(ref);
    if (p.is_relative()) p = base / p;
    return jdl::ParseConstantSpec(ReadInput(p.string()), sys);
  };
}

jdl::SystemId SystemFlag(const std::string& name) {
  auto sys = jdl::ParseSystemName(name);
  if (!sys) throw UsageError("unknown system '" + name + "'");
  return *sys;
}

jdl::ModelClass ClassFlag(const std::string& name) {
  auto cls = jdl::ParseModelClassName(name);
  if (!cls) throw UsageError("unknown model class '" + name + "'");
  return *cls;
}

json ViolationJson(const jdl::SubsetModel& m, const jdl::Violation& v) {
  json terms = json::array();
  for (const jdl::Term& t : v.terms) terms.push_back(jdl::PrintTerm(t));
  json formulas = json::array();
  for (const jdl::Formula& f : v.formulas) formulas.push_back(jdl::PrintFormula(f));
  return {{"condition", jdl::ConditionName(v.condition)},
          {"world", m.world_names()[v.world]},
          {"terms", terms},
          {"formulas", formulas}};
}

std::string ViolationText(const jdl::SubsetModel& m, const jdl::Violation& v) {
  std::string out = std::string(jdl::ConditionName(v.condition)) + " at " +
                    m.world_names()[v.world];
  for (const jdl::Term& t : v.terms) out += " " + jdl::PrintTerm(t);
  for (const jdl::Formula& f : v.formulas) out += " [" + jdl::PrintFormula(f) + "]";
  return out;
}

struct Options {
  bool json = false;

  // check / internalize
  std::string proof_file = "-";
  std::string system;
  std::string cs;

  // derive
  std::string lemma;
  std::vector<std::string> derive_terms;
  std::string term = "x1";
  std::string formula = "P1";
  std::string atom = "P1";

  // model
  std::string model_file;
  std::string model_class = "general";
  std::string world;

  // search
  std::vector<std::string> goals;
  std::vector<std::string> phi;
  std::vector<std::string> terms;
  std::string phi_file;
  std::size_t max_worlds = 2;
  std::size_t max_normal = 0;
  unsigned threads = 1;
};

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  int Check() {
    const std::string text = ReadInput(o_.proof_file);
    jdl::ProofFile file = jdl::ParseProofFile(text);
    const jdl::SystemId sys = o_.system.empty() ? file.system : SystemFlag(o_.system);
    const std::string ref = o_.cs.empty() ? file.cs_ref : o_.cs;
    jdl::Proof proof{sys, FileResolver(o_.proof_file)(ref, sys), std::move(file.steps)};
    const jdl::Verdict v = jdl::CheckProof(proof);
    record_["steps"] = proof.steps.size();
    record_["system"] = jdl::SystemName(sys);
    if (v.accepted) {
      record_["status"] = "accepted";
      record_["conclusion"] = jdl::PrintFormula(proof.conclusion());
      Say("accepted: " + jdl::PrintFormula(proof.conclusion()));
      return kOk;
    }
    record_["status"] = "rejected";
    record_["step"] = v.step;
    record_["reason"] = jdl::RejectReasonCode(v.reason);
    record_["detail"] = v.detail;
    Say("rejected: step " + std::to_string(v.step) + ": " +
        std::string(jdl::RejectReasonCode(v.reason)) + " (" + v.detail + ")");
    return kNegative;
  }

  int Derive() {
    const std::string cs_ref = o_.cs.empty() ? "empty" : o_.cs;
    auto make_cs = [&](jdl::SystemId sys) { return FileResolver("")(cs_ref, sys); };
    auto system_or = [&](jdl::SystemId fallback) {
      return o_.system.empty() ? fallback : SystemFlag(o_.system);
    };
    // --term gives t, or s then t for the two-term lemmas.
    const std::vector<std::string>& given = o_.derive_terms;
    if (given.size() > 2) throw UsageError("at most two --term values");
    const jdl::Term first = jdl::ParseTerm(given.empty() ? "x1" : given[0]);
    const jdl::Term second = jdl::ParseTerm(given.size() < 2 ? "x2" : given[1]);
    const jdl::Term& t = first;
    jdl::Proof proof = [&] {
      if (o_.lemma == "interconsistency") {
        return jdl::DeriveInterconsistency(first, second,
                                           jdl::ParseFormula(o_.formula),
                                           make_cs(system_or(jdl::SystemId::kJD)));
      }
      if (o_.lemma == "noc-in-jd") {
        return jdl::DeriveNocInJd(t, jdl::ParseFormula(o_.formula),
                                  make_cs(system_or(jdl::SystemId::kJD)));
      }
      if (o_.lemma == "interconsistency-jnoc") {
        return jdl::DeriveInterconsistencyJNoC(first, second,
                                               jdl::ParseFormula(o_.formula),
                                               make_cs(system_or(jdl::SystemId::kJNoC)));
      }
      if (o_.lemma == "jd-in-jnoc") {
        const jdl::Formula atom = jdl::ParseFormula(o_.atom);
        if (!atom.is_atom()) throw UsageError("--atom must be a propositional letter");
        return jdl::DeriveJdInJNoC(t, atom, make_cs(system_or(jdl::SystemId::kJNoC)));
      }
      if (o_.lemma == "jd-in-jnocplus") {
        return jdl::DeriveJdInJNoCPlus(t, make_cs(system_or(jdl::SystemId::kJNoCPlus)));
      }
      throw UsageError("unknown lemma '" + o_.lemma + "'");
    }();
    const std::string text = jdl::FormatProof(proof, cs_ref);
    record_["status"] = "derived";
    record_["proof"] = text;
    record_["steps"] = proof.steps.size();
    record_["conclusion"] = jdl::PrintFormula(proof.conclusion());
    Emit(text);
    return kOk;
  }

  int Internalize() {
    const std::string text = ReadInput(o_.proof_file);
    jdl::ProofFile file = jdl::ParseProofFile(text);
    const std::string ref = o_.cs.empty() ? file.cs_ref : o_.cs;
    jdl::Proof proof{file.system, FileResolver(o_.proof_file)(ref, file.system),
                     std::move(file.steps)};
    jdl::Internalized out = jdl::Internalize(proof);
    const std::string rendered = jdl::FormatProof(out.proof, ref);
    record_["status"] = "derived";
    record_["term"] = jdl::PrintTerm(out.term);
    record_["conclusion"] = jdl::PrintFormula(out.proof.conclusion());
    record_["proof"] = rendered;
    Emit(rendered);
    return kOk;
  }

  int ModelCheck() {
    const jdl::SubsetModel m = LoadModel();
    const jdl::SystemId sys = o_.system.empty() ? jdl::SystemId::kJD : SystemFlag(o_.system);
    const std::string cs_ref = o_.cs.empty() ? "empty" : o_.cs;
    const jdl::ConstantSpec cs = FileResolver(o_.model_file)(cs_ref, sys);
    const jdl::WellFormedReport report =
        jdl::CheckWellFormed(m, ClassFlag(o_.model_class), cs, sys);
    json violations = json::array();
    for (const jdl::Violation& v : report.violations) {
      violations.push_back(ViolationJson(m, v));
      Say(ViolationText(m, v));
    }
    record_["violations"] = violations;
    record_["status"] = report.ok() ? "well-formed" : "violations";
    Say(report.ok() ? "well-formed" : std::to_string(report.violations.size()) + " violation(s)");
    return report.ok() ? kOk : kNegative;
  }

  int ModelEval() {
    const jdl::SubsetModel m = LoadModel();
    const jdl::Formula f = jdl::ParseFormula(o_.formula);
    bool value = false;
    if (o_.world.empty()) {
      value = m.HoldsAtAllNormal(f);
      record_["scope"] = "all-normal";
    } else {
      auto w = m.WorldByName(o_.world);
      if (!w) throw UsageError("unknown world '" + o_.world + "'");
      value = m.Eval(*w, f);
      record_["scope"] = o_.world;
    }
    record_["status"] = "evaluated";
    record_["value"] = value;
    Say(value ? "1" : "0");
    return kOk;
  }

  int ModelJdCountermodel() {
    const jdl::SubsetModel m = jdl::BuildJdCountermodel(jdl::ParseTerm(o_.term));
    const std::string text = jdl::FormatModel(m);
    record_["status"] = "built";
    record_["model"] = text;
    Emit(text);
    return kOk;
  }

  int Search(bool witness) {
    jdl::FormulaSet targets;
    for (const std::string& g : o_.goals) targets.insert(jdl::ParseFormula(g));
    if (!witness && targets.size() != 1) throw UsageError("give exactly one --formula");
    jdl::SearchBounds b;
    b.max_worlds = o_.max_worlds;
    b.max_normal = o_.max_normal == 0 ? o_.max_worlds : o_.max_normal;
    b.threads = o_.threads;
    b.phi = targets;
    for (const std::string& f : o_.phi) b.phi.insert(jdl::ParseFormula(f));
    if (!o_.phi_file.empty()) {
      std::istringstream in(ReadInput(o_.phi_file));
      for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        b.phi.insert(jdl::ParseFormula(line));
      }
    }
    for (const std::string& t : o_.terms) b.terms.insert(jdl::ParseTerm(t));
    const jdl::SystemId sys = o_.system.empty() ? jdl::SystemId::kJD : SystemFlag(o_.system);
    const std::string cs_ref = o_.cs.empty() ? "empty" : o_.cs;
    const jdl::ConstantSpec cs = FileResolver("")(cs_ref, sys);
    const jdl::ModelClass cls = ClassFlag(o_.model_class);
    const jdl::SearchResult r =
        witness ? jdl::FindWitness(targets, cls, sys, cs, b)
                : jdl::FindCountermodel(*targets.begin(), cls, sys, cs, b);
    record_["space"] = r.space;
    if (!r) {
      record_["status"] = "none";
      Emit("NONE " + std::to_string(r.space) + "\n");
      return kNegative;
    }
    const std::string text = jdl::FormatModel(*r.model);
    record_["status"] = "found";
    record_["ordinal"] = r.ordinal;
    record_["model"] = text;
    Emit(text);
    return kOk;
  }

  json& record() { return record_; }

 private:
  jdl::SubsetModel LoadModel() {
    return jdl::SubsetModel(jdl::ParseModelFile(ReadInput(o_.model_file)));
  }

  // Artifacts go to stdout in text mode.
  void Emit(const std::string& text) const {
    if (!o_.json) std::cout << text;
  }
  void Say(const std::string& line) const {
    if (!o_.json) std::cout << line << '\n';
  }

  const Options& o_;
  json record_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jdl: justification deontic logic workbench"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print one JSON record instead of text");

  auto add_cs = [&](CLI::App* sub) {
    sub->add_option("--system", o.system, "jd, jnoc, jnoc-minus or jnoc-plus");
    sub->add_option("--cs", o.cs, "total, empty or a constant specification file");
  };

  auto* check = app.add_subcommand("check", "Check a proof file");
  check->add_option("file", o.proof_file, "Proof file, or - for stdin");
  add_cs(check);

  auto* derive = app.add_subcommand("derive", "Print a derivation as a proof file");
  derive->add_option("lemma", o.lemma,
                     "interconsistency, noc-in-jd, interconsistency-jnoc, jd-in-jnoc, "
                     "jd-in-jnocplus")
      ->required();
  derive->add_option("--term", o.derive_terms,
                     "Term t; the interconsistency lemmas take s then t (default x1, x2)");
  derive->add_option("--formula", o.formula, "Formula A");
  derive->add_option("--atom", o.atom, "Propositional letter for jd-in-jnoc");
  add_cs(derive);

  auto* internalize = app.add_subcommand("internalize", "Internalize an accepted proof");
  internalize->add_option("file", o.proof_file, "Proof file, or - for stdin");
  internalize->add_option("--cs", o.cs, "Override the proof's constant specification");

  auto* model = app.add_subcommand("model", "Audit or evaluate a model file");
  model->require_subcommand(1);
  auto* model_check = model->add_subcommand("check", "Audit the well-formedness conditions");
  model_check->add_option("file", o.model_file)->required();
  model_check->add_option("--class", o.model_class, "general, d or noc");
  add_cs(model_check);
  auto* model_eval = model->add_subcommand("eval", "Evaluate a formula");
  model_eval->add_option("file", o.model_file)->required();
  model_eval->add_option("formula,--formula", o.formula)->required();
  model_eval->add_option("--at,--world", o.world, "World name; omitted means all normal worlds");
  auto* model_jd_countermodel = model->add_subcommand("jd-countermodel", "Print the two-world NoC model");
  model_jd_countermodel->add_option("--term", o.term, "Term t");

  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--class", o.model_class, "general, d or noc");
    add_cs(sub);
    sub->add_option("--max-worlds", o.max_worlds)->check(CLI::Range(1, 64));
    sub->add_option("--max-normal", o.max_normal, "Defaults to --max-worlds");
    sub->add_option("--phi", o.phi, "Extra formula for the universe (repeatable)");
    sub->add_option("--phi-file", o.phi_file, "One formula per line");
    sub->add_option("--term", o.terms, "Extra term for the universe (repeatable)");
    sub->add_option("--threads", o.threads)->check(CLI::Range(1, 256));
  };
  auto* search = app.add_subcommand("search", "Bounded model search");
  search->require_subcommand(1);
  auto* counter = search->add_subcommand("counter", "First countermodel to a formula");
  counter->add_option("--formula", o.goals)->required()->expected(1);
  add_search(counter);
  auto* witness = search->add_subcommand("witness", "First model satisfying goals at a normal world");
  witness->add_option("--goal", o.goals, "Goal formula (repeatable)");
  add_search(witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Runner runner(o);
  std::string command;
  int code = kUsage;
  try {
    if (*check) {
      command = "check";
      code = runner.Check();
    } else if (*derive) {
      command = "derive";
      code = runner.Derive();
    } else if (*internalize) {
      command = "internalize";
      code = runner.Internalize();
    } else if (*model_check) {
      command = "model check";
      code = runner.ModelCheck();
    } else if (*model_eval) {
      command = "model eval";
      code = runner.ModelEval();
    } else if (*model_jd_countermodel) {
      command = "model jd-countermodel";
      code = runner.ModelJdCountermodel();
    } else if (*counter) {
      command = "search counter";
      code = runner.Search(false);
    } else if (*witness) {
      command = "search witness";
      code = runner.Search(true);
    }
  } catch (const jdl::DeriveError& e) {
    runner.record()["status"] = "error";
    runner.record()["error"] = std::string(jdl::DeriveErrorName(e.code()));
    runner.record()["detail"] = e.what();
    std::cerr << "jdl: " << e.what() << '\n';
    code = kNegative;
  } catch (const jdl::ParseError& e) {
    runner.record()["status"] = "error";
    runner.record()["error"] = "parse";
    runner.record()["position"] = e.position();
    runner.record()["detail"] = e.what();
    std::cerr << "jdl: parse error at " << e.position() << ": " << e.what() << '\n';
    code = kUsage;
  } catch (const std::exception& e) {
    runner.record()["status"] = "error";
    runner.record()["error"] = "usage";
    runner.record()["detail"] = e.what();
    std::cerr << "jdl: " << e.what() << '\n';
    code = kUsage;
  }
  if (o.json) {
    json& rec = runner.record();
    rec["command"] = command;
    rec["exit_code"] = code;
    std::cout << rec.dump() << '\n';
  }
  return code;
}
