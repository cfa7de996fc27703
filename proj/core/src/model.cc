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

#include <algorithm>
#include <set>
#include <sstream>
#include <type_traits>

#include "jdl/proof.h"

namespace jdl {

std::vector<World> WorldSet::members() const {
  std::vector<World> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<World>(std::countr_zero(b)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Universe

Universe::Universe(const FormulaSet& phi, const TermSet& terms)
    : phi_(SubformulaClosure(phi)) {
  TermSet seed = terms;
  for (const Term& t : TermsOf(phi_)) seed.insert(t);
  term_set_ = SubtermClosure(seed);

  formulas_.assign(phi_.begin(), phi_.end());
  std::stable_sort(formulas_.begin(), formulas_.end(),
                   [](const Formula& a, const Formula& b) { return a.depth() < b.depth(); });
  terms_.assign(term_set_.begin(), term_set_.end());
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.size() < b.size(); });

  for (std::size_t i = 0; i < terms_.size(); ++i) term_index_.emplace(terms_[i], i);
  term_nodes_.reserve(terms_.size());
  for (const Term& t : terms_) {
    TermNode node{t.kind()};
    if (t.kind() == Term::Kind::kApp || t.kind() == Term::Kind::kSum) {
      node.left = term_index_.at(t.left());
      node.right = term_index_.at(t.right());
    } else if (t.kind() == Term::Kind::kBang) {
      node.left = term_index_.at(t.inner());
    }
    term_nodes_.push_back(node);
  }

  for (std::size_t i = 0; i < formulas_.size(); ++i) formula_index_.emplace(formulas_[i], i);
  formula_nodes_.reserve(formulas_.size());
  for (std::size_t i = 0; i < formulas_.size(); ++i) {
    const Formula& f = formulas_[i];
    FormulaNode node{f.kind()};
    switch (f.kind()) {
      case Formula::Kind::kAtom:
        atoms_.push_back(i);
        break;
      case Formula::Kind::kFalsum:
        falsum_ = i;
        break;
      case Formula::Kind::kImplies:
        node.left = formula_index_.at(f.antecedent());
        node.right = formula_index_.at(f.consequent());
        implications_.push_back(i);
        if (f.consequent().is_falsum()) negation_pairs_.emplace_back(node.left, i);
        break;
      case Formula::Kind::kHolds:
        node.left = formula_index_.at(f.body());
        node.term = term_index_.at(f.term());
        break;
    }
    formula_nodes_.push_back(node);
  }
}

std::optional<std::size_t> Universe::FormulaIndex(const Formula& f) const {
  auto it = formula_index_.find(f);
  if (it == formula_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Universe::TermIndex(const Term& t) const {
  auto it = term_index_.find(t);
  if (it == term_index_.end()) return std::nullopt;
  return it->second;
}

FormulaOutsideUniverse::FormulaOutsideUniverse(const Formula& f)
    : std::out_of_range("formula-outside-universe: " + PrintFormula(f)) {}

// ---------------------------------------------------------------------------
// SubsetModel

SubsetModel::SubsetModel(std::shared_ptr<const Universe> universe,
                         std::shared_ptr<const std::vector<std::string>> world_names,
                         WorldSet normal, std::vector<WorldSet> given, WorldSet default_true,
                         std::vector<WorldSet> evidence)
    : universe_(std::move(universe)),
      world_names_(std::move(world_names)),
      normal_(normal),
      given_(std::move(given)),
      default_true_(default_true),
      evidence_(std::move(evidence)) {
  Validate();
  ComputeTruth();
}

void SubsetModel::Validate() const {
  const std::size_t n = world_names_->size();
  if (n == 0 || n > kMaxWorlds) {
    throw ModelError("a model needs between 1 and " + std::to_string(kMaxWorlds) + " worlds");
  }
  const WorldSet all = worlds();
  if (normal_.empty()) throw ModelError("the set of normal worlds must not be empty");
  if (!normal_.SubsetOf(all)) throw ModelError("normal worlds outside the model");
  if (!default_true_.SubsetOf(all - normal_)) {
    throw ModelError("default bits only apply to non-normal worlds");
  }
  if (given_.size() != universe_->formulas().size()) {
    throw ModelError("valuation table does not match the formula universe");
  }
  if (evidence_.size() != n * universe_->terms().size()) {
    throw ModelError("evidence table does not match worlds x terms");
  }
  for (WorldSet s : given_) {
    if (!s.SubsetOf(all)) throw ModelError("valuation mentions unknown worlds");
  }
  for (WorldSet s : evidence_) {
    if (!s.SubsetOf(all)) throw ModelError("evidence mentions unknown worlds");
  }
}

void SubsetModel::ComputeTruth() {
  const Universe& u = *universe_;
  const WorldSet all = worlds();
  const WorldSet nonnormal = all - normal_;
  const std::size_t nterms = u.terms().size();
  truth_.assign(u.formulas().size(), WorldSet());
  for (std::size_t i = 0; i < truth_.size(); ++i) {
    const Universe::FormulaNode& node = u.formula_node(i);
    WorldSet at_normal;
    switch (node.kind) {
      case Formula::Kind::kAtom:
        at_normal = given_[i] & normal_;
        break;
      case Formula::Kind::kFalsum:
        break;
      case Formula::Kind::kImplies:
        at_normal = ((all - truth_[node.left]) | truth_[node.right]) & normal_;
        break;
      case Formula::Kind::kHolds: {
        const WorldSet body = truth_[node.left];
        for (World w : normal_.members()) {
          if (evidence_[w * nterms + node.term].SubsetOf(body)) at_normal.insert(w);
        }
        break;
      }
    }
    truth_[i] = (given_[i] & nonnormal) | at_normal;
  }
}

SubsetModel::SubsetModel(const ModelData& data) {
  const std::size_t n = data.world_names.size();
  if (n == 0 || n > kMaxWorlds) {
    throw ModelError("a model needs between 1 and " + std::to_string(kMaxWorlds) + " worlds");
  }
  std::set<std::string> seen;
  for (const std::string& name : data.world_names) {
    if (name.empty() || !seen.insert(name).second) {
      throw ModelError("world names must be unique and non-empty");
    }
  }
  auto universe = std::make_shared<const Universe>(data.phi, data.terms);
  const WorldSet all = WorldSet::FirstN(n);
  if (!data.normal.SubsetOf(all) || !data.default_true.SubsetOf(all)) {
    throw ModelError("unknown world in normal or default set");
  }
  if (data.default_true.Intersects(data.normal)) {
    throw ModelError("default bits only apply to non-normal worlds");
  }
  std::vector<WorldSet> given(universe->formulas().size(), data.default_true);
  for (const auto& [key, bit] : data.val) {
    const auto& [w, f] = key;
    if (w >= n) throw ModelError("val entry for an unknown world");
    if (data.normal.contains(w)) {
      throw ModelError("val entries are only allowed at non-normal worlds");
    }
    auto idx = universe->FormulaIndex(f);
    if (!idx) throw ModelError("val entry outside the formula universe: " + PrintFormula(f));
    WorldSet& s = given[*idx];
    s = bit ? (s | WorldSet::Of({w})) : (s - WorldSet::Of({w}));
  }
  for (const auto& [key, bit] : data.atoms) {
    const auto& [w, f] = key;
    if (w >= n || !data.normal.contains(w)) {
      throw ModelError("atoms entries are only allowed at normal worlds");
    }
    if (!f.is_atom()) throw ModelError("atoms entry for a non-atomic formula");
    auto idx = universe->FormulaIndex(f);
    if (!idx) continue;  // atoms outside the universe never matter
    if (bit) given[*idx].insert(w);
  }
  const std::size_t nterms = universe->terms().size();
  std::vector<WorldSet> evidence(n * nterms);
  for (const auto& [key, set] : data.evidence) {
    const auto& [w, t] = key;
    if (w >= n) throw ModelError("evidence entry for an unknown world");
    auto idx = universe->TermIndex(t);
    if (!idx) throw ModelError("evidence entry outside the term universe: " + PrintTerm(t));
    evidence[w * nterms + *idx] = set;
  }
  *this = SubsetModel(std::move(universe),
                      std::make_shared<const std::vector<std::string>>(data.world_names),
                      data.normal, std::move(given), data.default_true, std::move(evidence));
}

std::optional<World> SubsetModel::WorldByName(std::string_view name) const {
  for (std::size_t i = 0; i < world_names_->size(); ++i) {
    if ((*world_names_)[i] == name) return static_cast<World>(i);
  }
  return std::nullopt;
}

std::size_t SubsetModel::IndexOrThrow(const Formula& f) const {
  auto idx = universe_->FormulaIndex(f);
  if (!idx) throw FormulaOutsideUniverse(f);
  return *idx;
}

bool SubsetModel::Eval(World w, const Formula& f) const {
  if (w >= world_count()) throw std::out_of_range("unknown world");
  return truth_[IndexOrThrow(f)].contains(w);
}

WorldSet SubsetModel::TruthSet(const Formula& f) const { return truth_[IndexOrThrow(f)]; }

bool SubsetModel::HoldsAtAllNormal(const Formula& f) const {
  return normal_.SubsetOf(TruthSet(f));
}

WorldSet SubsetModel::Evidence(World w, const Term& t) const {
  if (w >= world_count()) throw std::out_of_range("unknown world");
  auto idx = universe_->TermIndex(t);
  if (!idx) throw std::out_of_range("term outside the term universe: " + PrintTerm(t));
  return evidence_at(w, *idx);
}

FormulaSet SubsetModel::AppSet(World w, const Term& s, const Term& t) const {
  const WorldSet es = Evidence(w, s);
  const WorldSet et = Evidence(w, t);
  FormulaSet out;
  for (std::size_t i : universe_->implications()) {
    const Universe::FormulaNode& node = universe_->formula_node(i);
    if (es.SubsetOf(truth_[i]) && et.SubsetOf(truth_[node.left])) {
      out.insert(universe_->formulas()[node.right]);
    }
  }
  return out;
}

WorldSet SubsetModel::ConsistentWorlds() const {
  if (auto f = universe_->falsum()) return worlds() - truth_[*f];
  return worlds() - default_true_;
}

WorldSet SubsetModel::ConflictFreeWorlds() const {
  WorldSet bad;
  for (const auto& [a, neg] : universe_->negation_pairs()) bad |= truth_[a] & truth_[neg];
  return worlds() - bad;
}

ModelData SubsetModel::ToData() const {
  const Universe& u = *universe_;
  ModelData data;
  data.world_names = *world_names_;
  data.normal = normal_;
  data.phi = u.phi();
  data.terms = u.term_set();
  data.default_true = default_true_;
  const WorldSet nonnormal = worlds() - normal_;
  for (std::size_t i = 0; i < u.formulas().size(); ++i) {
    for (World w : nonnormal.members()) {
      const bool bit = given_[i].contains(w);
      if (bit != default_true_.contains(w)) data.val[{w, u.formulas()[i]}] = bit;
    }
  }
  for (std::size_t i : u.atoms()) {
    for (World w : (given_[i] & normal_).members()) data.atoms[{w, u.formulas()[i]}] = true;
  }
  for (World w = 0; w < world_count(); ++w) {
    for (std::size_t t = 0; t < u.terms().size(); ++t) {
      const WorldSet e = evidence_at(w, t);
      if (normal_.contains(w) || !e.empty()) data.evidence[{w, u.terms()[t]}] = e;
    }
  }
  return data;
}

// ---------------------------------------------------------------------------
// Well-formedness

std::string_view ModelClassName(ModelClass cls) {
  switch (cls) {
    case ModelClass::kGeneral: return "general";
    case ModelClass::kDArbitrary: return "d";
    case ModelClass::kNoC: return "noc";
  }
  return "?";
}

std::optional<ModelClass> ParseModelClassName(std::string_view name) {
  for (ModelClass cls : {ModelClass::kGeneral, ModelClass::kDArbitrary, ModelClass::kNoC}) {
    if (ModelClassName(cls) == name) return cls;
  }
  if (name == "darbitrary") return ModelClass::kDArbitrary;
  return std::nullopt;
}

std::string_view ConditionName(Condition c) {
  switch (c) {
    case Condition::kSum: return "sum";
    case Condition::kApplication: return "application";
    case Condition::kSerial: return "serial";
    case Condition::kConstantSpec: return "cs";
    case Condition::kLanguage: return "language";
  }
  return "?";
}

namespace {

// If f is !^level c : ... : !c : c : A, returns A.
std::optional<Formula> PeelTower(const Formula& f, const Term& c, std::uint32_t level) {
  const Formula* cur = &f;
  for (std::uint32_t k = level;; --k) {
    if (!cur->is_holds() || cur->term() != BangTower(c, k)) return std::nullopt;
    if (k == 0) return cur->body();
    cur = &cur->body();
  }
}

}  // namespace

Auditor::Auditor(std::shared_ptr<const Universe> universe, ModelClass cls, ConstantSpec cs,
                 SystemId sys)
    : universe_(std::move(universe)), cls_(cls), cs_(std::move(cs)), sys_(sys) {
  if (cs_.system() != sys_) {
    throw std::invalid_argument("constant specification belongs to " +
                                std::string(SystemName(cs_.system())) + ", not " +
                                std::string(SystemName(sys_)));
  }
  const Universe& u = *universe_;
  for (std::size_t i = 0; i < u.terms().size(); ++i) {
    const Universe::TermNode& node = u.term_node(i);
    if (node.kind == Term::Kind::kSum) {
      sums_.push_back({i, node.left, node.right});
      if (!HasSum(sys_)) sum_terms_outside_language_.push_back(i);
    } else if (node.kind == Term::Kind::kApp) {
      apps_.push_back({i, node.left, node.right});
    }
    // Constants and !-towers over constants carry specification duties.
    std::uint32_t level = 0;
    const Term* base = &u.terms()[i];
    while (base->kind() == Term::Kind::kBang) {
      base = &base->inner();
      ++level;
    }
    if (!base->is_constant()) continue;
    for (std::size_t f = 0; f < u.formulas().size(); ++f) {
      if (level == 0) {
        if (cs_.Contains(*base, u.formulas()[f])) cs_obligations_.emplace_back(i, f);
      } else if (auto a = PeelTower(u.formulas()[f], *base, level - 1)) {
        if (cs_.Contains(*base, *a)) cs_obligations_.emplace_back(i, f);
      }
    }
  }
}

template <typename Sink>
void Auditor::Run(const SubsetModel& m, Sink&& sink) const {
  const Universe& u = *universe_;
  if (m.shared_universe() != universe_ &&
      (m.universe().phi() != u.phi() || m.universe().term_set() != u.term_set())) {
    throw std::invalid_argument("model and auditor use different universes");
  }
  const WorldSet normal = m.normal();
  if (!sum_terms_outside_language_.empty()) {
    Violation v{Condition::kLanguage, normal.members().front(), {}, {}};
    for (std::size_t t : sum_terms_outside_language_) v.terms.push_back(u.terms()[t]);
    if (!sink(std::move(v))) return;
  }
  WorldSet serial_target;
  switch (cls_) {
    case ModelClass::kGeneral: serial_target = normal; break;
    case ModelClass::kDArbitrary: serial_target = m.ConsistentWorlds(); break;
    case ModelClass::kNoC: serial_target = m.ConflictFreeWorlds(); break;
  }
  const WorldSet all = m.worlds();
  for (World w : normal.members()) {
    for (const Binary& b : sums_) {
      if (!m.evidence_at(w, b.whole).SubsetOf(m.evidence_at(w, b.left) &
                                               m.evidence_at(w, b.right))) {
        if (!sink(Violation{Condition::kSum, w, {u.terms()[b.whole]}, {}})) return;
      }
    }
    for (const Binary& b : apps_) {
      const WorldSet es = m.evidence_at(w, b.left);
      const WorldSet et = m.evidence_at(w, b.right);
      const WorldSet whole = m.evidence_at(w, b.whole);
      std::vector<Formula> failing;
      for (std::size_t i : u.implications()) {
        const Universe::FormulaNode& node = u.formula_node(i);
        if (es.SubsetOf(m.truth_at(i)) && et.SubsetOf(m.truth_at(node.left)) &&
            !whole.SubsetOf(m.truth_at(node.right))) {
          failing.push_back(u.formulas()[node.right]);
        }
      }
      if (!failing.empty()) {
        std::sort(failing.begin(), failing.end());
        failing.erase(std::unique(failing.begin(), failing.end()), failing.end());
        if (!sink(Violation{Condition::kApplication, w, {u.terms()[b.whole]},
                            std::move(failing)})) {
          return;
        }
      }
    }
    for (std::size_t t = 0; t < u.terms().size(); ++t) {
      if (!m.evidence_at(w, t).Intersects(serial_target & all)) {
        if (!sink(Violation{Condition::kSerial, w, {u.terms()[t]}, {}})) return;
      }
    }
    for (const auto& [t, f] : cs_obligations_) {
      if (!m.evidence_at(w, t).SubsetOf(m.truth_at(f))) {
        if (!sink(Violation{Condition::kConstantSpec, w, {u.terms()[t]}, {u.formulas()[f]}})) {
          return;
        }
      }
    }
  }
}

WellFormedReport Auditor::Audit(const SubsetModel& m) const {
  WellFormedReport report;
  Run(m, [&](Violation&& v) {
    report.violations.push_back(std::move(v));
    return true;
  });
  return report;
}

bool Auditor::Passes(const SubsetModel& m) const {
  bool ok = true;
  Run(m, [&](Violation&&) {
    ok = false;
    return false;
  });
  return ok;
}

WellFormedReport CheckWellFormed(const SubsetModel& m, ModelClass cls, const ConstantSpec& cs,
                                 SystemId sys) {
  return Auditor(m.shared_universe(), cls, cs, sys).Audit(m);
}

FormulaSet Project(const FormulaSet& gamma, const Term& t) {
  FormulaSet out;
  for (const Formula& f : gamma) {
    if (f.is_holds() && f.term() == t) out.insert(f.body());
  }
  return out;
}

SubsetModel BuildJdCountermodel(const Term& t, const FormulaSet& extra_formulas,
                              const TermSet& extra_terms) {
  FormulaSet seed = extra_formulas;
  seed.insert(Formula::Holds(t, Formula::Falsum()));
  seed.insert(AxiomNoc(t, Formula::Atom(1)));
  ModelData data;
  data.world_names = {"omega", "nu"};
  data.normal = WorldSet::Of({0});
  data.phi = SubformulaClosure(seed);
  TermSet terms = extra_terms;
  terms.insert(t);
  for (const Term& s : TermsOf(data.phi)) terms.insert(s);
  data.terms = SubtermClosure(terms);
  data.val[{1, Formula::Falsum()}] = true;
  for (const Term& s : data.terms) data.evidence[{0, s}] = WorldSet::Of({1});
  return SubsetModel(data);
}

// ---------------------------------------------------------------------------
// Model file

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits off the first whitespace-delimited word.
std::pair<std::string_view, std::string_view> NextWord(std::string_view s) {
  s = Trim(s);
  const auto space = s.find_first_of(" \t");
  if (space == std::string_view::npos) return {s, {}};
  return {s.substr(0, space), Trim(s.substr(space))};
}

bool IsKeyword(std::string_view w) {
  return w == "worlds" || w == "normal" || w == "phi" || w == "terms" || w == "default" ||
         w == "val" || w == "atoms" || w == "E";
}

class ModelFileParser {
 public:
  ModelData Parse(std::string_view text) {
    enum class Section { kNone, kPhi, kTerms } section = Section::kNone;
    std::size_t offset = 0;
    while (offset <= text.size()) {
      const std::size_t end = std::min(text.find('\n', offset), text.size());
      const std::string_view line = Trim(text.substr(offset, end - offset));
      line_offset_ = offset;
      offset = end + 1;
      ++line_no_;
      if (line.empty() || line.front() == '#') continue;
      auto [word, rest] = NextWord(line);
      if (!IsKeyword(word)) {
        if (section == Section::kPhi) {
          data_.phi.insert(Wrap([&] { return ParseFormula(line); }));
        } else if (section == Section::kTerms) {
          data_.terms.insert(Wrap([&] { return ParseTerm(line); }));
        } else {
          Fail("unknown directive '" + std::string(word) + "'");
        }
        continue;
      }
      section = Section::kNone;
      if (word == "worlds") {
        if (!data_.world_names.empty()) Fail("duplicate 'worlds' line");
        for (auto [w, r] = NextWord(rest); !w.empty(); std::tie(w, r) = NextWord(r)) {
          if (names_.contains(std::string(w))) Fail("duplicate world '" + std::string(w) + "'");
          names_.emplace(std::string(w), static_cast<World>(data_.world_names.size()));
          data_.world_names.emplace_back(w);
        }
        if (data_.world_names.empty()) Fail("'worlds' needs at least one name");
        if (data_.world_names.size() > kMaxWorlds) Fail("too many worlds");
      } else if (word == "normal") {
        for (auto [w, r] = NextWord(rest); !w.empty(); std::tie(w, r) = NextWord(r)) {
          data_.normal.insert(WorldNamed(w));
        }
      } else if (word == "phi") {
        section = Section::kPhi;
      } else if (word == "terms") {
        section = Section::kTerms;
      } else if (word == "default") {
        auto [w, bit] = NextWord(rest);
        const World world = WorldNamed(w);
        if (Bit(bit)) data_.default_true.insert(world);
      } else if (word == "val" || word == "atoms") {
        auto [w, r] = NextWord(rest);
        const World world = WorldNamed(w);
        const auto last_space = r.find_last_of(" \t");
        if (last_space == std::string_view::npos) Fail("expected '<formula> <0|1>'");
        const bool bit = Bit(r.substr(last_space + 1));
        const std::string_view body = Trim(r.substr(0, last_space));
        Formula f = Wrap([&] { return ParseFormula(body); });
        auto& table = word == "val" ? data_.val : data_.atoms;
        table[{world, std::move(f)}] = bit;
      } else {  // E
        auto [w, r] = NextWord(rest);
        const World world = WorldNamed(w);
        const auto brace = r.find('{');
        if (brace == std::string_view::npos || r.back() != '}') {
          Fail("expected '<term> {<world>,...}'");
        }
        Term t = Wrap([&] { return ParseTerm(r.substr(0, brace)); });
        WorldSet set;
        std::string_view inside = r.substr(brace + 1, r.size() - brace - 2);
        while (!Trim(inside).empty()) {
          const auto comma = inside.find(',');
          set.insert(WorldNamed(Trim(inside.substr(0, comma))));
          if (comma == std::string_view::npos) break;
          inside = inside.substr(comma + 1);
        }
        data_.evidence[{world, std::move(t)}] = set;
      }
    }
    if (data_.world_names.empty()) throw ParseError("missing 'worlds' line", 0);
    return std::move(data_);
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + message, line_offset_);
  }

  template <typename F>
  std::invoke_result_t<F> Wrap(F&& f) const {
    try {
      return f();
    } catch (const ParseError& e) {
      Fail(e.what());
    }
  }

  World WorldNamed(std::string_view name) const {
    if (data_.world_names.empty()) Fail("'worlds' must come first");
    auto it = names_.find(std::string(name));
    if (it == names_.end()) Fail("unknown world '" + std::string(name) + "'");
    return it->second;
  }

  bool Bit(std::string_view s) const {
    s = Trim(s);
    if (s == "0") return false;
    if (s == "1") return true;
    Fail("expected 0 or 1");
  }

  ModelData data_;
  std::map<std::string, World> names_;
  std::size_t line_no_ = 0;
  std::size_t line_offset_ = 0;
};

std::string FormatWorldSet(const SubsetModel& m, WorldSet s) {
  std::string out = "{";
  bool first = true;
  for (World w : s.members()) {
    if (!first) out += ',';
    out += m.world_names()[w];
    first = false;
  }
  return out + "}";
}

}  // namespace

ModelData ParseModelFile(std::string_view text) { return ModelFileParser().Parse(text); }

std::string FormatModel(const SubsetModel& m) {
  const Universe& u = m.universe();
  const WorldSet nonnormal = m.worlds() - m.normal();
  std::ostringstream out;
  out << "worlds";
  for (const std::string& name : m.world_names()) out << ' ' << name;
  out << "\nnormal";
  for (World w : m.normal().members()) out << ' ' << m.world_names()[w];
  out << "\nphi\n";
  for (const Formula& f : u.formulas()) out << PrintFormula(f) << '\n';
  out << "terms\n";
  for (const Term& t : u.terms()) out << PrintTerm(t) << '\n';
  for (World w : nonnormal.members()) {
    const bool def = m.default_true().contains(w);
    out << "default " << m.world_names()[w] << ' ' << (def ? 1 : 0) << '\n';
    for (std::size_t i = 0; i < u.formulas().size(); ++i) {
      const bool bit = m.given_at(i).contains(w);
      if (bit != def) {
        out << "val " << m.world_names()[w] << ' ' << PrintFormula(u.formulas()[i]) << ' '
            << (bit ? 1 : 0) << '\n';
      }
    }
  }
  for (World w : m.normal().members()) {
    for (std::size_t i : u.atoms()) {
      if (m.given_at(i).contains(w)) {
        out << "atoms " << m.world_names()[w] << ' ' << PrintFormula(u.formulas()[i]) << " 1\n";
      }
    }
  }
  for (World w = 0; w < m.world_count(); ++w) {
    for (std::size_t t = 0; t < u.terms().size(); ++t) {
      const WorldSet e = m.evidence_at(w, t);
      if (m.normal().contains(w) || !e.empty()) {
        out << "E " << m.world_names()[w] << ' ' << PrintTerm(u.terms()[t]) << ' '
            << FormatWorldSet(m, e) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace jdl
