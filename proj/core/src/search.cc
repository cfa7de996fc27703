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

#include "jdl/search.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace jdl {
namespace {

constexpr std::uint64_t kBlock = 4096;

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::invalid_argument("search space does not fit in 64 bits");
  }
  return out;
}

std::uint64_t CheckedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::invalid_argument("search space does not fit in 64 bits");
  }
  return out;
}

struct Segment {
  std::size_t n = 0;
  WorldSet normal;
  std::vector<World> normal_worlds;
  std::vector<World> other_worlds;
  std::vector<WorldSet> candidates;
  std::uint64_t first = 0;
  std::uint64_t size = 0;
};

class Space {
 public:
  explicit Space(const SearchBounds& b)
      : universe_(std::make_shared<const Universe>(b.phi, b.terms)) {
    if (b.max_normal < 1 || b.max_normal > b.max_worlds || b.max_worlds > kMaxWorlds) {
      throw std::invalid_argument("bounds need 1 <= max_normal <= max_worlds <= " +
                                  std::to_string(kMaxWorlds));
    }
    const Universe& u = *universe_;
    const std::uint64_t nphi = u.formulas().size();
    const std::uint64_t natoms = u.atoms().size();
    const std::uint64_t nterms = u.terms().size();
    for (std::size_t n = 1; n <= b.max_worlds; ++n) {
      auto names = std::make_shared<std::vector<std::string>>();
      for (std::size_t w = 0; w < n; ++w) names->push_back("w" + std::to_string(w));
      names_.push_back(std::move(names));

      const WorldSet all = WorldSet::FirstN(n);
      std::vector<WorldSet> candidates;
      if (b.evidence_candidates) {
        for (WorldSet s : *b.evidence_candidates) {
          if (s.SubsetOf(all)) candidates.push_back(s);
        }
      } else {
        if (n > 20) throw std::invalid_argument("search space does not fit in 64 bits");
        for (std::uint64_t bits = 0; bits <= all.bits(); ++bits) {
          candidates.emplace_back(bits);
        }
      }
      if (n >= 64) throw std::invalid_argument("search space does not fit in 64 bits");
      for (std::uint64_t mask = 1; mask <= all.bits(); ++mask) {
        const WorldSet normal(mask);
        if (normal.size() > b.max_normal) continue;
        Segment seg;
        seg.n = n;
        seg.normal = normal;
        seg.normal_worlds = normal.members();
        seg.other_worlds = (all - normal).members();
        seg.candidates = candidates;
        std::uint64_t size = 1;
        const std::uint64_t bits = seg.other_worlds.size() * nphi + seg.normal_worlds.size() * natoms;
        if (bits >= 64) throw std::invalid_argument("search space does not fit in 64 bits");
        size = std::uint64_t{1} << bits;
        for (std::size_t k = 0; k < seg.normal_worlds.size() * nterms; ++k) {
          size = CheckedMul(size, candidates.size());
        }
        seg.first = total_;
        seg.size = size;
        total_ = CheckedAdd(total_, size);
        segments_.push_back(std::move(seg));
      }
    }
  }

  const std::shared_ptr<const Universe>& universe() const { return universe_; }
  std::uint64_t total() const { return total_; }

  SubsetModel Build(std::uint64_t ordinal) const {
    auto it = std::upper_bound(segments_.begin(), segments_.end(), ordinal,
                               [](std::uint64_t o, const Segment& s) { return o < s.first; });
    const Segment& seg = *std::prev(it);
    std::uint64_t code = ordinal - seg.first;
    const Universe& u = *universe_;
    const std::size_t nphi = u.formulas().size();
    const std::size_t nterms = u.terms().size();

    std::vector<WorldSet> given(nphi);
    for (World w : seg.other_worlds) {
      for (std::size_t i = 0; i < nphi; ++i) {
        if (code & 1U) given[i].insert(w);
        code >>= 1;
      }
    }
    for (World w : seg.normal_worlds) {
      for (std::size_t i : u.atoms()) {
        if (code & 1U) given[i].insert(w);
        code >>= 1;
      }
    }
    std::vector<WorldSet> evidence(seg.n * nterms);
    const std::uint64_t k = seg.candidates.size();
    for (World w : seg.normal_worlds) {
      for (std::size_t t = 0; t < nterms; ++t) {
        evidence[w * nterms + t] = seg.candidates[code % k];
        code /= k;
      }
    }
    return SubsetModel(universe_, names_[seg.n - 1], seg.normal, std::move(given), WorldSet(),
                       std::move(evidence));
  }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<std::shared_ptr<const std::vector<std::string>>> names_;
  std::vector<Segment> segments_;
  std::uint64_t total_ = 0;
};

SearchResult Search(const Space& space, unsigned threads,
                    const std::function<bool(const SubsetModel&)>& accept) {
  const std::uint64_t total = space.total();
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<std::uint64_t> next_block{0};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = next_block.fetch_add(kBlock);
      if (start >= total || start > best.load()) return;
      const std::uint64_t end = std::min(total, start + kBlock);
      for (std::uint64_t o = start; o < end && o < best.load(); ++o) {
        if (accept(space.Build(o))) {
          std::uint64_t seen = best.load();
          while (o < seen && !best.compare_exchange_weak(seen, o)) {
          }
          break;
        }
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  SearchResult result;
  result.space = total;
  if (best.load() != kNone) {
    result.ordinal = best.load();
    result.model = space.Build(result.ordinal);
  }
  return result;
}

}  // namespace

std::uint64_t CountModels(const SearchBounds& b) { return Space(b).total(); }

void EnumerateModels(const SearchBounds& b,
                     const std::function<bool(const SubsetModel&)>& visit) {
  const Space space(b);
  for (std::uint64_t o = 0; o < space.total(); ++o) {
    if (!visit(space.Build(o))) return;
  }
}

SearchResult FindFirst(const SearchBounds& b,
                       const std::function<bool(const SubsetModel&)>& accept) {
  return Search(Space(b), b.threads, accept);
}

SearchResult FindCountermodel(const Formula& f, ModelClass cls, SystemId sys,
                              const ConstantSpec& cs, const SearchBounds& b) {
  const Space space(b);
  const auto index = space.universe()->FormulaIndex(f);
  if (!index) throw FormulaOutsideUniverse(f);
  const Auditor auditor(space.universe(), cls, cs, sys);
  return Search(space, b.threads, [&](const SubsetModel& m) {
    return !m.normal().SubsetOf(m.truth_at(*index)) && auditor.Passes(m);
  });
}

SearchResult FindWitness(const FormulaSet& goals, ModelClass cls, SystemId sys,
                         const ConstantSpec& cs, const SearchBounds& b) {
  const Space space(b);
  std::vector<std::size_t> indices;
  for (const Formula& g : goals) {
    const auto index = space.universe()->FormulaIndex(g);
    if (!index) throw FormulaOutsideUniverse(g);
    indices.push_back(*index);
  }
  const Auditor auditor(space.universe(), cls, cs, sys);
  return Search(space, b.threads, [&](const SubsetModel& m) {
    WorldSet where = m.normal();
    for (std::size_t i : indices) where &= m.truth_at(i);
    return !where.empty() && auditor.Passes(m);
  });
}

}  // namespace jdl
