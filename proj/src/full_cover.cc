#include "mhs/full_cover.h"

#include <algorithm>
#include <unordered_set>

#include "mhs/buildup.h"
#include "mhs/errors.h"
#include "mhs/work_stealing_pool.h"

namespace mhs {

namespace {

FullCover ComplementCover(std::size_t m, const ElementSet& t) {
  FullCover cover;
  const ElementSet universe = ElementSet::Full(m);
  t.for_each([&](Element i) {
    ElementSet c = universe;
    c.erase(i);
    cover.covers.push_back(std::move(c));
  });
  cover.covers.push_back(t);
  return cover;
}

std::vector<ElementSet> Restrict(const std::vector<ElementSet>& sets, const ElementSet& c) {
  std::vector<ElementSet> out;
  for (const ElementSet& s : sets) {
    if (s.is_subset_of(c)) out.push_back(s);
  }
  return Minimize(std::move(out));
}

// min of all unions picking one member from each part.
std::vector<ElementSet> MinimizedWedge(const std::vector<std::vector<ElementSet>>& parts,
                                       std::size_t m) {
  std::vector<ElementSet> acc{ElementSet(m)};
  for (const std::vector<ElementSet>& part : parts) {
    std::unordered_set<ElementSet> next;
    for (const ElementSet& a : acc) {
      for (const ElementSet& b : part) next.insert(a | b);
    }
    acc.assign(next.begin(), next.end());
  }
  return Minimize(std::move(acc));
}

class Dualizer {
 public:
  Dualizer(std::size_t m, const FullCoverOptions& options) : m_(m), options_(options) {}

  std::vector<ElementSet> Base(const std::vector<ElementSet>& sets) const {
    return Mmcs(SetFamily(m_, sets)).collection.sets;
  }

  // `sets` is simple, nonempty, and free of the empty set.
  std::vector<ElementSet> Solve(const std::vector<ElementSet>& sets, std::size_t workers) const {
    if (sets.size() <= options_.base_threshold) return Base(sets);
    const FullCover cover = DefaultCover(SetFamily(m_, sets), options_.strategy);

    std::vector<std::vector<ElementSet>> subfamilies;
    subfamilies.reserve(cover.covers.size());
    for (const ElementSet& c : cover.covers) {
      subfamilies.push_back(Restrict(sets, c));
      if (subfamilies.back().size() == sets.size()) return Base(sets);
    }

    std::vector<std::vector<ElementSet>> parts(subfamilies.size());
    auto solve_part = [&](std::size_t i) {
      parts[i] = subfamilies[i].empty() ? std::vector<ElementSet>{ElementSet(m_)}
                                        : Solve(subfamilies[i], 1);
    };
    if (workers > 1) {
      WorkStealingPool pool(workers);
      for (std::size_t i = 0; i < subfamilies.size(); ++i) {
        pool.Spawn([&solve_part, i](WorkStealingPool&) { solve_part(i); });
      }
      pool.Run();
    } else {
      for (std::size_t i = 0; i < subfamilies.size(); ++i) solve_part(i);
    }
    return MinimizedWedge(parts, m_);
  }

 private:
  std::size_t m_;
  const FullCoverOptions& options_;
};

}  // namespace

bool IsFullCover(const FullCover& cover, const SetFamily& target) {
  return std::all_of(target.begin(), target.end(), [&](const ElementSet& s) {
    return std::any_of(cover.covers.begin(), cover.covers.end(), [&](const ElementSet& c) {
      return s.Resized(c.universe_size()).is_subset_of(c);
    });
  });
}

FullCover CoverFromTransversal(const SetFamily& family, const ElementSet& t) {
  if (t.universe_size() != family.universe_size() || !IsHitting(family, t)) {
    throw ValidationError("cover_from_transversal: " + t.ToString() +
                          " is not a hitting set of the family");
  }
  return ComplementCover(family.universe_size(), t);
}

FullCover CoverFromEdge(const SetFamily& family, const ElementSet& e) {
  if (std::find(family.begin(), family.end(), e) == family.end()) {
    throw ValidationError("cover_from_edge: " + e.ToString() + " is not a set of the family");
  }
  const ElementSet universe = ElementSet::Full(family.universe_size());
  FullCover cover;
  std::unordered_set<ElementSet> seen;
  for (const ElementSet& f : family) {
    const ElementSet outside = universe - f;
    (f & e).for_each([&](Element i) {
      ElementSet c = outside;
      c.insert(i);
      if (seen.insert(c).second) cover.covers.push_back(std::move(c));
    });
  }
  return cover;
}

FullCover DefaultCover(const SetFamily& simple_family, CoverStrategy strategy) {
  if (simple_family.empty()) throw ValidationError("default cover needs at least one set");
  // Every set of a simple family is a minimal hitting set of its dual, so
  // C(s) covers the family itself.
  const auto by_size = [](const ElementSet& a, const ElementSet& b) {
    return a.count() < b.count();
  };
  const auto chosen = strategy == CoverStrategy::kSmallestEdge
                          ? std::min_element(simple_family.begin(), simple_family.end(), by_size)
                          : std::max_element(simple_family.begin(), simple_family.end(), by_size);
  return ComplementCover(simple_family.universe_size(), *chosen);
}

MhsCollection FullCoverDualize(const SetFamily& family, const FullCoverOptions& options) {
  if (options.workers == 0) throw ValidationError("worker count must be at least 1");
  if (auto degenerate = DegenerateResult(family, std::nullopt)) return *degenerate;
  const Dualizer dualizer(family.universe_size(), options);
  MhsCollection out;
  out.source_fingerprint = family.fingerprint();
  out.universe_size = family.universe_size();
  out.sets = dualizer.Solve(Minimize(family.sets()), options.workers);
  out.Canonicalize();
  return out;
}

}  // namespace mhs
