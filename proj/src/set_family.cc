#include "mhs/set_family.h"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mhs/errors.h"

namespace mhs {

SetFamily::SetFamily(std::size_t universe_size, std::vector<ElementSet> sets)
    : universe_size_(universe_size), sets_(std::move(sets)) {
  for (const ElementSet& s : sets_) {
    if (s.universe_size() != universe_size_) {
      throw ValidationError("set universe " + std::to_string(s.universe_size()) +
                            " does not match family universe " +
                            std::to_string(universe_size_));
    }
  }
}

std::size_t SetFamily::total_size() const {
  std::size_t k = 0;
  for (const ElementSet& s : sets_) k += s.count();
  return k;
}

bool SetFamily::contains_empty_set() const {
  return std::any_of(sets_.begin(), sets_.end(),
                     [](const ElementSet& s) { return s.empty(); });
}

ElementSet SetFamily::support() const {
  ElementSet u(universe_size_);
  for (const ElementSet& s : sets_) u |= s;
  return u;
}

std::uint64_t SetFamily::fingerprint() const {
  std::uint64_t h = 14695981039346656037ULL ^ universe_size_;
  for (const ElementSet& s : sets_) {
    h ^= s.hash();
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::vector<Element>> SetFamily::ToLists() const {
  std::vector<std::vector<Element>> out;
  out.reserve(sets_.size());
  for (const ElementSet& s : sets_) out.push_back(s.elements());
  return out;
}

SetFamily MakeFamily(const std::vector<std::vector<std::int64_t>>& sets,
                     std::optional<std::size_t> universe_size) {
  std::int64_t max_index = -1;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::int64_t e : sets[i]) {
      if (e < 0) {
        throw ValidationError("set " + std::to_string(i) + ": negative index " +
                              std::to_string(e));
      }
      if (universe_size && static_cast<std::uint64_t>(e) >= *universe_size) {
        throw ValidationError("set " + std::to_string(i) + ": index " +
                              std::to_string(e) + " >= universe size " +
                              std::to_string(*universe_size));
      }
      max_index = std::max(max_index, e);
    }
  }
  const std::size_t m = universe_size.value_or(static_cast<std::size_t>(max_index + 1));
  std::vector<ElementSet> out;
  out.reserve(sets.size());
  for (const auto& raw : sets) {
    ElementSet s(m);
    for (std::int64_t e : raw) s.insert(static_cast<Element>(e));
    out.push_back(std::move(s));
  }
  return SetFamily(m, std::move(out));
}

bool IsHitting(const SetFamily& family, const ElementSet& candidate) {
  return std::all_of(family.begin(), family.end(),
                     [&](const ElementSet& s) { return s.intersects(candidate); });
}

std::vector<ElementSet> Minimize(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), CardinalityLess);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> kept;
  for (ElementSet& s : sets) {
    // Equal-size members cannot be proper subsets, and duplicates are gone.
    const std::size_t size = s.count();
    bool dominated = false;
    for (const ElementSet& k : kept) {
      if (k.count() >= size) break;
      if (k.is_subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(s));
  }
  return kept;
}

void SortCanonical(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess);
}

namespace {

std::vector<ElementSet> Lift(const SetFamily& f, std::size_t m) {
  std::vector<ElementSet> out;
  out.reserve(f.size());
  for (const ElementSet& s : f) out.push_back(s.Resized(m));
  return out;
}

}  // namespace

SetFamily Vee(const SetFamily& a, const SetFamily& b) {
  const std::size_t m = std::max(a.universe_size(), b.universe_size());
  std::vector<ElementSet> sets = Lift(a, m);
  for (ElementSet& s : Lift(b, m)) sets.push_back(std::move(s));
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> out;
  for (ElementSet& s : sets) {
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return SetFamily(m, std::move(out));
}

SetFamily Wedge(const SetFamily& a, const SetFamily& b) {
  const std::size_t m = std::max(a.universe_size(), b.universe_size());
  const std::vector<ElementSet> la = Lift(a, m);
  const std::vector<ElementSet> lb = Lift(b, m);
  std::vector<ElementSet> unions;
  unions.reserve(la.size() * lb.size());
  for (const ElementSet& x : la) {
    for (const ElementSet& y : lb) unions.push_back(x | y);
  }
  return SetFamily(m, Minimize(std::move(unions)));
}

std::vector<std::vector<Element>> MhsCollection::ToLists() const {
  std::vector<std::vector<Element>> out;
  out.reserve(sets.size());
  for (const ElementSet& s : sets) out.push_back(s.elements());
  return out;
}

bool SameSets(std::vector<ElementSet> a, std::vector<ElementSet> b) {
  if (a.size() != b.size()) return false;
  SortCanonical(a);
  SortCanonical(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].elements() != b[i].elements()) return false;
  }
  return true;
}

bool SameSets(const MhsCollection& a, const MhsCollection& b) {
  return SameSets(a.sets, b.sets);
}

MhsCollection FilterByCutoff(const MhsCollection& collection, const Cutoff& cutoff) {
  MhsCollection out = collection;
  out.sets.clear();
  for (const ElementSet& s : collection.sets) {
    if (WithinCutoff(s.count(), cutoff)) out.sets.push_back(s);
  }
  if (cutoff) out.complete = false;
  return out;
}

SetFamily AsFamily(const MhsCollection& collection) {
  return SetFamily(collection.universe_size, collection.sets);
}

std::optional<MhsCollection> DegenerateResult(const SetFamily& family,
                                              const Cutoff& cutoff) {
  MhsCollection out;
  out.source_fingerprint = family.fingerprint();
  out.universe_size = family.universe_size();
  out.complete = !cutoff.has_value();
  if (family.contains_empty_set()) {
    out.unhittable = true;
    return out;
  }
  if (family.empty()) {
    out.sets.emplace_back(family.universe_size());
    return out;
  }
  return std::nullopt;
}

ElementGroupMap::ElementGroupMap(std::size_t universe_size,
                                 std::vector<std::vector<Element>> groups)
    : universe_size_(universe_size),
      groups_(std::move(groups)),
      group_index_(universe_size, -1) {
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].empty()) throw ValidationError("empty element group");
    std::sort(groups_[g].begin(), groups_[g].end());
    for (Element e : groups_[g]) {
      if (e >= universe_size_) throw ValidationError("group element outside universe");
    }
    group_index_[groups_[g].front()] = static_cast<std::int32_t>(g);
  }
}

const std::vector<Element>* ElementGroupMap::GroupOf(Element rep) const {
  if (rep >= group_index_.size() || group_index_[rep] < 0) return nullptr;
  return &groups_[static_cast<std::size_t>(group_index_[rep])];
}

std::pair<SetFamily, ElementGroupMap> Condense(const SetFamily& family) {
  const std::size_t m = family.universe_size();
  // Membership vector of each element over the set indices.
  std::vector<ElementSet> membership(m, ElementSet(family.size()));
  for (std::size_t i = 0; i < family.size(); ++i) {
    family[i].for_each([&](Element e) { membership[e].insert(static_cast<Element>(i)); });
  }
  std::unordered_map<ElementSet, std::size_t> class_of;
  std::vector<std::vector<Element>> groups;
  std::vector<Element> rep_of(m, 0);
  for (Element e = 0; e < m; ++e) {
    if (membership[e].empty()) continue;
    auto [it, inserted] = class_of.try_emplace(membership[e], groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(e);
    rep_of[e] = groups[it->second].front();
  }
  std::vector<ElementSet> sets;
  sets.reserve(family.size());
  for (const ElementSet& s : family) {
    ElementSet c(m);
    s.for_each([&](Element e) { c.insert(rep_of[e]); });
    sets.push_back(std::move(c));
  }
  return {SetFamily(m, std::move(sets)), ElementGroupMap(m, std::move(groups))};
}

MhsCollection Expand(const MhsCollection& condensed, const ElementGroupMap& map) {
  MhsCollection out = condensed;
  out.universe_size = map.universe_size();
  out.sets.clear();
  for (const ElementSet& t : condensed.sets) {
    std::vector<const std::vector<Element>*> choices;
    t.for_each([&](Element rep) {
      const std::vector<Element>* g = map.GroupOf(rep);
      if (g == nullptr) {
        throw ValidationError("element " + std::to_string(rep) +
                              " is not a group representative");
      }
      choices.push_back(g);
    });
    // Odometer over one choice per group.
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      ElementSet s(map.universe_size());
      for (std::size_t i = 0; i < choices.size(); ++i) s.insert((*choices[i])[pick[i]]);
      out.sets.push_back(std::move(s));
      std::size_t i = 0;
      for (; i < choices.size(); ++i) {
        if (++pick[i] < choices[i]->size()) break;
        pick[i] = 0;
      }
      if (i == choices.size()) break;
    }
  }
  return out;
}

}  // namespace mhs
