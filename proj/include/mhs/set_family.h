#ifndef MHS_SET_FAMILY_H_
#define MHS_SET_FAMILY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mhs/element_set.h"

namespace mhs {

// Optional maximum cardinality of reported hitting sets.
using Cutoff = std::optional<std::size_t>;

inline bool WithinCutoff(std::size_t size, const Cutoff& cutoff) {
  return !cutoff || size <= *cutoff;
}

// A finite family of subsets of {0, ..., universe_size - 1}. Sets may repeat
// and need not form an antichain. Immutable after construction.
class SetFamily {
 public:
  SetFamily() = default;
  // Every set must already have universe size `universe_size`.
  SetFamily(std::size_t universe_size, std::vector<ElementSet> sets);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<ElementSet>& sets() const { return sets_; }
  const ElementSet& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  // Sum of set sizes.
  std::size_t total_size() const;
  bool contains_empty_set() const;
  // Union of all sets.
  ElementSet support() const;
  // Stable digest of universe size and the ordered sets.
  std::uint64_t fingerprint() const;

  // Sets as ascending element lists.
  std::vector<std::vector<Element>> ToLists() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t universe_size_ = 0;
  std::vector<ElementSet> sets_;
};

// Builds a family from index lists. Duplicates inside a set are dropped.
// Without `universe_size` the universe is 1 + the largest index.
// Throws ValidationError on negative indices or indices >= universe_size.
SetFamily MakeFamily(const std::vector<std::vector<std::int64_t>>& sets,
                     std::optional<std::size_t> universe_size = std::nullopt);

// True iff `candidate` intersects every set of `family`.
bool IsHitting(const SetFamily& family, const ElementSet& candidate);

// Inclusion-minimal, deduplicated members of `sets`, in cardinality order.
std::vector<ElementSet> Minimize(std::vector<ElementSet> sets);

// Sorts into canonical order (ascending lexicographic element lists).
void SortCanonical(std::vector<ElementSet>& sets);

// Union of edge lists over the union of universes, deduplicated.
SetFamily Vee(const SetFamily& a, const SetFamily& b);

// All pairwise unions, minimized.
SetFamily Wedge(const SetFamily& a, const SetFamily& b);

// The minimal hitting sets of some source family.
struct MhsCollection {
  std::uint64_t source_fingerprint = 0;
  std::size_t universe_size = 0;
  std::vector<ElementSet> sets;
  // False when a cutoff or an early stop may have dropped members.
  bool complete = true;
  // The source contained an empty set, so nothing hits it.
  bool unhittable = false;

  std::size_t size() const { return sets.size(); }
  void Canonicalize() { SortCanonical(sets); }
  std::vector<std::vector<Element>> ToLists() const;
};

// Set equality of the members, ignoring order and flags.
bool SameSets(const MhsCollection& a, const MhsCollection& b);
bool SameSets(std::vector<ElementSet> a, std::vector<ElementSet> b);

// Members of `collection` with at most `cutoff` elements.
MhsCollection FilterByCutoff(const MhsCollection& collection, const Cutoff& cutoff);

// Reinterprets a collection as a family over the same universe.
SetFamily AsFamily(const MhsCollection& collection);

// Results every enumerator returns for degenerate inputs: {{}} for the empty
// family, an empty unhittable collection when the family contains an empty
// set. Returns nullopt when the family is not degenerate.
std::optional<MhsCollection> DegenerateResult(const SetFamily& family,
                                              const Cutoff& cutoff);

// Partition of the elements that appear in at least one set into classes
// with identical set membership. Each class is represented by its smallest
// element.
class ElementGroupMap {
 public:
  ElementGroupMap() = default;
  ElementGroupMap(std::size_t universe_size, std::vector<std::vector<Element>> groups);

  std::size_t universe_size() const { return universe_size_; }
  const std::vector<std::vector<Element>>& groups() const { return groups_; }
  std::size_t group_count() const { return groups_.size(); }
  Element representative(std::size_t group) const { return groups_[group].front(); }
  // The class represented by `rep`, or nullptr if `rep` represents none.
  const std::vector<Element>* GroupOf(Element rep) const;

 private:
  std::size_t universe_size_ = 0;
  std::vector<std::vector<Element>> groups_;
  // Indexed by element; -1 for non-representatives.
  std::vector<std::int32_t> group_index_;
};

// Replaces each element by its class representative. The condensed family
// keeps the original universe size.
std::pair<SetFamily, ElementGroupMap> Condense(const SetFamily& family);

// Expands each condensed hitting set into the cross product of its classes.
// Throws ValidationError if a member uses an element that is not a
// representative.
MhsCollection Expand(const MhsCollection& condensed, const ElementGroupMap& map);

}  // namespace mhs

#endif  // MHS_SET_FAMILY_H_
