#ifndef MHS_FULL_COVER_H_
#define MHS_FULL_COVER_H_

#include <cstddef>
#include <vector>

#include "mhs/element_set.h"
#include "mhs/set_family.h"

namespace mhs {

// A family of element sets such that every set of some target family is a
// subset of at least one member.
struct FullCover {
  std::vector<ElementSet> covers;
};

// True iff every set of `target` lies inside some member of `cover`.
bool IsFullCover(const FullCover& cover, const SetFamily& target);

// C(T) = { V \ {i} : i in T } ∪ { T } for a hitting set T of `family`, with V
// the universe. When T is a minimal hitting set this covers every minimal
// hitting set of `family`. Throws ValidationError if T does not hit the
// family.
FullCover CoverFromTransversal(const SetFamily& family, const ElementSet& t);

// C(e) = { (V \ f) ∪ {i} : f in family, i in f ∩ e } for an edge e of
// `family`; a full cover of the family's minimal hitting sets. Throws
// ValidationError if e is not one of the family's sets.
FullCover CoverFromEdge(const SetFamily& family, const ElementSet& e);

// Which edge s of the minimized family seeds the cover C(s). A larger edge
// gives more, smaller subproblems.
enum class CoverStrategy { kSmallestEdge, kLargestEdge };

struct FullCoverOptions {
  // Subfamilies with at most this many sets go to the base enumerator.
  std::size_t base_threshold = 8;
  // Independent subproblems of the top-level split run on this many workers.
  std::size_t workers = 1;
  CoverStrategy strategy = CoverStrategy::kSmallestEdge;
};

// Splits the dualization along a full cover of the (minimized) family,
// solves each restricted subfamily recursively, and merges the partial
// transversals with one minimized wedge per level:
//   Tr S = min( ∧_{c in C} Tr S_c ),  S_c = min{ s in S : s ⊆ c }.
// The cover is C(s) for a set s of S chosen by the strategy; it covers S
// because s is a minimal hitting set of Tr S.
MhsCollection FullCoverDualize(const SetFamily& family, const FullCoverOptions& options = {});

// The cover FullCoverDualize uses for a simple family with at least one set.
FullCover DefaultCover(const SetFamily& simple_family,
                       CoverStrategy strategy = CoverStrategy::kSmallestEdge);

}  // namespace mhs

#endif  // MHS_FULL_COVER_H_
