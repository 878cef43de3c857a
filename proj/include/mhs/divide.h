#ifndef MHS_DIVIDE_H_
#define MHS_DIVIDE_H_

#include <cstddef>
#include <optional>

#include "mhs/set_family.h"

namespace mhs {

// Boolean divide-and-conquer recursion. Handles the trivial cases, factors
// out an element common to every set or the element of a singleton set, and
// otherwise splits on the most frequent element e:
//   Tr(S) = min({e} ∧ Tr(S without the sets holding e) ∪ Tr(S with e deleted)).
// With a cutoff each branch carries its remaining size budget and is
// abandoned once the budget is exhausted.
MhsCollection BoolAlgorithm(const SetFamily& family, const Cutoff& cutoff = std::nullopt);

struct StaccatoOptions {
  // Fraction of the ranked elements explored at each level, in (0, 1].
  double rank_fraction = 1.0;
  // Stop after this many hitting sets have been found.
  std::optional<std::size_t> max_results;
  Cutoff cutoff;
};

// Ranked divide-and-conquer. Elements are ranked by the fraction of sets
// containing them (ties to the lower index); for each explored element j in
// rank order the search recurses on the sets j misses, then deletes j from
// the family. Every reported set hits the family. With rank_fraction 1 and no
// truncation the minimized result is the full transversal.
// Throws ValidationError if rank_fraction is outside (0, 1].
MhsCollection Staccato(const SetFamily& family, const StaccatoOptions& options = {});

}  // namespace mhs

#endif  // MHS_DIVIDE_H_
