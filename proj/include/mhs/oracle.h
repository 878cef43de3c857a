#ifndef MHS_ORACLE_H_
#define MHS_ORACLE_H_

#include <cstddef>
#include <optional>

#include "mhs/element_set.h"
#include "mhs/set_family.h"

namespace mhs {

inline constexpr std::size_t kDefaultOracleLimit = 20;

// Reference enumerator: sweeps all subsets of the universe in order of
// increasing cardinality and keeps hitting sets with no kept subset. With a
// cutoff only sets of size <= cutoff are considered, which yields exactly the
// minimal hitting sets of that size. Throws OracleLimitError when the
// universe exceeds `limit`.
MhsCollection BruteForceMhs(const SetFamily& family, const Cutoff& cutoff = std::nullopt,
                            std::size_t limit = kDefaultOracleLimit);

enum class WitnessKind { kNotHitting, kNotMinimal, kMissing };

struct DualityVerdict {
  bool equal = true;
  std::optional<ElementSet> witness;
  std::optional<WitnessKind> kind;
};

// Decides whether min(g) is the transversal hypergraph of h. When it is not,
// the witness is a member of g that misses a set of h, a member that hits h
// but is not minimal, or a minimal hitting set of h absent from g.
DualityVerdict CheckDuality(const SetFamily& h, const SetFamily& g,
                            std::size_t limit = kDefaultOracleLimit);

}  // namespace mhs

#endif  // MHS_ORACLE_H_
