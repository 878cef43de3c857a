#ifndef MHS_BUILDUP_H_
#define MHS_BUILDUP_H_

#include <cstddef>
#include <cstdint>

#include "mhs/set_family.h"
#include "mhs/sink.h"

namespace mhs {

enum class OutputMode { kList, kCountOnly };

enum class RunStatus {
  kComplete,
  // A cutoff or early stop may have dropped members.
  kTruncated,
  // The family contains an empty set.
  kUnhittable,
};

struct RunStats {
  double seconds = 0.0;
  // Search nodes visited, where the algorithm counts them.
  std::uint64_t nodes = 0;
};

struct EnumerationOutcome {
  // Empty in count-only mode.
  MhsCollection collection;
  std::uint64_t count = 0;
  RunStats stats;
  RunStatus status = RunStatus::kComplete;
};

struct BacktrackOptions {
  Cutoff cutoff;
  std::size_t workers = 1;
  // Recursion levels below this depth become pool tasks when workers > 1.
  std::size_t spawn_depth = 4;
  OutputMode mode = OutputMode::kList;
  // Recomputes the candidate state from scratch at every node and throws
  // std::logic_error if the incremental state disagrees. Slow.
  bool check_invariants = false;
};

// Level-wise candidate growth. Level i holds non-hitting sets of size i in
// which every element is critical; pairs sharing their first i-1 elements are
// merged, kept only if every i-subset of the union is a live candidate that
// hits strictly fewer sets, and emitted once they hit everything.
MhsCollection MtMiner(const SetFamily& family, const Cutoff& cutoff = std::nullopt);

// Depth-first growth of sets satisfying the minimality condition. At each
// node the uncovered set with the fewest remaining candidates is chosen and
// the search branches on those candidates; earlier siblings' elements are
// withheld from later branches so each hitting set is reached once. Hit
// counts and critical-set counts are updated and rolled back in time linear
// in the occurrences of the added element.
EnumerationOutcome Mmcs(const SetFamily& family, const BacktrackOptions& options = {});

// Reverse search over prefixes: a node is a minimal hitting set of the sets
// before the first set it misses, and its children add one element of that
// set, kept when every element still has a critical set in the longer prefix.
EnumerationOutcome Rs(const SetFamily& family, const BacktrackOptions& options = {});

// Streaming forms; the sink receives every minimal hitting set.
RunStats MmcsToSink(const SetFamily& family, const BacktrackOptions& options, MhsSink& sink);
RunStats RsToSink(const SetFamily& family, const BacktrackOptions& options, MhsSink& sink);

}  // namespace mhs

#endif  // MHS_BUILDUP_H_
