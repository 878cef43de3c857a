#ifndef MHS_ITERATIVE_H_
#define MHS_ITERATIVE_H_

#include "mhs/set_family.h"

namespace mhs {

enum class SetOrder {
  kInput,
  // Ascending by set size, ties in input order.
  kAscendingSize,
};

// Berge's sequential algorithm: folds the sets in one at a time, keeping the
// minimal transversals of the prefix processed so far. With a cutoff,
// candidates larger than the bound are dropped as soon as they are built.
MhsCollection Berge(const SetFamily& family, const Cutoff& cutoff = std::nullopt,
                    SetOrder order = SetOrder::kInput);

// Hitting set tree search. Each node is labelled by the first set its path
// does not hit; the i-th child of a node may not use the elements of the
// earlier siblings' edges, so every element set is visited at most once.
// Breadth-first order closes any node whose path contains an emitted set.
// The cutoff bounds the tree depth.
MhsCollection Hst(const SetFamily& family, const Cutoff& cutoff = std::nullopt);

// Hitting set DAG search: breadth-first expansion in which nodes with equal
// path sets are shared, labels are reused when disjoint from a path, nodes
// containing an emitted set are closed, and a node whose label is a proper
// superset of a newly found label is relabelled with the smaller set, its
// redundant edges pruned. The cutoff bounds the DAG depth.
MhsCollection HsDag(const SetFamily& family, const Cutoff& cutoff = std::nullopt);

}  // namespace mhs

#endif  // MHS_ITERATIVE_H_
