#ifndef MHS_GENERATORS_H_
#define MHS_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mhs/set_family.h"

namespace mhs {

// n disjoint pairs {0,1}, {2,3}, ..., {2n-2, 2n-1}. Has 2^n minimal hitting
// sets.
SetFamily MatchingGraph(std::size_t n);

struct RandomFamilySpec {
  std::size_t universe_size = 0;
  std::size_t set_count = 0;
  std::size_t min_set_size = 1;
  std::size_t max_set_size = 1;
  std::uint64_t seed = 0;
};

// `set_count` sets, each of a size drawn uniformly from
// [min_set_size, max_set_size] with distinct elements drawn uniformly from
// the universe. Deterministic in the seed. Throws ValidationError unless
// 1 <= min_set_size <= max_set_size <= universe_size.
SetFamily RandomFamily(const RandomFamilySpec& spec);

// Builds a family from a textual recipe, as used by the command line and
// benchmark configs: {"matching", N} or {"random", M, N, MIN, MAX, SEED}.
// Throws ValidationError on an unknown recipe or malformed number.
SetFamily GenerateFromArgs(const std::vector<std::string>& args);

}  // namespace mhs

#endif  // MHS_GENERATORS_H_
