#ifndef MHS_ENUMERATE_H_
#define MHS_ENUMERATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhs/buildup.h"
#include "mhs/divide.h"
#include "mhs/set_family.h"

namespace mhs {

enum class Algorithm {
  kBerge,
  kHst,
  kHsDag,
  kBool,
  kStaccato,
  kMtMiner,
  kMmcs,
  kRs,
  kFullCover,
};

std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
const std::vector<Algorithm>& AllAlgorithms();
// "berge, hst, ..." for error messages.
std::string AlgorithmNameList();

bool SupportsCutoff(Algorithm algorithm);
bool SupportsThreads(Algorithm algorithm);

struct EnumerationRequest {
  Algorithm algorithm = Algorithm::kMmcs;
  Cutoff cutoff;
  std::size_t threads = 1;
  OutputMode mode = OutputMode::kList;
  // Run on the condensed family and expand the result.
  bool condense = false;
  double rank_fraction = 1.0;
  std::optional<std::size_t> max_results;
  std::size_t base_threshold = 8;
  std::size_t spawn_depth = 4;
};

// Runs one algorithm. Throws ValidationError for a cutoff on an algorithm
// without cutoff support or threads == 0.
EnumerationOutcome Enumerate(const SetFamily& family, const EnumerationRequest& request);

}  // namespace mhs

#endif  // MHS_ENUMERATE_H_
