#include "mhs/enumerate.h"

#include <array>
#include <chrono>
#include <utility>

#include "mhs/errors.h"
#include "mhs/full_cover.h"
#include "mhs/iterative.h"

namespace mhs {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 9> kNames{{
    {Algorithm::kBerge, "berge"},
    {Algorithm::kHst, "hst"},
    {Algorithm::kHsDag, "hsdag"},
    {Algorithm::kBool, "bool"},
    {Algorithm::kStaccato, "staccato"},
    {Algorithm::kMtMiner, "mtminer"},
    {Algorithm::kMmcs, "mmcs"},
    {Algorithm::kRs, "rs"},
    {Algorithm::kFullCover, "fullcover"},
}};

MhsCollection RunCollecting(const SetFamily& family, const EnumerationRequest& request) {
  switch (request.algorithm) {
    case Algorithm::kBerge:
      return Berge(family, request.cutoff);
    case Algorithm::kHst:
      return Hst(family, request.cutoff);
    case Algorithm::kHsDag:
      return HsDag(family, request.cutoff);
    case Algorithm::kBool:
      return BoolAlgorithm(family, request.cutoff);
    case Algorithm::kStaccato:
      return Staccato(family, StaccatoOptions{request.rank_fraction, request.max_results,
                                              request.cutoff});
    case Algorithm::kMtMiner:
      return MtMiner(family, request.cutoff);
    case Algorithm::kFullCover:
      return FullCoverDualize(family, FullCoverOptions{request.base_threshold, request.threads});
    case Algorithm::kMmcs:
    case Algorithm::kRs:
      break;
  }
  throw ValidationError("not a collecting algorithm");
}

EnumerationOutcome RunDirect(const SetFamily& family, const EnumerationRequest& request) {
  if (request.algorithm == Algorithm::kMmcs || request.algorithm == Algorithm::kRs) {
    BacktrackOptions options;
    options.cutoff = request.cutoff;
    options.workers = request.threads;
    options.spawn_depth = request.spawn_depth;
    options.mode = request.mode;
    return request.algorithm == Algorithm::kMmcs ? Mmcs(family, options) : Rs(family, options);
  }
  const auto start = std::chrono::steady_clock::now();
  EnumerationOutcome out;
  out.collection = RunCollecting(family, request);
  out.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.count = out.collection.size();
  out.status = out.collection.unhittable ? RunStatus::kUnhittable
               : out.collection.complete ? RunStatus::kComplete
                                         : RunStatus::kTruncated;
  if (request.mode == OutputMode::kCountOnly) out.collection.sets.clear();
  return out;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

const std::vector<Algorithm>& AllAlgorithms() {
  static const std::vector<Algorithm> all = [] {
    std::vector<Algorithm> v;
    for (const auto& [a, name] : kNames) v.push_back(a);
    return v;
  }();
  return all;
}

std::string AlgorithmNameList() {
  std::string out;
  for (const auto& [a, name] : kNames) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

bool SupportsCutoff(Algorithm algorithm) { return algorithm != Algorithm::kFullCover; }

bool SupportsThreads(Algorithm algorithm) {
  return algorithm == Algorithm::kMmcs || algorithm == Algorithm::kRs ||
         algorithm == Algorithm::kFullCover;
}

EnumerationOutcome Enumerate(const SetFamily& family, const EnumerationRequest& request) {
  if (request.threads == 0) throw ValidationError("threads must be at least 1");
  if (request.cutoff && !SupportsCutoff(request.algorithm)) {
    throw ValidationError(std::string(AlgorithmName(request.algorithm)) +
                          " does not support a cutoff");
  }
  if (!request.condense) return RunDirect(family, request);

  const auto [condensed, groups] = Condense(family);
  EnumerationRequest inner = request;
  inner.mode = OutputMode::kList;
  EnumerationOutcome out = RunDirect(condensed, inner);
  out.collection = Expand(out.collection, groups);
  out.collection.source_fingerprint = family.fingerprint();
  out.collection.Canonicalize();
  out.count = out.collection.size();
  if (request.mode == OutputMode::kCountOnly) out.collection.sets.clear();
  return out;
}

}  // namespace mhs
