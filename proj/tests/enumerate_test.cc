#include "gtest/gtest.h"
#include "mhs/enumerate.h"
#include "mhs/errors.h"
#include "mhs/generators.h"
#include "mhs/oracle.h"
#include "test_util.h"

namespace mhs {
namespace {

using ::mhs::testing::Canonical;
using ::mhs::testing::Family;
using ::mhs::testing::Lists;

TEST(AlgorithmRegistryTest, NamesRoundTrip) {
  EXPECT_EQ(AllAlgorithms().size(), 9u);
  for (Algorithm a : AllAlgorithms()) EXPECT_EQ(ParseAlgorithm(AlgorithmName(a)), a);
  EXPECT_FALSE(ParseAlgorithm("nosuch").has_value());
  EXPECT_EQ(AlgorithmNameList(), "berge, hst, hsdag, bool, staccato, mtminer, mmcs, rs, fullcover");
  EXPECT_FALSE(SupportsCutoff(Algorithm::kFullCover));
  EXPECT_TRUE(SupportsCutoff(Algorithm::kHsDag));
  EXPECT_TRUE(SupportsThreads(Algorithm::kRs));
  EXPECT_FALSE(SupportsThreads(Algorithm::kBerge));
}

TEST(EnumerateTest, EveryAlgorithmOnWorkedExamples) {
  for (Algorithm a : AllAlgorithms()) {
    EnumerationRequest request;
    request.algorithm = a;
    EXPECT_EQ(Canonical(Enumerate(Family({{2, 3}, {1, 3}}), request).collection),
              (Lists{{1, 2}, {3}}))
        << AlgorithmName(a);
    EXPECT_EQ(Canonical(Enumerate(Family({{1, 2}, {3}}), request).collection),
              (Lists{{1, 3}, {2, 3}}))
        << AlgorithmName(a);
    const EnumerationOutcome frozen = Enumerate(testing::FrozenFamily(), request);
    EXPECT_EQ(frozen.count, testing::kFrozenCount) << AlgorithmName(a);
  }
}

TEST(EnumerateTest, RejectsInvalidRequests) {
  EnumerationRequest request;
  request.algorithm = Algorithm::kFullCover;
  request.cutoff = 2;
  EXPECT_THROW(Enumerate(MatchingGraph(2), request), ValidationError);
  request.algorithm = Algorithm::kMmcs;
  request.cutoff.reset();
  request.threads = 0;
  EXPECT_THROW(Enumerate(MatchingGraph(2), request), ValidationError);
}

TEST(EnumerateTest, CountOnly) {
  for (Algorithm a : AllAlgorithms()) {
    EnumerationRequest request;
    request.algorithm = a;
    request.mode = OutputMode::kCountOnly;
    EXPECT_EQ(Enumerate(MatchingGraph(6), request).count, 64u) << AlgorithmName(a);
  }
}

TEST(EnumerateTest, CondensePipelineMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    // Duplicate a few columns so several elements share membership.
    const SetFamily base = RandomFamily({6, 1 + seed % 8, 1, 4, seed});
    std::vector<ElementSet> sets;
    for (const ElementSet& s : base) {
      ElementSet wide = s.Resized(10);
      for (Element e = 0; e < 4; ++e) {
        if (s.contains(e)) wide.insert(6 + e);
      }
      sets.push_back(wide);
    }
    const SetFamily f(10, sets);
    for (Algorithm a : {Algorithm::kMmcs, Algorithm::kBool, Algorithm::kBerge}) {
      EnumerationRequest request;
      request.algorithm = a;
      request.condense = true;
      EXPECT_EQ(Canonical(Enumerate(f, request).collection), Canonical(BruteForceMhs(f)))
          << AlgorithmName(a) << " seed " << seed;
    }
  }
}

}  // namespace
}  // namespace mhs
