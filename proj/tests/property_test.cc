// Invariants that every enumerator must satisfy, checked on seeded random
// families against the brute-force oracle.

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "mhs/enumerate.h"
#include "mhs/errors.h"
#include "mhs/generators.h"
#include "mhs/oracle.h"
#include "test_util.h"

namespace mhs {
namespace {

using ::mhs::testing::Canonical;
using ::mhs::testing::Lists;

SetFamily PropertyFamily(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t m = 1 + rng() % 12;
  const std::size_t n = 1 + rng() % 10;
  const std::size_t hi = 1 + rng() % m;
  return RandomFamily({m, n, 1 + rng() % hi, hi, seed});
}

MhsCollection Solve(Algorithm a, const SetFamily& f, Cutoff cutoff = std::nullopt,
                  std::size_t threads = 1) {
  EnumerationRequest request;
  request.algorithm = a;
  request.cutoff = cutoff;
  request.threads = threads;
  return Enumerate(f, request).collection;
}

class AlgorithmPropertyTest : public ::testing::TestWithParam<Algorithm> {};

TEST_P(AlgorithmPropertyTest, OutputIsTheTransversal) {
  for (std::uint64_t seed = 1000; seed < 1150; ++seed) {
    const SetFamily f = PropertyFamily(seed);
    const MhsCollection c = Solve(GetParam(), f);
    for (const ElementSet& s : c.sets) EXPECT_TRUE(IsHitting(f, s));
    EXPECT_EQ(Minimize(c.sets).size(), c.sets.size()) << "not an antichain, seed " << seed;
    EXPECT_EQ(Canonical(c), Canonical(BruteForceMhs(f))) << "seed " << seed;
    EXPECT_TRUE(c.complete);
  }
}

TEST_P(AlgorithmPropertyTest, CutoffIsAFilter) {
  if (!SupportsCutoff(GetParam())) {
    EXPECT_THROW(Solve(GetParam(), MatchingGraph(2), 1), ValidationError);
    return;
  }
  for (std::uint64_t seed = 2000; seed < 2060; ++seed) {
    const SetFamily f = PropertyFamily(seed);
    const MhsCollection full = BruteForceMhs(f);
    for (std::size_t c : {1, 2, 3, 5}) {
      const MhsCollection cut = Solve(GetParam(), f, c);
      for (const ElementSet& s : cut.sets) EXPECT_LE(s.count(), c);
      EXPECT_EQ(Canonical(cut), Canonical(FilterByCutoff(full, c)))
          << "seed " << seed << " cutoff " << c;
    }
  }
}

TEST_P(AlgorithmPropertyTest, MatchingGraphCounts) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const MhsCollection c = Solve(GetParam(), MatchingGraph(n));
    ASSERT_EQ(c.sets.size(), std::size_t{1} << n);
    for (const ElementSet& s : c.sets) {
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(s.contains(static_cast<Element>(2 * i)) +
                      s.contains(static_cast<Element>(2 * i + 1)),
                  1);
      }
    }
  }
}

TEST_P(AlgorithmPropertyTest, DegenerateConventions) {
  EXPECT_EQ(Canonical(Solve(GetParam(), MakeFamily({}))), (Lists{{}}));
  const MhsCollection blocked = Solve(GetParam(), MakeFamily({{0, 1}, {}}));
  EXPECT_TRUE(blocked.sets.empty());
  EXPECT_TRUE(blocked.unhittable);
}

TEST_P(AlgorithmPropertyTest, InputOrderDoesNotMatter) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 3000; seed < 3040; ++seed) {
    const SetFamily f = PropertyFamily(seed);
    std::vector<ElementSet> shuffled = f.sets();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(Canonical(Solve(GetParam(), SetFamily(f.universe_size(), shuffled))),
              Canonical(Solve(GetParam(), f)));
  }
}

INSTANTIATE_TEST_SUITE_P(All, AlgorithmPropertyTest, ::testing::ValuesIn(AllAlgorithms()),
                         [](const auto& info) { return std::string(AlgorithmName(info.param)); });

TEST(DualityPropertyTest, InvolutionWithMmcs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SetFamily f = PropertyFamily(seed);
    const MhsCollection twice = Solve(Algorithm::kMmcs, AsFamily(Solve(Algorithm::kMmcs, f)));
    EXPECT_EQ(Canonical(twice), Canonical(Minimize(f.sets()))) << "seed " << seed;
    EXPECT_TRUE(CheckDuality(f, AsFamily(Solve(Algorithm::kMmcs, f))).equal);
  }
}

TEST(ThreadPropertyTest, ThreadedAlgorithmsAreInvariant) {
  for (Algorithm a : {Algorithm::kMmcs, Algorithm::kRs, Algorithm::kFullCover}) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const SetFamily f = RandomFamily({18, 14, 2, 6, seed});
      const Lists expected = Canonical(Solve(a, f));
      for (std::size_t threads : {2, 4, 8}) {
        EXPECT_EQ(Canonical(Solve(a, f, std::nullopt, threads)), expected)
            << AlgorithmName(a) << " seed " << seed << " threads " << threads;
      }
    }
  }
}

}  // namespace
}  // namespace mhs
