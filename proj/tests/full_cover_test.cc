#include "gtest/gtest.h"
#include "mhs/buildup.h"
#include "mhs/errors.h"
#include "mhs/full_cover.h"
#include "mhs/generators.h"
#include "mhs/oracle.h"
#include "test_util.h"

namespace mhs {
namespace {

using ::mhs::testing::Canonical;
using ::mhs::testing::Family;
using ::mhs::testing::Lists;

TEST(CoverFromTransversalTest, Formula) {
  const SetFamily f = Family({{0, 1}}, 3);
  const FullCover c = CoverFromTransversal(f, ElementSet(3, {0}));
  EXPECT_EQ(Canonical(c.covers), (Lists{{0}, {1, 2}}));

  const FullCover all = CoverFromTransversal(f, ElementSet::Full(3));
  EXPECT_EQ(Canonical(all.covers), (Lists{{0, 1}, {0, 1, 2}, {0, 2}, {1, 2}}));

  EXPECT_EQ(Canonical(CoverFromTransversal(Family({}), ElementSet(0)).covers), (Lists{{}}));
  EXPECT_THROW(CoverFromTransversal(f, ElementSet(3, {2})), ValidationError);
}

TEST(CoverFromEdgeTest, Formula) {
  const SetFamily f = Family({{0, 1}}, 3);
  EXPECT_EQ(Canonical(CoverFromEdge(f, ElementSet(3, {0, 1})).covers), (Lists{{0, 2}, {1, 2}}));

  const SetFamily single = Family({{0}}, 3);
  EXPECT_EQ(Canonical(CoverFromEdge(single, ElementSet(3, {0})).covers), (Lists{{0, 1, 2}}));

  // {2,3} is disjoint from e = {0,1} and adds nothing.
  const SetFamily disjoint = Family({{0, 1}, {2, 3}});
  EXPECT_EQ(Canonical(CoverFromEdge(disjoint, ElementSet(4, {0, 1})).covers),
            (Lists{{0, 2, 3}, {1, 2, 3}}));

  EXPECT_THROW(CoverFromEdge(f, ElementSet(3, {1})), ValidationError);
}

TEST(FullCoverTest, CoversAreFullOnRandomFamilies) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SetFamily f = testing::SmallRandomFamily(seed);
    const SetFamily simple(f.universe_size(), Minimize(f.sets()));
    for (CoverStrategy strategy : {CoverStrategy::kSmallestEdge, CoverStrategy::kLargestEdge}) {
      const FullCover cover = DefaultCover(simple, strategy);
      EXPECT_TRUE(IsFullCover(cover, simple)) << "seed " << seed;
      if (simple.size() >= 2) EXPECT_GE(cover.covers.size(), 2u);
    }

    const MhsCollection tr = BruteForceMhs(simple);
    for (const ElementSet& t : tr.sets) {
      EXPECT_TRUE(IsFullCover(CoverFromTransversal(simple, t), AsFamily(tr)));
    }
    for (const ElementSet& e : simple) {
      EXPECT_TRUE(IsFullCover(CoverFromEdge(simple, e), AsFamily(tr)));
    }
  }
}

TEST(FullCoverDualizeTest, Examples) {
  EXPECT_EQ(Canonical(FullCoverDualize(Family({{2, 3}, {1, 3}}))), (Lists{{1, 2}, {3}}));
  EXPECT_EQ(FullCoverDualize(Family({{0, 1}, {2, 3}})).sets.size(), 4u);
  const SetFamily f = testing::FrozenFamily();
  EXPECT_EQ(Canonical(FullCoverDualize(f)), Canonical(Mmcs(f).collection));
  EXPECT_EQ(FullCoverDualize(f, {.base_threshold = 1}).sets.size(), testing::kFrozenCount);
}

TEST(FullCoverDualizeTest, EqualsOracle) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const SetFamily f = testing::SmallRandomFamily(seed);
    const Lists expected = Canonical(BruteForceMhs(f));
    for (std::size_t threshold : {1, 2, 8}) {
      EXPECT_EQ(Canonical(FullCoverDualize(f, {.base_threshold = threshold})), expected)
          << "seed " << seed << " threshold " << threshold;
      EXPECT_EQ(Canonical(FullCoverDualize(
                    f, {.base_threshold = threshold, .strategy = CoverStrategy::kLargestEdge})),
                expected)
          << "largest edge, seed " << seed << " threshold " << threshold;
    }
  }
}

TEST(FullCoverDualizeTest, WorkerInvariance) {
  for (std::size_t workers : {1, 2, 4, 8}) {
    EXPECT_EQ(FullCoverDualize(MatchingGraph(8), {.base_threshold = 2, .workers = workers})
                  .sets.size(),
              256u);
  }
  EXPECT_THROW(FullCoverDualize(MatchingGraph(2), {.workers = 0}), ValidationError);
}

}  // namespace
}  // namespace mhs
