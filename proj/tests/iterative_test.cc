#include "gtest/gtest.h"
#include "mhs/generators.h"
#include "mhs/iterative.h"
#include "mhs/oracle.h"
#include "test_util.h"

namespace mhs {
namespace {

using ::mhs::testing::Canonical;
using ::mhs::testing::Family;
using ::mhs::testing::Lists;

TEST(BergeTest, Examples) {
  EXPECT_EQ(Canonical(Berge(Family({{2, 3}, {1, 3}}))), (Lists{{1, 2}, {3}}));
  EXPECT_EQ(Berge(Family({{0, 1}, {2, 3}})).sets.size(), 4u);
  EXPECT_TRUE(Berge(Family({{0, 1}, {2}}), 1).sets.empty());
}

TEST(BergeTest, FrozenInstance) {
  const SetFamily f = testing::FrozenFamily();
  EXPECT_EQ(Berge(f).sets.size(), testing::kFrozenCount);
  EXPECT_EQ(Berge(f, 4).sets.size(), testing::kFrozenCountAtMost4);
  EXPECT_EQ(Canonical(Berge(f, std::nullopt, SetOrder::kAscendingSize)),
            Canonical(BruteForceMhs(f)));
}

// After folding in the first i sets the working collection is Tr of that
// prefix; checked through the public entry point on every prefix.
TEST(BergeTest, PrefixInvariant) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SetFamily f = testing::SmallRandomFamily(seed, 10, 8);
    for (std::size_t i = 0; i <= f.size(); ++i) {
      const SetFamily prefix(f.universe_size(),
                             std::vector<ElementSet>(f.begin(), f.begin() + i));
      EXPECT_EQ(Canonical(Berge(prefix)), Canonical(BruteForceMhs(prefix)));
    }
  }
}

TEST(HstTest, Examples) {
  EXPECT_EQ(Canonical(Hst(Family({{2, 3}, {1, 3}}))), (Lists{{1, 2}, {3}}));
  EXPECT_EQ(Canonical(Hst(Family({}))), (Lists{{}}));
  EXPECT_EQ(Hst(Family({{0, 1}, {2, 3}}), 2).sets.size(), 4u);
  EXPECT_EQ(Hst(testing::FrozenFamily()).sets.size(), testing::kFrozenCount);
}

TEST(HsDagTest, Examples) {
  EXPECT_EQ(Canonical(HsDag(Family({{2, 3}, {1, 3}}))), (Lists{{1, 2}, {3}}));
  EXPECT_EQ(Canonical(HsDag(Family({{0}, {0, 1}}))), (Lists{{0}}));
  EXPECT_EQ(HsDag(Family({{0, 1}, {2, 3}})).sets.size(), 4u);
  EXPECT_EQ(HsDag(testing::FrozenFamily()).sets.size(), testing::kFrozenCount);
}

TEST(HsDagTest, RelabelsOnSmallerSet) {
  // The first label {0,1,2} is later superseded by {0}.
  const SetFamily f = Family({{0, 1, 2}, {0, 3}, {0}});
  EXPECT_EQ(Canonical(HsDag(f)), (Lists{{0}}));
}

TEST(TreeSearchTest, EqualOracleOnRandomFamilies) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const SetFamily f = testing::SmallRandomFamily(seed);
    const Lists expected = Canonical(BruteForceMhs(f));
    EXPECT_EQ(Canonical(Berge(f)), expected) << "berge seed " << seed;
    EXPECT_EQ(Canonical(Hst(f)), expected) << "hst seed " << seed;
    EXPECT_EQ(Canonical(HsDag(f)), expected) << "hsdag seed " << seed;
  }
}

TEST(TreeSearchTest, CutoffMatchesFilteredOracle) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const SetFamily f = RandomFamily({8, 6, 1, 4, seed});
    const MhsCollection full = BruteForceMhs(f);
    for (std::size_t c : {1, 2, 3, 5}) {
      const Lists expected = Canonical(FilterByCutoff(full, c));
      EXPECT_EQ(Canonical(Berge(f, c)), expected);
      EXPECT_EQ(Canonical(Hst(f, c)), expected);
      EXPECT_EQ(Canonical(HsDag(f, c)), expected);
    }
  }
}

TEST(TreeSearchTest, UnhittableFamily) {
  const SetFamily f = Family({{0}, {}});
  for (const MhsCollection& c : {Berge(f), Hst(f), HsDag(f)}) {
    EXPECT_TRUE(c.sets.empty());
    EXPECT_TRUE(c.unhittable);
  }
}

}  // namespace
}  // namespace mhs
