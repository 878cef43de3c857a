#include "gtest/gtest.h"
#include "mhs/errors.h"
#include "mhs/generators.h"
#include "mhs/oracle.h"
#include "test_util.h"

namespace mhs {
namespace {

using ::mhs::testing::Canonical;
using ::mhs::testing::Family;
using ::mhs::testing::Lists;

TEST(BruteForceMhsTest, WorkedExamples) {
  EXPECT_EQ(Canonical(BruteForceMhs(Family({{2, 3}, {1, 3}}))), (Lists{{1, 2}, {3}}));
  EXPECT_EQ(Canonical(BruteForceMhs(Family({{0, 1}, {2, 3}}))),
            (Lists{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(Canonical(BruteForceMhs(Family({{0, 1}, {2}}))), (Lists{{0, 2}, {1, 2}}));
}

TEST(BruteForceMhsTest, DegenerateFamilies) {
  EXPECT_EQ(Canonical(BruteForceMhs(Family({}))), (Lists{{}}));
  const MhsCollection blocked = BruteForceMhs(Family({{1}, {}}));
  EXPECT_TRUE(blocked.sets.empty());
  EXPECT_TRUE(blocked.unhittable);
}

TEST(BruteForceMhsTest, FrozenInstance) {
  const SetFamily f =
      Family({{4, 5}, {1, 6}, {2, 3, 4}, {1, 2, 8}, {2, 7}, {0, 5, 7, 9}, {4, 9}, {3, 8, 9}});
  const Lists c = Canonical(BruteForceMhs(f));
  ASSERT_EQ(c.size(), 19u);
  EXPECT_EQ(c.front(), (std::vector<Element>{0, 1, 2, 3, 4}));
  EXPECT_EQ(c[6], (std::vector<Element>{1, 2, 4, 9}));
  EXPECT_EQ(c.back(), (std::vector<Element>{4, 6, 7, 8}));
  EXPECT_EQ(Canonical(BruteForceMhs(f, 4)),
            (Lists{{1, 2, 4, 9}, {1, 2, 5, 9}, {1, 3, 4, 7}, {1, 4, 7, 8}, {1, 4, 7, 9},
                   {2, 4, 6, 9}, {2, 5, 6, 9}, {4, 6, 7, 8}}));
}

TEST(BruteForceMhsTest, CutoffFiltersFullResult) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SetFamily f = testing::SmallRandomFamily(seed);
    const MhsCollection full = BruteForceMhs(f);
    for (std::size_t c = 0; c <= 6; ++c) {
      const MhsCollection cut = BruteForceMhs(f, c);
      EXPECT_EQ(Canonical(cut), Canonical(FilterByCutoff(full, c)));
      EXPECT_FALSE(cut.complete);
    }
    EXPECT_TRUE(full.complete);
  }
}

TEST(BruteForceMhsTest, MatchingCounts) {
  for (std::size_t n = 0; n <= 8; ++n) {
    EXPECT_EQ(BruteForceMhs(MatchingGraph(n)).sets.size(), std::size_t{1} << n);
  }
}

TEST(BruteForceMhsTest, Involution) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SetFamily f = testing::SmallRandomFamily(seed);
    const SetFamily simple(f.universe_size(), Minimize(f.sets()));
    EXPECT_EQ(Canonical(BruteForceMhs(AsFamily(BruteForceMhs(simple)))), Canonical(simple.sets()))
        << "seed " << seed;
  }
}

TEST(BruteForceMhsTest, RefusesLargeUniverse) {
  EXPECT_THROW(BruteForceMhs(MatchingGraph(11)), OracleLimitError);
  EXPECT_NO_THROW(BruteForceMhs(MatchingGraph(11), std::nullopt, 22));
  EXPECT_THROW(BruteForceMhs(Family({{0}}, 40), std::nullopt, 64), OracleLimitError);
}

TEST(CheckDualityTest, Examples) {
  const SetFamily h = Family({{2, 3}, {1, 3}});
  EXPECT_TRUE(CheckDuality(h, Family({{3}, {1, 2}}, 4)).equal);

  const DualityVerdict missing = CheckDuality(h, Family({{3}}, 4));
  EXPECT_FALSE(missing.equal);
  ASSERT_TRUE(missing.witness.has_value());
  EXPECT_EQ(missing.witness->elements(), (std::vector<Element>{1, 2}));
  EXPECT_EQ(missing.kind, WitnessKind::kMissing);

  EXPECT_TRUE(CheckDuality(Family({{0}}), Family({{0}})).equal);
}

TEST(CheckDualityTest, ClassifiesWitnesses) {
  const SetFamily h = Family({{2, 3}, {1, 3}});
  const DualityVerdict not_hitting = CheckDuality(h, Family({{3}, {1, 2}, {2}}, 4));
  EXPECT_FALSE(not_hitting.equal);
  EXPECT_EQ(not_hitting.kind, WitnessKind::kNotHitting);
  EXPECT_EQ(not_hitting.witness->elements(), (std::vector<Element>{2}));

  const DualityVerdict not_minimal = CheckDuality(h, Family({{1, 2, 3}}, 4));
  EXPECT_FALSE(not_minimal.equal);
  EXPECT_EQ(not_minimal.kind, WitnessKind::kNotMinimal);
}

}  // namespace
}  // namespace mhs
