#include <gtest/gtest.h>

#include "wreath/base_group.hpp"
#include "wreath/error.hpp"

using namespace wreath;

TEST(GroupSpec, CyclicNormalizesIntoResidues) {
  const GroupSpec z5 = GroupSpec::cyclic(5);
  EXPECT_EQ(z5.normalize(7), 2);
  EXPECT_EQ(z5.normalize(-1), 4);
  EXPECT_EQ(z5.normalize(-10), 0);
  EXPECT_EQ(z5.multiply(3, 4), 2);
  EXPECT_EQ(z5.inverse(2), 3);
  EXPECT_EQ(z5.inverse(0), 0);
}

TEST(GroupSpec, IntegersAreUntouched) {
  const GroupSpec z = GroupSpec::integers();
  EXPECT_EQ(z.normalize(-17), -17);
  EXPECT_EQ(z.multiply(-3, 5), 2);
  EXPECT_EQ(z.inverse(4), -4);
  EXPECT_EQ(z.length(-6), 6);
  EXPECT_FALSE(z.is_finite());
  EXPECT_EQ(z.order(), 0);
}

TEST(GroupSpec, WordLengthOnCyclicGroups) {
  const GroupSpec z2 = GroupSpec::cyclic(2);
  const GroupSpec z7 = GroupSpec::cyclic(7);
  EXPECT_EQ(z2.length(1), 1);
  EXPECT_EQ(z7.length(3), 3);
  EXPECT_EQ(z7.length(4), 3);
  EXPECT_EQ(z7.length(6), 1);
  EXPECT_EQ(z7.diameter(), 3);
  EXPECT_EQ(GroupSpec::cyclic(6).diameter(), 3);
}

TEST(GroupSpec, RejectsDegenerateOrders) {
  EXPECT_THROW(GroupSpec::cyclic(1), DomainError);
  EXPECT_THROW(GroupSpec::cyclic(0), DomainError);
  EXPECT_THROW(GroupSpec::cyclic(-3), DomainError);
  EXPECT_THROW(GroupSpec::integers().diameter(), DomainError);
}

TEST(GroupSpec, Names) {
  EXPECT_EQ(GroupSpec::integers().to_string(), "Z");
  EXPECT_EQ(GroupSpec::cyclic(12).to_string(), "Z/12");
  EXPECT_NE(GroupSpec::cyclic(2), GroupSpec::cyclic(3));
  EXPECT_NE(GroupSpec::cyclic(2), GroupSpec::integers());
}

TEST(GroupElement, ArithmeticAndMismatch) {
  const GroupSpec z3 = GroupSpec::cyclic(3);
  const GroupElement a = GroupElement::generator(z3);
  EXPECT_EQ(mul(a, a).value(), 2);
  EXPECT_TRUE(mul(mul(a, a), a).is_identity());
  EXPECT_EQ(inv(a).value(), 2);
  EXPECT_EQ(word_length(GroupElement(z3, 2)), 1);
  EXPECT_THROW(mul(a, GroupElement::generator(GroupSpec::cyclic(4))), DomainError);
}

TEST(GroupElement, Balls) {
  EXPECT_EQ(ball(GroupSpec::integers(), 2).size(), 5u);
  EXPECT_EQ(ball(GroupSpec::integers(), 2).front().value(), -2);
  EXPECT_EQ(ball(GroupSpec::cyclic(2), 5).size(), 2u);
  EXPECT_EQ(ball(GroupSpec::cyclic(7), 2).size(), 5u);
  EXPECT_EQ(ball(GroupSpec::cyclic(7), 0).size(), 1u);
  EXPECT_TRUE(ball(GroupSpec::cyclic(7), -1).empty());
}

TEST(GroupElement, GroupAxiomsOnSmallCyclics) {
  for (std::int64_t k = 2; k <= 9; ++k) {
    const GroupSpec g = GroupSpec::cyclic(k);
    for (std::int64_t x = 0; x < k; ++x) {
      EXPECT_EQ(g.multiply(x, g.inverse(x)), 0);
      EXPECT_EQ(g.length(x), g.length(g.inverse(x)));
      for (std::int64_t y = 0; y < k; ++y) {
        EXPECT_LE(g.length(g.multiply(x, y)), g.length(x) + g.length(y));
        for (std::int64_t z = 0; z < k; ++z)
          EXPECT_EQ(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z)));
      }
    }
  }
}
