#include <gtest/gtest.h>

#include <cstdlib>
#include <vector>

#include "test_support.hpp"
#include "wreath/error.hpp"
#include "wreath/literal.hpp"
#include "wreath/oracles.hpp"

using namespace wreath;

namespace {
const GroupSpec kZ2 = GroupSpec::cyclic(2);
const GroupSpec kZ3 = GroupSpec::cyclic(3);
const GroupSpec kZ = GroupSpec::integers();

// Cumulative ball sizes from tests/oracles/lamplighter_bfs.py.
const std::vector<std::size_t> kBallZ2 = {1, 4, 10, 22, 44, 84, 155, 278, 490};
const std::vector<std::size_t> kBallZ3 = {1, 5, 15, 41, 99, 229, 515};
const std::vector<std::size_t> kBallZ = {1, 5, 17, 53, 153, 421, 1125, 2937};

// Counts from tests/oracles/properness_count.py, R = 0..4.
const std::vector<std::size_t> kPropernessP1 = {1, 2, 4, 10, 16};
const std::vector<std::size_t> kPropernessP2 = {1, 2, 10, 22, 48};

std::vector<std::size_t> sizes(const GroupSpec& spec, std::int64_t radius) {
  std::vector<std::size_t> out;
  for (const auto& r : ball_reports(spec, radius)) out.push_back(r.element_count);
  return out;
}
}  // namespace

TEST(Generators, DuplicatesRemoved) {
  EXPECT_EQ(sigma_generators(kZ2).size(), 3u);
  EXPECT_EQ(sigma_generators(kZ3).size(), 4u);
  EXPECT_EQ(sigma_generators(kZ).size(), 4u);
}

TEST(CayleyBfs, RadiusZeroIsTheIdentity) {
  const LengthMap m = cayley_bfs(kZ2, 0);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.at(WreathElement::identity(kZ2)), 0);
}

TEST(CayleyBfs, FrozenBallSizes) {
  EXPECT_EQ(sizes(kZ2, 8), kBallZ2);
  EXPECT_EQ(sizes(kZ3, 6), kBallZ3);
  EXPECT_EQ(sizes(kZ, 7), kBallZ);
}

TEST(CayleyBfs, FrozenLengths) {
  const LengthMap m2 = cayley_bfs(kZ2, 6);
  EXPECT_EQ(m2.at(parse_element(kZ2, "(1@1;0)")), 3);
  EXPECT_EQ(m2.at(parse_element(kZ2, "(1@-1,1@1;0)")), 6);
  EXPECT_EQ(m2.at(parse_element(kZ2, "(1@0;0)")), 1);
  const LengthMap mz = cayley_bfs(kZ, 6);
  EXPECT_EQ(mz.at(parse_element(kZ, "(-3@2;2)")), 5);
  EXPECT_EQ(mz.at(parse_element(kZ, "(2@-1,1@1;-1)")), 6);
}

TEST(CayleyBfs, FormulaMatchesOnTheIntegerLampBall) {
  for (const auto& [x, len] : cayley_bfs(kZ, 6)) ASSERT_EQ(word_length(x), len) << format_element(x);
}

TEST(CayleyBfs, BudgetIsEnforced) {
  EXPECT_THROW(cayley_bfs(kZ2, 8, 100), BudgetExceeded);
  EXPECT_THROW(cayley_bfs(kZ2, -1), DomainError);
  try {
    cayley_bfs(kZ2, 8, 100);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 100u);
  }
}

TEST(CayleyBfs, ElementCapKeepsSortedPrefix) {
  const auto reports = ball_reports(kZ2, 2, 3);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[2].element_count, 10u);
  ASSERT_EQ(reports[2].elements.size(), 3u);
  EXPECT_TRUE(std::is_sorted(reports[2].elements.begin(), reports[2].elements.end()));
  EXPECT_FALSE(reports[0].generators.empty());
}

TEST(Budget, ReadFromEnvironment) {
  ::setenv("WREATH_ELEMENT_BUDGET", "1234", 1);
  EXPECT_EQ(element_budget_from_env(), 1234u);
  ::setenv("WREATH_ELEMENT_BUDGET", "nonsense", 1);
  EXPECT_EQ(element_budget_from_env(), kDefaultElementBudget);
  ::unsetenv("WREATH_ELEMENT_BUDGET");
  EXPECT_EQ(element_budget_from_env(), kDefaultElementBudget);
}

TEST(TreeBfs, BudgetIsEnforced) {
  const TreeVertex b = TreeVertex::base(TreeSide::Plus, GroupSpec::cyclic(5));
  EXPECT_THROW(tree_bfs_dist(b, b.ancestor(-12), 2, 50), BudgetExceeded);
}

TEST(Properness, RadiusZeroIsTheIdentity) {
  for (const Rational p : {Rational(1), Rational(2), Rational(3, 2)})
    EXPECT_EQ(properness_check(kZ2, Rational(0), p).count, 1u);
}

TEST(Properness, FrozenCountsAndCrossCheck) {
  for (std::int64_t r = 0; r <= 4; ++r) {
    const auto p1 = properness_check(kZ2, Rational(r), Rational(1));
    const auto p2 = properness_check(kZ2, Rational(r), Rational(2));
    EXPECT_EQ(p1.count, kPropernessP1[r]);
    EXPECT_EQ(p2.count, kPropernessP2[r]);
    EXPECT_EQ(properness_exhaustive_count(kZ2, Rational(r), Rational(1)), p1.count);
    EXPECT_EQ(properness_exhaustive_count(kZ2, Rational(r), Rational(2)), p2.count);
    EXPECT_EQ(p1.shift_bound, r);
    EXPECT_EQ(p1.support_bound, r);
    EXPECT_LE(static_cast<long double>(p1.count), p1.superset_size);
  }
}

TEST(Properness, MonotoneInRadiusForRationalInputs) {
  std::size_t previous = 0;
  for (std::int64_t num = 0; num <= 14; ++num) {
    const auto rep = properness_check(kZ3, Rational(num, 4), Rational(3, 2));
    EXPECT_GE(rep.count, previous);
    previous = rep.count;
  }
  EXPECT_EQ(properness_check(kZ3, Rational(5, 2), Rational(3, 2)).count,
            properness_exhaustive_count(kZ3, Rational(5, 2), Rational(3, 2)));
}

TEST(Properness, IntegerLampsUseTheRealLine) {
  const auto rep = properness_check(kZ, Rational(3), Rational(2));
  EXPECT_EQ(rep.count, properness_exhaustive_count(kZ, Rational(3), Rational(2)));
  EXPECT_EQ(rep.value_ball.size(), 7u);
}

TEST(Properness, RejectsBadArguments) {
  EXPECT_THROW(properness_check(kZ2, Rational(-1), Rational(1)), DomainError);
  EXPECT_THROW(properness_check(kZ2, Rational(1), Rational(1, 2)), DomainError);
}

TEST(Properness, ExactComparisonAtTheBoundary) {
  EXPECT_TRUE(product_distance_within(1, 1, {}, Rational(2), Rational(1)));
  EXPECT_FALSE(product_distance_within(1, 1, {1}, Rational(2), Rational(1)));
  EXPECT_TRUE(product_distance_within(3, 4, {}, Rational(5), Rational(2)));
  EXPECT_FALSE(product_distance_within(3, 4, {1}, Rational(5), Rational(2)));
  EXPECT_TRUE(product_distance_within(1, 1, {}, Rational(3, 2), Rational(2)));
  EXPECT_FALSE(product_distance_within(1, 1, {1}, Rational(3, 2), Rational(2)));
}

TEST(Properness, LargeInputsFallBackWithoutOverflow) {
  EXPECT_TRUE(product_distance_within(1000, 0, {}, Rational(1000), Rational(16)));
  EXPECT_FALSE(product_distance_within(1001, 0, {}, Rational(1000), Rational(16)));
  EXPECT_TRUE(product_distance_within(1, 1, {}, Rational(2'000'001, 1'000'000), Rational(16)));
}
