#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wreath/error.hpp"
#include "wreath/literal.hpp"
#include "wreath/oracles.hpp"
#include "wreath/tree.hpp"

using namespace wreath;

namespace {
const GroupSpec kZ2 = GroupSpec::cyclic(2);
const GroupSpec kZ = GroupSpec::integers();

WreathElement el(const GroupSpec& spec, const char* text) { return parse_element(spec, text); }
TreeVertex vx(const GroupSpec& spec, const char* text) { return parse_vertex(spec, text); }
}  // namespace

TEST(TreeVertex, SupportRuleIsEnforced) {
  EXPECT_NO_THROW(TreeVertex(TreeSide::Plus, 2, LampConfig::from_entries(kZ2, {{1, 1}})));
  EXPECT_THROW(TreeVertex(TreeSide::Plus, 2, LampConfig::from_entries(kZ2, {{2, 1}})), DomainError);
  EXPECT_NO_THROW(TreeVertex(TreeSide::Minus, 2, LampConfig::from_entries(kZ2, {{3, 1}})));
  EXPECT_THROW(TreeVertex(TreeSide::Minus, 2, LampConfig::from_entries(kZ2, {{2, 1}})), DomainError);
}

TEST(TreeVertex, ParentAndChildren) {
  const TreeVertex v = vx(kZ, "T+ [1 | 2@-1]");
  EXPECT_EQ(v.parent(), vx(kZ, "T+ [0 | 2@-1]"));
  EXPECT_EQ(v.parent().parent(), vx(kZ, "T+ [-1 |]"));
  EXPECT_EQ(v.child(3), vx(kZ, "T+ [2 | 2@-1,3@1]"));
  EXPECT_EQ(v.child(0), vx(kZ, "T+ [2 | 2@-1]"));
  EXPECT_EQ(v.child(3).parent(), v);
  EXPECT_EQ(v.ancestor(-1), vx(kZ, "T+ [-1 |]"));

  const TreeVertex w = vx(kZ2, "T- [-1 | 1@1]");
  EXPECT_EQ(w.parent(), vx(kZ2, "T- [0 | 1@1]"));
  EXPECT_EQ(w.parent().parent(), vx(kZ2, "T- [1 |]"));
  EXPECT_EQ(w.child(1), vx(kZ2, "T- [-2 | 1@-1,1@1]"));
  EXPECT_TRUE(adjacent(w, w.parent()));
  EXPECT_TRUE(adjacent(w.parent(), w));
  EXPECT_FALSE(adjacent(w, w));
  EXPECT_FALSE(adjacent(w, w.parent().parent()));
}

TEST(TreeVertex, VertexOfCosets) {
  EXPECT_EQ(vertex_of(el(kZ2, "(1@-1,1@0,1@3;1)"), TreeSide::Plus), vx(kZ2, "T+ [1 | 1@-1,1@0]"));
  EXPECT_EQ(vertex_of(el(kZ2, "(1@-1,1@0,1@3;1)"), TreeSide::Minus), vx(kZ2, "T- [1 | 1@3]"));
  EXPECT_EQ(vertex_of(WreathElement::lamp_generator(kZ2), TreeSide::Plus), TreeVertex::base(TreeSide::Plus, kZ2));
  EXPECT_EQ(vertex_of(WreathElement::lamp_generator(kZ2), TreeSide::Minus), TreeVertex::base(TreeSide::Minus, kZ2));
}

TEST(TreeDistance, ClosedFormExamples) {
  EXPECT_EQ(dist_from_base(el(kZ2, "(1@-1;0)"), TreeSide::Plus), 2);
  EXPECT_EQ(dist_from_base(el(kZ2, "(1@1;-1)"), TreeSide::Minus), 3);
  EXPECT_EQ(dist_from_base(el(kZ2, "(;-4)"), TreeSide::Plus), 4);
  EXPECT_EQ(dist_from_base(el(kZ2, "(1@-3;2)"), TreeSide::Plus), 8);
  EXPECT_EQ(dist_from_base(el(kZ2, "(1@3;2)"), TreeSide::Plus), 2);
  EXPECT_EQ(dist_from_base(el(kZ2, "(1@3;-2)"), TreeSide::Minus), 8);
}

TEST(TreeDistance, GeodesicPath) {
  const TreeVertex base = TreeVertex::base(TreeSide::Plus, kZ2);
  const TreeVertex target = vertex_of(el(kZ2, "(1@-1;0)"), TreeSide::Plus);
  const auto path = geodesic(base, target);
  ASSERT_EQ(path.size(), 3u);
  EXPECT_EQ(format_vertex(path[1]), "T+ [-1 |]");
  EXPECT_EQ(meet_level(base, target), -1);
  EXPECT_EQ(geodesic(target, target).size(), 1u);
  EXPECT_THROW(geodesic(base, TreeVertex::base(TreeSide::Minus, kZ2)), DomainError);
}

TEST(TreeDistance, OracleExamples) {
  const TreeVertex bp = TreeVertex::base(TreeSide::Plus, kZ2);
  const TreeVertex bm = TreeVertex::base(TreeSide::Minus, kZ2);
  EXPECT_EQ(tree_bfs_dist(bp, bp, 1), 0);
  EXPECT_EQ(tree_bfs_dist(bp, vx(kZ2, "T+ [0 | 1@-1]"), 1), 2);
  EXPECT_EQ(tree_bfs_dist(bm, vx(kZ2, "T- [-1 | 1@1]"), 1), 3);
  EXPECT_THROW(tree_bfs_dist(bp, vx(kZ, "T+ [0 | 3@-1]").ancestor(-1), 1), DomainError);
  EXPECT_THROW(tree_bfs_dist(TreeVertex::base(TreeSide::Plus, kZ), vx(kZ, "T+ [0 | 3@-1]"), 1), DomainError);
}

TEST(TreeDistance, PropertiesOnRandomVertices) {
  auto rng = test_support::seeded(31);
  for (const GroupSpec& spec : {kZ2, GroupSpec::cyclic(3), kZ}) {
    for (TreeSide side : {TreeSide::Plus, TreeSide::Minus}) {
      const TreeVertex base = TreeVertex::base(side, spec);
      for (int i = 0; i < 200; ++i) {
        const WreathElement x = test_support::small_element(spec, rng);
        const WreathElement g = test_support::small_element(spec, rng);
        const TreeVertex u = vertex_of(x, side);
        const TreeVertex v = test_support::random_vertex(spec, side, rng);
        const std::int64_t d = dist(u, v);
        const auto path = geodesic(u, v);
        ASSERT_EQ(static_cast<std::int64_t>(path.size()), d + 1);
        ASSERT_EQ(path.front(), u);
        ASSERT_EQ(path.back(), v);
        for (std::size_t k = 1; k < path.size(); ++k) ASSERT_TRUE(adjacent(path[k - 1], path[k]));
        ASSERT_EQ(dist(v, u), d);
        ASSERT_EQ(dist(base, u), dist_from_base(x, side));
        ASSERT_EQ(act(g, u), vertex_of(mul(g, x), side));
        ASSERT_EQ(dist(act(g, u), act(g, v)), d);
        ASSERT_LE(dist(base, v), dist(base, u) + d);
      }
    }
  }
}

TEST(TreeDistance, TreeBfsAgreesOnZLamps) {
  auto rng = test_support::seeded(32);
  for (int i = 0; i < 60; ++i) {
    const TreeSide side = i % 2 ? TreeSide::Plus : TreeSide::Minus;
    const TreeVertex u = vertex_of(random_element(kZ, rng, 2, 2, 3), side);
    const TreeVertex v = vertex_of(random_element(kZ, rng, 2, 2, 3), side);
    ASSERT_EQ(tree_bfs_dist(u, v, 2), dist(u, v));
  }
}
