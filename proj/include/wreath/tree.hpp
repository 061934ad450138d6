#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "wreath/element.hpp"

namespace wreath {

/// Which of the two Bass-Serre trees of H wr Z. The Plus tree has vertex
/// stabilizers (+_{i >= -k} H), the Minus tree (+_{i <= -k} H).
enum class TreeSide { Plus, Minus };

const char* to_string(TreeSide side) noexcept;

/// Canonical form of a coset vertex: a level n and the part of the lamp
/// configuration the stabilizer does not absorb (positions < n on the Plus
/// tree, positions > n on the Minus tree).
///
/// Adjacency: the parent of (n, f) is (n-1, f|<n-1) on Plus and
/// (n+1, f|>n+1) on Minus; the children are obtained by choosing a value at
/// position n and stepping one level away from the parent.
class TreeVertex {
 public:
  /// Throws DomainError when the tail does not respect the side's support rule.
  TreeVertex(TreeSide side, std::int64_t level, LampConfig tail);

  static TreeVertex base(TreeSide side, GroupSpec spec) { return {side, 0, LampConfig(spec)}; }

  TreeSide side() const noexcept { return side_; }
  std::int64_t level() const noexcept { return level_; }
  const LampConfig& tail() const noexcept { return tail_; }
  const GroupSpec& group() const noexcept { return tail_.group(); }

  /// Canonical representative (tail, level) of the coset.
  WreathElement representative() const { return {tail_, level_}; }

  TreeVertex parent() const;
  /// Child reached through lamp value `value` at the branching position.
  TreeVertex child(std::int64_t value) const;
  /// Ancestor at `level` (must be on the parent side of this vertex).
  TreeVertex ancestor(std::int64_t level) const;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend std::strong_ordering operator<=>(const TreeVertex& a, const TreeVertex& b) noexcept;

 private:
  TreeSide side_;
  std::int64_t level_;
  LampConfig tail_;
};

struct TreeVertexHash {
  std::size_t operator()(const TreeVertex& v) const noexcept;
};

bool adjacent(const TreeVertex& u, const TreeVertex& v) noexcept;

/// Coset x.Lambda_side in canonical form.
TreeVertex vertex_of(const WreathElement& x, TreeSide side);

/// Left action of the group on a tree: vertex_of(g * rep(v)).
TreeVertex act(const WreathElement& g, const TreeVertex& v);

/// Level at which the geodesics from u and v to the common end meet.
std::int64_t meet_level(const TreeVertex& u, const TreeVertex& v);

/// Vertex sequence of the geodesic from u to v, both endpoints included.
/// Throws DomainError when the vertices lie in different trees.
std::vector<TreeVertex> geodesic(const TreeVertex& u, const TreeVertex& v);

/// Tree distance, computed without materializing the path.
std::int64_t dist(const TreeVertex& u, const TreeVertex& v);

/// Closed-form distance from the base vertex to x.Lambda_side.
std::int64_t dist_from_base(const WreathElement& x, TreeSide side);

}  // namespace wreath
