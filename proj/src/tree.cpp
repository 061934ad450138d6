#include "wreath/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "wreath/error.hpp"

namespace wreath {

const char* to_string(TreeSide side) noexcept { return side == TreeSide::Plus ? "T+" : "T-"; }

TreeVertex::TreeVertex(TreeSide side, std::int64_t level, LampConfig tail)
    : side_(side), level_(level), tail_(std::move(tail)) {
  if (tail_.empty()) return;
  if (side_ == TreeSide::Plus && *tail_.max_position() >= level_)
    throw DomainError("T+ vertex tail must lie strictly below level " + std::to_string(level_));
  if (side_ == TreeSide::Minus && *tail_.min_position() <= level_)
    throw DomainError("T- vertex tail must lie strictly above level " + std::to_string(level_));
}

TreeVertex TreeVertex::parent() const {
  if (side_ == TreeSide::Plus) return {side_, level_ - 1, tail_.restricted_below(level_ - 1)};
  return {side_, level_ + 1, tail_.restricted_above(level_ + 1)};
}

TreeVertex TreeVertex::child(std::int64_t value) const {
  const std::int64_t next = side_ == TreeSide::Plus ? level_ + 1 : level_ - 1;
  return {side_, next, tail_.with(level_, value)};
}

TreeVertex TreeVertex::ancestor(std::int64_t level) const {
  if (side_ == TreeSide::Plus) {
    if (level > level_) throw DomainError("T+ ancestors lie at lower levels");
    return {side_, level, tail_.restricted_below(level)};
  }
  if (level < level_) throw DomainError("T- ancestors lie at higher levels");
  return {side_, level, tail_.restricted_above(level)};
}

std::strong_ordering operator<=>(const TreeVertex& a, const TreeVertex& b) noexcept {
  if (auto c = a.side_ <=> b.side_; c != 0) return c;
  if (auto c = a.level_ <=> b.level_; c != 0) return c;
  return a.tail_ <=> b.tail_;
}

std::size_t TreeVertexHash::operator()(const TreeVertex& v) const noexcept {
  std::size_t h = v.tail().hash();
  h ^= std::hash<std::int64_t>{}(v.level()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ (v.side() == TreeSide::Plus ? 0x5bd1e995U : 0x27d4eb2dU);
}

bool adjacent(const TreeVertex& u, const TreeVertex& v) noexcept {
  if (u.side() != v.side() || u.group() != v.group()) return false;
  if (std::abs(u.level() - v.level()) != 1) return false;
  const bool v_is_parent = u.side() == TreeSide::Plus ? v.level() < u.level() : v.level() > u.level();
  return v_is_parent ? u.parent() == v : v.parent() == u;
}

TreeVertex vertex_of(const WreathElement& x, TreeSide side) {
  if (side == TreeSide::Plus) return {side, x.shift(), x.lamps().restricted_below(x.shift())};
  return {side, x.shift(), x.lamps().restricted_above(x.shift())};
}

TreeVertex act(const WreathElement& g, const TreeVertex& v) { return vertex_of(mul(g, v.representative()), v.side()); }

namespace {

void require_same_tree(const TreeVertex& u, const TreeVertex& v) {
  if (u.side() != v.side()) throw DomainError("vertices lie in different trees");
  if (u.group() != v.group()) throw DomainError("vertices belong to different wreath products");
}

}  // namespace

std::int64_t meet_level(const TreeVertex& u, const TreeVertex& v) {
  require_same_tree(u, v);
  const auto a = u.tail().entries();
  const auto b = v.tail().entries();
  if (u.side() == TreeSide::Plus) {
    // Lowest position where the tails disagree.
    std::int64_t first_diff = std::numeric_limits<std::int64_t>::max();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        first_diff = a[i].first;
        break;
      }
      if (i == a.size() || b[j].first < a[i].first) {
        first_diff = b[j].first;
        break;
      }
      if (a[i].second != b[j].second) {
        first_diff = a[i].first;
        break;
      }
      ++i;
      ++j;
    }
    return std::min({u.level(), v.level(), first_diff});
  }
  // Highest position where the tails disagree.
  std::int64_t last_diff = std::numeric_limits<std::int64_t>::min();
  std::size_t i = a.size(), j = b.size();
  while (i > 0 || j > 0) {
    if (j == 0 || (i > 0 && a[i - 1].first > b[j - 1].first)) {
      last_diff = a[i - 1].first;
      break;
    }
    if (i == 0 || b[j - 1].first > a[i - 1].first) {
      last_diff = b[j - 1].first;
      break;
    }
    if (a[i - 1].second != b[j - 1].second) {
      last_diff = a[i - 1].first;
      break;
    }
    --i;
    --j;
  }
  return std::max({u.level(), v.level(), last_diff});
}

std::vector<TreeVertex> geodesic(const TreeVertex& u, const TreeVertex& v) {
  const std::int64_t meet = meet_level(u, v);
  const std::int64_t toward = u.side() == TreeSide::Plus ? -1 : 1;
  std::vector<TreeVertex> path;
  for (std::int64_t k = u.level(); k != meet; k += toward) path.push_back(u.ancestor(k));
  path.push_back(u.ancestor(meet));
  std::vector<TreeVertex> down;
  for (std::int64_t k = v.level(); k != meet; k += toward) down.push_back(v.ancestor(k));
  path.insert(path.end(), down.rbegin(), down.rend());
  return path;
}

std::int64_t dist(const TreeVertex& u, const TreeVertex& v) {
  const std::int64_t meet = meet_level(u, v);
  return std::abs(u.level() - meet) + std::abs(v.level() - meet);
}

std::int64_t dist_from_base(const WreathElement& x, TreeSide side) {
  const std::int64_t n = x.shift();
  if (x.lamps().empty()) return std::abs(n);
  if (side == TreeSide::Plus) {
    const std::int64_t m = *x.lamps().min_position();
    if (n <= m || m >= 0) return std::abs(n);
    return n - 2 * m;
  }
  const std::int64_t big_m = *x.lamps().max_position();
  if (n >= big_m || big_m <= 0) return std::abs(n);
  return 2 * big_m - n;
}

}  // namespace wreath
