#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "wreath/base_group.hpp"
#include "wreath/element.hpp"
#include "wreath/scalar.hpp"
#include "wreath/tree.hpp"

namespace wreath {

inline constexpr std::size_t kDefaultElementBudget = 10'000'000;

/// Element budget for the brute-force oracles: WREATH_ELEMENT_BUDGET when
/// set to a positive integer, kDefaultElementBudget otherwise.
std::size_t element_budget_from_env();

/// Sigma = {a, a^-1, s, s^-1}, duplicates removed (a = a^-1 in Z/2).
std::vector<WreathElement> sigma_generators(const GroupSpec& spec);
std::string describe_generators(const GroupSpec& spec);

using LengthMap = std::unordered_map<WreathElement, std::int64_t, WreathElementHash>;

/// Word length of every element of the radius-`radius_cap` ball, by
/// layer-by-layer breadth-first search of the Cayley graph. Throws
/// BudgetExceeded once more than `budget` elements have been discovered.
LengthMap cayley_bfs(const GroupSpec& spec, std::int64_t radius_cap, std::size_t budget = kDefaultElementBudget);

struct BallReport {
  std::int64_t radius = 0;
  std::size_t element_count = 0;
  /// Up to the requested cap, sorted.
  std::vector<WreathElement> elements;
  std::string generators;
};

/// One report per radius 0..radius from a single search.
std::vector<BallReport> ball_reports(const GroupSpec& spec, std::int64_t radius, std::size_t element_cap = 0,
                                     std::size_t budget = kDefaultElementBudget);

/// Distance by bidirectional breadth-first search in the tree truncated to
/// lamp values of word length <= value_radius. Throws DomainError when a tail
/// value lies outside that ball and BudgetExceeded when the visited set
/// outgrows `budget`.
std::int64_t tree_bfs_dist(const TreeVertex& u, const TreeVertex& v, std::int64_t value_radius,
                           std::size_t budget = kDefaultElementBudget);

/// Outcome of counting {g : d(z, g z) <= R} for the action on
/// T+ x T- x l^p(Z; X, b) with z = (Lambda+, Lambda-, (b)_i). X is H with its
/// word metric when H is finite and the real line when H = Z; in both cases
/// d(b, h b) = |h|.
struct PropernessReport {
  Rational radius;
  Rational p;
  std::size_t count = 0;
  /// Witness constraints from the finiteness argument.
  std::int64_t shift_bound = 0;     // |n| <= shift_bound
  std::int64_t support_bound = 0;   // lamps vanish outside [-support_bound, support_bound]
  std::vector<GroupElement> value_ball;  // lamp values drawn from here
  /// (2 shift_bound + 1) |B|^(2 support_bound + 1), possibly huge.
  long double superset_size = 0;
  std::string space;
};

/// d(z, g z)^p <= R^p for the given component distances; exact when p is an
/// integer.
bool product_distance_within(std::int64_t d_plus, std::int64_t d_minus, const std::vector<std::int64_t>& lamp_lengths,
                             const Rational& radius, const Rational& p);

/// Counts the ball by walking the finite superset (|n| <= R, support in
/// [-R, R], values in B) and filtering by the actual product distance. Throws
/// DomainError for R < 0 or p < 1.
PropernessReport properness_check(const GroupSpec& spec, const Rational& radius, const Rational& p);

/// Word-length radius guaranteed to contain {g : d(z, g z) <= R}: every such
/// g has |g| <= d+ + d- + sum |l_i| with the lamps spread over at most
/// d+ + d- + 1 positions.
std::int64_t properness_scan_radius(const GroupSpec& spec, const Rational& radius, const Rational& p);

/// Independent count: scan the Cayley ball of properness_scan_radius and
/// filter using geodesic tree distances.
std::size_t properness_exhaustive_count(const GroupSpec& spec, const Rational& radius, const Rational& p,
                                        std::size_t budget = kDefaultElementBudget);

}  // namespace wreath
