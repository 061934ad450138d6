#pragma once

#include <cstdint>
#include <random>

#include "wreath/compression.hpp"
#include "wreath/element.hpp"
#include "wreath/tree.hpp"

namespace wreath::test_support {

inline std::mt19937_64 seeded(std::uint64_t seed) { return std::mt19937_64(seed); }

inline WreathElement small_element(const GroupSpec& spec, std::mt19937_64& rng) {
  return random_element(spec, rng, 4, spec.is_finite() ? spec.diameter() : 2, 5);
}

inline TreeVertex random_vertex(const GroupSpec& spec, TreeSide side, std::mt19937_64& rng) {
  return vertex_of(small_element(spec, rng), side);
}

}  // namespace wreath::test_support
