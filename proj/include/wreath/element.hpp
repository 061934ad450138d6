#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wreath/base_group.hpp"

namespace wreath {

/// Finitely supported lamp configuration Z -> H in canonical form: entries
/// sorted by strictly increasing position, no identity values stored.
class LampConfig {
 public:
  /// (position, raw base-group value)
  using Entry = std::pair<std::int64_t, std::int64_t>;

  explicit LampConfig(GroupSpec spec) noexcept : spec_(spec) {}

  /// Builds a canonical configuration from arbitrary-order entries. Values are
  /// normalized and identity values dropped; a repeated position throws
  /// DomainError.
  static LampConfig from_entries(GroupSpec spec, std::vector<Entry> entries);

  const GroupSpec& group() const noexcept { return spec_; }
  std::span<const Entry> entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Value at `position` (identity outside the support).
  GroupElement at(std::int64_t position) const noexcept;
  std::optional<std::int64_t> min_position() const noexcept;
  std::optional<std::int64_t> max_position() const noexcept;

  /// Copy with the value at `position` replaced (identity erases).
  LampConfig with(std::int64_t position, std::int64_t value) const;
  /// Entries at positions < bound.
  LampConfig restricted_below(std::int64_t bound) const;
  /// Entries at positions > bound.
  LampConfig restricted_above(std::int64_t bound) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const LampConfig&, const LampConfig&) = default;
  friend std::strong_ordering operator<=>(const LampConfig& a, const LampConfig& b) noexcept;

 private:
  GroupSpec spec_;
  std::vector<Entry> entries_;
};

/// result_k = lamps_{k - n}
LampConfig shift_action(std::int64_t n, const LampConfig& lamps);
/// Pointwise product; throws DomainError on mismatched base groups.
LampConfig pointwise_product(const LampConfig& a, const LampConfig& b);
LampConfig pointwise_inverse(const LampConfig& a);

/// Element (lamps, shift) of H wr Z = (+_Z H) x| Z.
class WreathElement {
 public:
  WreathElement(LampConfig lamps, std::int64_t shift) noexcept : lamps_(std::move(lamps)), shift_(shift) {}

  static WreathElement identity(GroupSpec spec) noexcept { return {LampConfig(spec), 0}; }
  /// a: the base generator sitting at position 0.
  static WreathElement lamp_generator(GroupSpec spec);
  /// s: the positive generator of Z.
  static WreathElement shift_generator(GroupSpec spec) noexcept { return {LampConfig(spec), 1}; }

  const LampConfig& lamps() const noexcept { return lamps_; }
  std::int64_t shift() const noexcept { return shift_; }
  const GroupSpec& group() const noexcept { return lamps_.group(); }
  bool is_identity() const noexcept { return shift_ == 0 && lamps_.empty(); }

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend std::strong_ordering operator<=>(const WreathElement& a, const WreathElement& b) noexcept;

 private:
  LampConfig lamps_;
  std::int64_t shift_;
};

struct WreathElementHash {
  std::size_t operator()(const WreathElement& x) const noexcept;
};

/// (l, n)(m, p) = (l * shift_n(m), n + p). Throws DomainError on mismatched
/// base groups.
WreathElement mul(const WreathElement& x, const WreathElement& y);
WreathElement inv(const WreathElement& x);

/// Extremes of the lamp support and the total lamp cost sum_i |l_i|.
struct SupportStats {
  std::optional<std::int64_t> min_position;
  std::optional<std::int64_t> max_position;
  std::int64_t lamp_cost = 0;
};

SupportStats support_stats(const WreathElement& x) noexcept;

/// Shortest walk in Z from 0 to n visiting both m and M. Throws DomainError
/// when the lamps are empty.
std::int64_t l_z(const WreathElement& x);
std::int64_t l_z(std::int64_t n, std::int64_t m, std::int64_t max);

/// Word length with respect to {a^+-1, s^+-1}: |n| without lamps, otherwise
/// l_z(x) + lamp cost.
std::int64_t word_length(const WreathElement& x) noexcept;

}  // namespace wreath
