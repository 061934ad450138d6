#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

/// The base group H of a wreath product H wr Z, generated by a single
/// element a and its inverse. Only Z and the cyclic groups Z/k are built in.
class GroupSpec {
 public:
  enum class Kind { Integers, Cyclic };

  static GroupSpec integers() noexcept { return GroupSpec(Kind::Integers, 0); }
  /// Throws DomainError unless order >= 2.
  static GroupSpec cyclic(std::int64_t order);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Cyclic; }
  /// Order k of Z/k; 0 for Z.
  std::int64_t order() const noexcept { return order_; }

  // Raw value arithmetic. Values are residues in [0, k) for Z/k and
  // arbitrary integers for Z; all functions return normalized values.
  std::int64_t normalize(std::int64_t v) const noexcept;
  std::int64_t multiply(std::int64_t a, std::int64_t b) const noexcept;
  std::int64_t inverse(std::int64_t a) const noexcept;
  std::int64_t length(std::int64_t a) const noexcept;
  bool is_valid(std::int64_t v) const noexcept { return kind_ == Kind::Integers || (v >= 0 && v < order_); }

  /// Largest word length attained in H (floor(k/2) for Z/k). Throws for Z.
  std::int64_t diameter() const;

  /// Literal form: "Z" or "Z/k".
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(Kind kind, std::int64_t order) noexcept : kind_(kind), order_(order) {}

  Kind kind_;
  std::int64_t order_;
};

/// An element of a base group, tagged with the group it belongs to.
class GroupElement {
 public:
  /// Normalizes `value` into the canonical range of `spec`.
  GroupElement(GroupSpec spec, std::int64_t value) noexcept : spec_(spec), value_(spec.normalize(value)) {}

  static GroupElement identity(GroupSpec spec) noexcept { return GroupElement(spec, 0); }
  static GroupElement generator(GroupSpec spec) noexcept { return GroupElement(spec, 1); }

  const GroupSpec& spec() const noexcept { return spec_; }
  std::int64_t value() const noexcept { return value_; }
  bool is_identity() const noexcept { return value_ == 0; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  GroupSpec spec_;
  std::int64_t value_;
};

/// Group product; throws DomainError when the operands live in different groups.
GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupElement& a) noexcept;

/// Word length with respect to {a, a^-1}: |n| on Z, min(j, k-j) on Z/k.
std::int64_t word_length(const GroupElement& h) noexcept;

/// All elements of word length <= radius, sorted by value, without duplicates.
std::vector<GroupElement> ball(const GroupSpec& spec, std::int64_t radius);

}  // namespace wreath
