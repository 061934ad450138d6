#include "wreath/base_group.hpp"

#include <algorithm>
#include <cstdlib>

#include "wreath/error.hpp"

namespace wreath {

GroupSpec GroupSpec::cyclic(std::int64_t order) {
  if (order < 2) throw DomainError("cyclic group order must be at least 2, got " + std::to_string(order));
  return GroupSpec(Kind::Cyclic, order);
}

std::int64_t GroupSpec::normalize(std::int64_t v) const noexcept {
  if (kind_ == Kind::Integers) return v;
  std::int64_t r = v % order_;
  return r < 0 ? r + order_ : r;
}

std::int64_t GroupSpec::multiply(std::int64_t a, std::int64_t b) const noexcept {
  if (kind_ == Kind::Integers) return a + b;
  return normalize(a + b);
}

std::int64_t GroupSpec::inverse(std::int64_t a) const noexcept { return normalize(-a); }

std::int64_t GroupSpec::length(std::int64_t a) const noexcept {
  if (kind_ == Kind::Integers) return a < 0 ? -a : a;
  std::int64_t r = normalize(a);
  return std::min(r, order_ - r);
}

std::int64_t GroupSpec::diameter() const {
  if (kind_ == Kind::Integers) throw DomainError("Z has unbounded word metric");
  return order_ / 2;
}

std::string GroupSpec::to_string() const {
  if (kind_ == Kind::Integers) return "Z";
  return "Z/" + std::to_string(order_);
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  if (a.spec() != b.spec())
    throw DomainError("cannot multiply elements of " + a.spec().to_string() + " and " + b.spec().to_string());
  return GroupElement(a.spec(), a.spec().multiply(a.value(), b.value()));
}

GroupElement inv(const GroupElement& a) noexcept { return GroupElement(a.spec(), a.spec().inverse(a.value())); }

std::int64_t word_length(const GroupElement& h) noexcept { return h.spec().length(h.value()); }

std::vector<GroupElement> ball(const GroupSpec& spec, std::int64_t radius) {
  std::vector<GroupElement> out;
  if (radius < 0) return out;
  if (spec.kind() == GroupSpec::Kind::Integers) {
    out.reserve(static_cast<std::size_t>(2 * radius + 1));
    for (std::int64_t v = -radius; v <= radius; ++v) out.emplace_back(spec, v);
    return out;
  }
  for (std::int64_t v = 0; v < spec.order(); ++v)
    if (spec.length(v) <= radius) out.emplace_back(spec, v);
  return out;
}

}  // namespace wreath
