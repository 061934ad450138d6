#include "wreath/element.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "wreath/error.hpp"

namespace wreath {

namespace {

inline std::size_t mix(std::size_t seed, std::uint64_t v) noexcept {
  v += 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  v ^= v >> 30;
  v *= 0xbf58476d1ce4e5b9ULL;
  v ^= v >> 27;
  v *= 0x94d049bb133111ebULL;
  v ^= v >> 31;
  return seed ^ static_cast<std::size_t>(v);
}

void require_same_group(const GroupSpec& a, const GroupSpec& b) {
  if (a != b) throw DomainError("mismatched base groups " + a.to_string() + " and " + b.to_string());
}

}  // namespace

LampConfig LampConfig::from_entries(GroupSpec spec, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  LampConfig out(spec);
  out.entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && entries[i].first == entries[i - 1].first)
      throw DomainError("duplicate lamp position " + std::to_string(entries[i].first));
    std::int64_t v = spec.normalize(entries[i].second);
    if (v != 0) out.entries_.emplace_back(entries[i].first, v);
  }
  return out;
}

GroupElement LampConfig::at(std::int64_t position) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), position,
                             [](const Entry& e, std::int64_t p) { return e.first < p; });
  if (it != entries_.end() && it->first == position) return GroupElement(spec_, it->second);
  return GroupElement::identity(spec_);
}

std::optional<std::int64_t> LampConfig::min_position() const noexcept {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().first;
}

std::optional<std::int64_t> LampConfig::max_position() const noexcept {
  if (entries_.empty()) return std::nullopt;
  return entries_.back().first;
}

LampConfig LampConfig::with(std::int64_t position, std::int64_t value) const {
  LampConfig out = *this;
  value = spec_.normalize(value);
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), position,
                             [](const Entry& e, std::int64_t p) { return e.first < p; });
  bool present = it != out.entries_.end() && it->first == position;
  if (value == 0) {
    if (present) out.entries_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    out.entries_.insert(it, Entry{position, value});
  }
  return out;
}

LampConfig LampConfig::restricted_below(std::int64_t bound) const {
  LampConfig out(spec_);
  for (const auto& e : entries_) {
    if (e.first >= bound) break;
    out.entries_.push_back(e);
  }
  return out;
}

LampConfig LampConfig::restricted_above(std::int64_t bound) const {
  LampConfig out(spec_);
  for (const auto& e : entries_)
    if (e.first > bound) out.entries_.push_back(e);
  return out;
}

std::size_t LampConfig::hash() const noexcept {
  std::size_t h = mix(0, static_cast<std::uint64_t>(spec_.order()));
  for (const auto& [p, v] : entries_) {
    h = mix(h, static_cast<std::uint64_t>(p));
    h = mix(h, static_cast<std::uint64_t>(v));
  }
  return h;
}

std::strong_ordering operator<=>(const LampConfig& a, const LampConfig& b) noexcept {
  if (auto c = a.spec_ <=> b.spec_; c != 0) return c;
  return a.entries_ <=> b.entries_;
}

LampConfig shift_action(std::int64_t n, const LampConfig& lamps) {
  std::vector<LampConfig::Entry> shifted(lamps.entries().begin(), lamps.entries().end());
  for (auto& e : shifted) e.first += n;
  return LampConfig::from_entries(lamps.group(), std::move(shifted));
}

LampConfig pointwise_product(const LampConfig& a, const LampConfig& b) {
  require_same_group(a.group(), b.group());
  const GroupSpec& spec = a.group();
  std::vector<LampConfig::Entry> merged;
  merged.reserve(a.size() + b.size());
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      merged.push_back(*ia++);
    } else if (ia == ea || ib->first < ia->first) {
      merged.push_back(*ib++);
    } else {
      merged.emplace_back(ia->first, spec.multiply(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return LampConfig::from_entries(spec, std::move(merged));
}

LampConfig pointwise_inverse(const LampConfig& a) {
  std::vector<LampConfig::Entry> out(a.entries().begin(), a.entries().end());
  for (auto& e : out) e.second = a.group().inverse(e.second);
  return LampConfig::from_entries(a.group(), std::move(out));
}

WreathElement WreathElement::lamp_generator(GroupSpec spec) {
  return {LampConfig::from_entries(spec, {{0, 1}}), 0};
}

std::strong_ordering operator<=>(const WreathElement& a, const WreathElement& b) noexcept {
  if (auto c = a.lamps_ <=> b.lamps_; c != 0) return c;
  return a.shift_ <=> b.shift_;
}

std::size_t WreathElementHash::operator()(const WreathElement& x) const noexcept {
  return mix(x.lamps().hash(), static_cast<std::uint64_t>(x.shift()));
}

WreathElement mul(const WreathElement& x, const WreathElement& y) {
  require_same_group(x.group(), y.group());
  return {pointwise_product(x.lamps(), shift_action(x.shift(), y.lamps())), x.shift() + y.shift()};
}

WreathElement inv(const WreathElement& x) {
  return {shift_action(-x.shift(), pointwise_inverse(x.lamps())), -x.shift()};
}

SupportStats support_stats(const WreathElement& x) noexcept {
  SupportStats stats{x.lamps().min_position(), x.lamps().max_position(), 0};
  for (const auto& e : x.lamps().entries()) stats.lamp_cost += x.group().length(e.second);
  return stats;
}

std::int64_t l_z(std::int64_t n, std::int64_t m, std::int64_t max) {
  if (m > max) throw DomainError("l_z: min support exceeds max support");
  const std::int64_t span = max - m;
  const std::int64_t low_first = std::abs(m) + span + std::abs(max - n);
  const std::int64_t high_first = std::abs(max) + span + std::abs(n - m);
  return std::min(low_first, high_first);
}

std::int64_t l_z(const WreathElement& x) {
  if (x.lamps().empty()) throw DomainError("l_z is undefined for an element without lamps");
  return l_z(x.shift(), *x.lamps().min_position(), *x.lamps().max_position());
}

std::int64_t word_length(const WreathElement& x) noexcept {
  if (x.lamps().empty()) return std::abs(x.shift());
  return l_z(x) + support_stats(x).lamp_cost;
}

}  // namespace wreath
