#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>

#include "wreath/error.hpp"
#include "wreath/scalar.hpp"
#include "wreath/tree.hpp"

namespace wreath {

/// Unoriented edge {a, b} of a tree; stored with a < b.
struct GeomEdge {
  TreeVertex a;
  TreeVertex b;

  /// Throws DomainError unless u and v are adjacent.
  static GeomEdge between(const TreeVertex& u, const TreeVertex& v);

  friend bool operator==(const GeomEdge&, const GeomEdge&) = default;
  friend auto operator<=>(const GeomEdge&, const GeomEdge&) = default;
};

/// Oriented edge from -> to. The reversal involution swaps the endpoints.
struct OrientedEdge {
  TreeVertex from;
  TreeVertex to;

  static OrientedEdge between(const TreeVertex& u, const TreeVertex& v);
  OrientedEdge reversed() const { return {to, from}; }

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

/// Coordinate `coordinate` of the copy of the base-group Hilbert space
/// attached to lamp slot `slot`.
struct LampCoord {
  std::int64_t slot;
  std::int64_t coordinate;

  friend bool operator==(const LampCoord&, const LampCoord&) = default;
  friend auto operator<=>(const LampCoord&, const LampCoord&) = default;
};

/// Coordinates of the direct sum H_+ (+) H_- (+) (+)_i H. Tree coordinates
/// carry their side inside the vertices.
using CoordKey = std::variant<GeomEdge, OrientedEdge, LampCoord>;

std::string format_key(const CoordKey& key);

/// Weight of a coordinate class in the inner product: oriented edges use the
/// half-sum convention <x|y> = 1/2 sum_e x(e) y(e); all others are standard.
template <typename S>
S coordinate_weight(const CoordKey& key) {
  if (std::holds_alternative<OrientedEdge>(key)) return S(1) / S(2);
  return S(1);
}

/// Finitely supported vector over CoordKey with coefficients in S (Rational
/// or double). Zero coefficients are never stored.
template <typename S>
class SparseVector {
 public:
  using Map = std::map<CoordKey, S>;

  SparseVector() = default;

  static SparseVector dirac(CoordKey key, S coefficient = S(1)) {
    SparseVector v;
    v.add(std::move(key), coefficient);
    return v;
  }

  const Map& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  S at(const CoordKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? S(0) : it->second;
  }

  void add(CoordKey key, S coefficient) {
    if (coefficient == S(0)) return;
    auto [it, inserted] = entries_.try_emplace(std::move(key), coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == S(0)) entries_.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& other) {
    for (const auto& [k, c] : other.entries_) add(k, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    for (const auto& [k, c] : other.entries_) add(k, -c);
    return *this;
  }
  SparseVector& operator*=(const S& factor) {
    if (factor == S(0)) {
      entries_.clear();
      return *this;
    }
    for (auto& [k, c] : entries_) c *= factor;
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(S factor, SparseVector v) { return v *= factor; }
  friend SparseVector operator-(SparseVector v) { return v *= S(-1); }

  /// Applies a key relabelling; colliding images are summed.
  SparseVector relabel(const std::function<CoordKey(const CoordKey&)>& f) const {
    SparseVector out;
    for (const auto& [k, c] : entries_) out.add(f(k), c);
    return out;
  }

  template <typename T>
  SparseVector<T> cast() const {
    SparseVector<T> out;
    for (const auto& [k, c] : entries_) out.add(k, static_cast<T>(to_double(c)));
    return out;
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Map entries_;
};

template <typename S>
S ip(const SparseVector<S>& x, const SparseVector<S>& y) {
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  S total(0);
  for (const auto& [k, c] : small.entries()) {
    auto it = large.entries().find(k);
    if (it != large.entries().end()) total += coordinate_weight<S>(k) * c * it->second;
  }
  return total;
}

template <typename S>
S norm_squared(const SparseVector<S>& x) {
  return ip(x, x);
}

template <typename S>
double norm(const SparseVector<S>& x) {
  return std::sqrt(to_double(norm_squared(x)));
}

template <typename S>
S distance_squared(const SparseVector<S>& x, const SparseVector<S>& y) {
  return norm_squared(x - y);
}

/// One "key<TAB>value" line per coordinate, in key order.
template <typename S>
std::string dump(const SparseVector<S>& x) {
  std::string out;
  for (const auto& [k, c] : x.entries()) out += format_key(k) + '\t' + format_scalar(c) + '\n';
  return out;
}

}  // namespace wreath
