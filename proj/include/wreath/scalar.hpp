#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace wreath {

/// Exact coefficient type. Cocycle and lamp-line embeddings only ever produce
/// small integers and halves, so 64-bit numerators are ample.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) noexcept {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}
inline double to_double(double d) noexcept { return d; }

/// "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Rational& r);
/// Twelve significant digits.
std::string format_scalar(double d);

}  // namespace wreath
