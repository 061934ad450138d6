#pragma once

#include <string>
#include <string_view>

#include "wreath/base_group.hpp"
#include "wreath/element.hpp"
#include "wreath/scalar.hpp"
#include "wreath/tree.hpp"

// Text literals used by the CLI.
//
//   group    := "Z" | "Z/" k                      (k decimal, k >= 2)
//   element  := "(" [lamp ("," lamp)*] ";" n ")"
//   lamp     := value "@" position
//   vertex   := ("T+" | "T-") " [" level " |" [" " lamps] "]"
//
// Lamp positions must be strictly increasing and values must be canonical
// non-identity elements of the base group, so every literal names exactly one
// element and print(parse(s)) == s for printed literals. Whitespace between
// tokens is accepted on input. All parse failures throw ParseError.

namespace wreath {

GroupSpec parse_group(std::string_view text);

WreathElement parse_element(const GroupSpec& spec, std::string_view text);
std::string format_element(const WreathElement& x);

/// Comma-separated "value@position" list; empty string for no lamps.
std::string format_lamps(const LampConfig& lamps);

/// "p", "p/q" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

TreeVertex parse_vertex(const GroupSpec& spec, std::string_view text);
std::string format_vertex(const TreeVertex& v);

}  // namespace wreath
