#include "wreath/sparse_vector.hpp"

#include <cstdio>

#include "wreath/literal.hpp"

namespace wreath {

std::string format_scalar(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + '/' + std::to_string(r.denominator());
}

std::string format_scalar(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", d);
  return buf;
}

GeomEdge GeomEdge::between(const TreeVertex& u, const TreeVertex& v) {
  if (!adjacent(u, v)) throw DomainError("geometric edge endpoints must be adjacent");
  if (v < u) return {v, u};
  return {u, v};
}

OrientedEdge OrientedEdge::between(const TreeVertex& u, const TreeVertex& v) {
  if (!adjacent(u, v)) throw DomainError("oriented edge endpoints must be adjacent and distinct");
  return {u, v};
}

std::string format_key(const CoordKey& key) {
  struct Visitor {
    std::string operator()(const GeomEdge& e) const {
      return "edge{" + format_vertex(e.a) + ", " + format_vertex(e.b) + "}";
    }
    std::string operator()(const OrientedEdge& e) const {
      return "arc(" + format_vertex(e.from) + " -> " + format_vertex(e.to) + ")";
    }
    std::string operator()(const LampCoord& c) const {
      return "lamp[" + std::to_string(c.slot) + "]:" + std::to_string(c.coordinate);
    }
  };
  return std::visit(Visitor{}, key);
}

}  // namespace wreath
