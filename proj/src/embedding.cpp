#include "wreath/embedding.hpp"

#include <cmath>
#include <type_traits>

namespace wreath {

TreeMode TreeMode::guka(Rational epsilon) {
  if (epsilon <= Rational(0) || epsilon >= Rational(1, 2))
    throw DomainError("GuKa epsilon must lie in (0, 1/2), got " + format_scalar(epsilon));
  return TreeMode(Kind::GuKa, epsilon);
}

std::string TreeMode::to_string() const {
  if (kind_ == Kind::Cocycle) return "cocycle";
  return "guka:" + format_scalar(epsilon_);
}

const char* to_string(HMode mode) noexcept { return mode == HMode::IdentityLine ? "identity" : "dirac"; }

void check_mode(const GroupSpec& spec, HMode mode) {
  if (mode == HMode::IdentityLine && spec.kind() != GroupSpec::Kind::Integers)
    throw DomainError("identity-line embedding requires H = Z, got " + spec.to_string());
  if (mode == HMode::DiracSimplex && !spec.is_finite())
    throw DomainError("dirac-simplex embedding requires a finite cyclic H, got " + spec.to_string());
}

ComponentBounds tree_bounds(const TreeMode& mode) {
  if (mode.kind() == TreeMode::Kind::Cocycle) return {1.0, 1.0};
  const double eps = to_double(mode.epsilon());
  return {std::sqrt(1.0 + eps * eps * (1.0 + 1.0 / (1.0 - 2.0 * eps))), 1.0};
}

ComponentBounds lamp_bounds(const GroupSpec& spec, HMode mode) {
  check_mode(spec, mode);
  if (mode == HMode::IdentityLine) return {1.0, 1.0};
  const double diam = static_cast<double>(spec.diameter());
  return {diam, diam};
}

SparseVector<double> guka_embed(const TreeVertex& v, const TreeVertex& base, const Rational& epsilon) {
  const double eps = to_double(TreeMode::guka(epsilon).epsilon());
  const auto path = geodesic(v, base);
  SparseVector<double> out;
  for (std::size_t k = 1; k < path.size(); ++k)
    out.add(GeomEdge::between(path[k - 1], path[k]), std::pow(static_cast<double>(k), eps));
  return out;
}

SparseVector<Rational> cocycle(const TreeVertex& x, const TreeVertex& y) {
  const auto path = geodesic(x, y);
  SparseVector<Rational> out;
  for (std::size_t k = 1; k < path.size(); ++k) {
    OrientedEdge e{path[k - 1], path[k]};
    out.add(e.reversed(), Rational(-1));
    out.add(std::move(e), Rational(1));
  }
  return out;
}

SparseVector<Rational> iota(const TreeVertex& v, const TreeVertex& base) { return cocycle(base, v); }

template <typename S>
SparseVector<S> permute_edges(const WreathElement& g, const SparseVector<S>& x) {
  if (g.is_identity()) return x;
  return x.relabel([&g](const CoordKey& key) -> CoordKey {
    if (const auto* e = std::get_if<OrientedEdge>(&key)) return OrientedEdge{act(g, e->from), act(g, e->to)};
    if (const auto* e = std::get_if<GeomEdge>(&key)) return GeomEdge::between(act(g, e->a), act(g, e->b));
    return key;
  });
}

AffineMap<Rational> affine_alpha(const WreathElement& g, const TreeVertex& base) {
  return {g, cocycle(base, act(g, base))};
}

namespace {

template <typename S>
S dirac_scale(const GroupSpec& spec) {
  if constexpr (std::is_same_v<S, double>) {
    return static_cast<double>(spec.diameter()) / std::sqrt(2.0);
  } else {
    throw DomainError("dirac-simplex coefficients are irrational; use floating arithmetic");
  }
}

}  // namespace

template <typename S>
SparseVector<S> h_embed(const GroupElement& h, HMode mode, std::int64_t slot) {
  check_mode(h.spec(), mode);
  SparseVector<S> out;
  if (h.is_identity()) return out;
  if (mode == HMode::IdentityLine) {
    out.add(LampCoord{slot, 0}, S(h.value()));
  } else {
    const S scale = dirac_scale<S>(h.spec());
    out.add(LampCoord{slot, h.value()}, scale);
    out.add(LampCoord{slot, 0}, -scale);
  }
  return out;
}

template <typename S>
SparseVector<S> sigma(const WreathElement& x, const TreeMode& tree_mode, HMode h_mode) {
  check_mode(x.group(), h_mode);
  SparseVector<S> out;
  for (TreeSide side : {TreeSide::Plus, TreeSide::Minus}) {
    const TreeVertex base = TreeVertex::base(side, x.group());
    const TreeVertex v = vertex_of(x, side);
    if (tree_mode.kind() == TreeMode::Kind::Cocycle) {
      if constexpr (std::is_same_v<S, Rational>) {
        out += iota(v, base);
      } else {
        out += iota(v, base).template cast<S>();
      }
    } else {
      if constexpr (std::is_same_v<S, double>) {
        out += guka_embed(v, base, tree_mode.epsilon());
      } else {
        throw DomainError("GuKa tree weights are irrational; use floating arithmetic");
      }
    }
  }
  for (const auto& [slot, value] : x.lamps().entries())
    out += h_embed<S>(GroupElement(x.group(), value), h_mode, slot);
  return out;
}

template <typename S>
SparseVector<S> gamma_action_on_sum(const WreathElement& g, const SparseVector<S>& x, HMode h_mode,
                                    const TreeVertex& base_plus, const TreeVertex& base_minus) {
  const GroupSpec& spec = g.group();
  check_mode(spec, h_mode);
  SparseVector<S> out;
  for (const auto& [key, c] : x.entries()) {
    if (std::holds_alternative<GeomEdge>(key))
      throw DomainError("the weighted geodesic-edge embedding is not equivariant");
    if (const auto* e = std::get_if<OrientedEdge>(&key)) {
      out.add(OrientedEdge{act(g, e->from), act(g, e->to)}, c);
      continue;
    }
    const auto& lamp = std::get<LampCoord>(key);
    const std::int64_t slot = lamp.slot + g.shift();
    std::int64_t coordinate = lamp.coordinate;
    if (h_mode == HMode::DiracSimplex) coordinate = spec.multiply(g.lamps().at(slot).value(), coordinate);
    out.add(LampCoord{slot, coordinate}, c);
  }
  for (const TreeVertex& base : {base_plus, base_minus}) {
    if constexpr (std::is_same_v<S, Rational>) {
      out += cocycle(base, act(g, base));
    } else {
      out += cocycle(base, act(g, base)).template cast<S>();
    }
  }
  for (const auto& [slot, value] : g.lamps().entries())
    out += h_embed<S>(GroupElement(spec, value), h_mode, slot);
  return out;
}

template SparseVector<Rational> permute_edges(const WreathElement&, const SparseVector<Rational>&);
template SparseVector<double> permute_edges(const WreathElement&, const SparseVector<double>&);
template SparseVector<Rational> h_embed(const GroupElement&, HMode, std::int64_t);
template SparseVector<double> h_embed(const GroupElement&, HMode, std::int64_t);
template SparseVector<Rational> sigma(const WreathElement&, const TreeMode&, HMode);
template SparseVector<double> sigma(const WreathElement&, const TreeMode&, HMode);
template SparseVector<Rational> gamma_action_on_sum(const WreathElement&, const SparseVector<Rational>&, HMode,
                                                    const TreeVertex&, const TreeVertex&);
template SparseVector<double> gamma_action_on_sum(const WreathElement&, const SparseVector<double>&, HMode,
                                                  const TreeVertex&, const TreeVertex&);

}  // namespace wreath
