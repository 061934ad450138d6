#pragma once

#include "wreath/base_group.hpp"
#include "wreath/element.hpp"
#include "wreath/scalar.hpp"
#include "wreath/sparse_vector.hpp"
#include "wreath/tree.hpp"

namespace wreath {

/// How a tree is embedded: the weighted geodesic-edge map f_eps (Lipschitz,
/// not equivariant, irrational weights) or the oriented-edge cocycle map
/// (equivariant, integral coefficients, distance = sqrt(tree distance)).
class TreeMode {
 public:
  enum class Kind { GuKa, Cocycle };

  static TreeMode cocycle() noexcept { return TreeMode(Kind::Cocycle, Rational(0)); }
  /// Throws DomainError unless 0 < epsilon < 1/2.
  static TreeMode guka(Rational epsilon);

  Kind kind() const noexcept { return kind_; }
  const Rational& epsilon() const noexcept { return epsilon_; }
  std::string to_string() const;

 private:
  TreeMode(Kind kind, Rational epsilon) noexcept : kind_(kind), epsilon_(epsilon) {}

  Kind kind_;
  Rational epsilon_;
};

/// How a base-group element is embedded.
///  - IdentityLine (H = Z): n -> n * delta_0, an isometry onto a line.
///  - DiracSimplex (H = Z/k): h -> (diam / sqrt 2)(delta_h - delta_1), so
///    distinct elements are exactly diam apart and the identity maps to 0.
enum class HMode { IdentityLine, DiracSimplex };

const char* to_string(HMode mode) noexcept;

/// Throws DomainError when `mode` does not apply to `spec`.
void check_mode(const GroupSpec& spec, HMode mode);

/// Upper Lipschitz constant and minimal separation of distinct points for
/// one component embedding.
struct ComponentBounds {
  double lipschitz;
  double separation;
};

/// Cocycle: (1, 1) since sqrt(d) <= d on integers. GuKa(eps): Lipschitz
/// sqrt(1 + eps^2 (1 + 1/(1 - 2 eps))) from summing the per-edge weight
/// increments, separation 1.
ComponentBounds tree_bounds(const TreeMode& mode);
/// IdentityLine: (1, 1). DiracSimplex: (diam, diam).
ComponentBounds lamp_bounds(const GroupSpec& spec, HMode mode);

/// f_eps(v) = sum_{k=1}^{d(base, v)} k^eps delta_{e_k(v)}, with e_1 the edge
/// at v and indices increasing toward base.
SparseVector<double> guka_embed(const TreeVertex& v, const TreeVertex& base, const Rational& epsilon);

/// c(x, y) = sum over the oriented geodesic x -> y of delta_e - delta_{e-bar}.
SparseVector<Rational> cocycle(const TreeVertex& x, const TreeVertex& y);

/// iota(v) = c(base, v).
SparseVector<Rational> iota(const TreeVertex& v, const TreeVertex& base);

/// Permutation representation of the group on tree coordinates; lamp
/// coordinates are left untouched.
template <typename S>
SparseVector<S> permute_edges(const WreathElement& g, const SparseVector<S>& x);

/// Affine isometry xi -> pi(g) xi + translation of a tree coordinate space.
template <typename S>
class AffineMap {
 public:
  AffineMap(WreathElement linear, SparseVector<S> translation)
      : linear_(std::move(linear)), translation_(std::move(translation)) {}

  const WreathElement& linear() const noexcept { return linear_; }
  const SparseVector<S>& translation() const noexcept { return translation_; }

  SparseVector<S> operator()(const SparseVector<S>& x) const { return permute_edges(linear_, x) + translation_; }

  /// (this o other)(x) = this(other(x)).
  AffineMap compose(const AffineMap& other) const {
    return {mul(linear_, other.linear_), permute_edges(linear_, other.translation_) + translation_};
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

 private:
  WreathElement linear_;
  SparseVector<S> translation_;
};

/// alpha(g) xi = pi(g) xi + c(base, g.base).
AffineMap<Rational> affine_alpha(const WreathElement& g, const TreeVertex& base);

/// Embedding of a base-group element into the lamp space at `slot`.
template <typename S>
SparseVector<S> h_embed(const GroupElement& h, HMode mode, std::int64_t slot = 0);

/// Direct-sum embedding of the wreath product: Plus-tree component of
/// x.Lambda_+, Minus-tree component of x.Lambda_-, and h_embed(l_i) at each
/// lamp slot i. GuKa and DiracSimplex need S = double; requesting them with
/// S = Rational throws DomainError.
template <typename S>
SparseVector<S> sigma(const WreathElement& x, const TreeMode& tree_mode, HMode h_mode);

/// Affine isometric action of the group on the direct sum for which sigma
/// (in Cocycle mode) is equivariant: alpha on each tree component, and on
/// lamp slots (g.xi)_i = l_i . xi_{i-n} with H acting affinely through the
/// base embedding. Tree coordinates of GuKa type throw DomainError.
template <typename S>
SparseVector<S> gamma_action_on_sum(const WreathElement& g, const SparseVector<S>& x, HMode h_mode,
                                    const TreeVertex& base_plus, const TreeVertex& base_minus);

template <typename S>
SparseVector<S> gamma_action_on_sum(const WreathElement& g, const SparseVector<S>& x, HMode h_mode) {
  return gamma_action_on_sum(g, x, h_mode, TreeVertex::base(TreeSide::Plus, g.group()),
                             TreeVertex::base(TreeSide::Minus, g.group()));
}

}  // namespace wreath
