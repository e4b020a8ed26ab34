#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ut3/decomposition.hpp"
#include "ut3/random.hpp"

namespace ut3 {

/**
 * A function f: G -> V, V = C^dim carrying the canonical representation of
 * `fiber_type`. One value vector per group element.
 */
class FeatureMap {
 public:
  using Values = std::array<Vector, GroupElement::kOrder>;

  FeatureMap() = default;
  explicit FeatureMap(RepType fiber_type) : type_(std::move(fiber_type)) {
    for (Vector& v : values_) v = Vector::Zero(type_.dimension());
  }
  FeatureMap(RepType fiber_type, Values values) : type_(std::move(fiber_type)), values_(std::move(values)) {
    for (const Vector& v : values_)
      if (v.size() != type_.dimension())
        throw std::invalid_argument("FeatureMap: value length " + std::to_string(v.size()) +
                                    " does not match fiber dimension " +
                                    std::to_string(type_.dimension()));
  }

  static FeatureMap from_function(RepType fiber_type, const std::function<Vector(GroupElement)>& f) {
    Values v;
    for (GroupElement g : elements()) v[g.index()] = f(g);
    return FeatureMap(std::move(fiber_type), std::move(v));
  }

  /// Single-channel scalar map (fiber = one trivial irrep).
  static FeatureMap scalar(const std::function<Complex(GroupElement)>& f) {
    return from_function(RepType::of(IrrepLabel::one_dim(0, 0)), [&f](GroupElement g) {
      Vector v(1);
      v(0) = f(g);
      return v;
    });
  }

  static FeatureMap random(const RepType& fiber_type, Rng& rng) {
    return from_function(fiber_type, [&](GroupElement) { return rng.vector(fiber_type.dimension()); });
  }

  const RepType& fiber_type() const noexcept { return type_; }
  int fiber_dimension() const noexcept { return type_.dimension(); }
  const Vector& operator()(GroupElement g) const { return values_[g.index()]; }
  Vector& operator()(GroupElement g) { return values_[g.index()]; }
  const Values& values() const noexcept { return values_; }

  /// max over g of the largest entry difference.
  friend double distance(const FeatureMap& x, const FeatureMap& y) {
    if (x.type_ != y.type_) throw std::invalid_argument("distance: fiber types differ");
    double worst = 0.0;
    for (GroupElement g : elements()) worst = std::max(worst, max_abs(x(g) - y(g)));
    return worst;
  }

 private:
  RepType type_;
  Values values_;
};

/// (L_g f)(h) = f(g^-1 h), for plain scalar maps.
inline FeatureMap left_translate(GroupElement g, const FeatureMap& f) {
  if (f.fiber_type() != RepType::of(IrrepLabel::one_dim(0, 0)))
    throw std::invalid_argument("left_translate: expects a single-channel scalar feature map");
  const GroupElement g_inv = inverse(g);
  return FeatureMap::from_function(f.fiber_type(), [&](GroupElement h) { return f(mul(g_inv, h)); });
}

/// (rho~(g) f)(h) = rho_V(g) f(g^-1 h), rho_V the canonical rep of the fiber type.
inline FeatureMap induced_action(GroupElement g, const FeatureMap& f, const MatrixRep& fiber_rep) {
  if (fiber_rep.dimension() != f.fiber_dimension())
    throw std::invalid_argument("induced_action: representation does not match the fiber");
  const GroupElement g_inv = inverse(g);
  const Matrix& rho = fiber_rep(g);
  return FeatureMap::from_function(f.fiber_type(), [&](GroupElement h) -> Vector { return rho * f(mul(g_inv, h)); });
}

inline FeatureMap induced_action(GroupElement g, const FeatureMap& f) {
  return induced_action(g, f, canonical_rep(f.fiber_type()));
}

/**
 * (f * psi)(g) = sum_h sum_k f_k(h) psi_k(g^-1 h) for multi-channel scalar
 * maps; the result is a single scalar channel. Sums run over h in index
 * order.
 */
inline FeatureMap group_convolve(const FeatureMap& f, const FeatureMap& psi) {
  if (!f.fiber_type().is_scalar() || !psi.fiber_type().is_scalar())
    throw std::invalid_argument("group_convolve: inputs must be scalar (trivial-fiber) maps");
  if (f.fiber_dimension() != psi.fiber_dimension())
    throw std::invalid_argument("group_convolve: channel counts differ (" + std::to_string(f.fiber_dimension()) +
                                " vs " + std::to_string(psi.fiber_dimension()) + ")");
  return FeatureMap::scalar([&](GroupElement g) {
    const GroupElement g_inv = inverse(g);
    Complex sum = 0.0;
    for (GroupElement h : elements()) sum += f(h).cwiseProduct(psi(mul(g_inv, h))).sum();
    return sum;
  });
}

/**
 * Nonlinearity applied to each irreducible block v of each fiber:
 * v -> v / |v| * phi(|v|), and 0 -> 0. Equivariant for any phi since the
 * canonical representation is block-diagonal and unitary; continuous at 0
 * when phi(0) = 0.
 */
inline FeatureMap norm_nonlinearity(const FeatureMap& f, const std::function<double(double)>& phi) {
  const RepType& type = f.fiber_type();
  return FeatureMap::from_function(type, [&](GroupElement x) {
    Vector out = f(x);
    int at = 0;
    for (IrrepLabel label : all_irreps()) {
      const int d = label.dimension();
      for (int copy = 0; copy < type[label.position()]; ++copy, at += d) {
        auto block = out.segment(at, d);
        const double norm = block.norm();
        if (norm == 0.0) {
          block.setZero();
        } else {
          block *= phi(norm) / norm;
        }
      }
    }
    return out;
  });
}

/// phi(t) = max(t - theta, 0)
inline std::function<double(double)> shifted_relu(double theta = 0.0) {
  return [theta](double t) { return std::max(t - theta, 0.0); };
}

/**
 * Pointwise ReLU on real and imaginary parts. Only offered for trivial
 * fibers: for a nontrivial character it does not commute with the action
 * (ReLU(w z) != w ReLU(z)).
 */
inline FeatureMap relu_trivial(const FeatureMap& f) {
  if (!f.fiber_type().is_scalar())
    throw std::invalid_argument("relu_trivial: fiber must consist of trivial irreps only; use norm_nonlinearity");
  return FeatureMap::from_function(f.fiber_type(), [&](GroupElement x) -> Vector {
    return f(x).unaryExpr([](Complex z) { return Complex(std::max(z.real(), 0.0), std::max(z.imag(), 0.0)); });
  });
}

/// The scalar map g -> chi(g) of a one-dimensional irrep.
inline FeatureMap character_map(IrrepLabel label) {
  if (!label.is_one_dim()) throw std::invalid_argument("character_map: expects a one-dimensional irrep");
  return FeatureMap::scalar([label](GroupElement g) { return to_complex(character_at(label, g)); });
}

/**
 * The worked example on the constant map f = 1: returns
 * ((f * chi_(1,0))(e), (f * chi_triv)(e)), exactly (0, 27).
 */
inline std::pair<Complex, Complex> example_4_5() {
  const FeatureMap ones = FeatureMap::scalar([](GroupElement) { return Complex(1.0, 0.0); });
  const GroupElement e = GroupElement::identity();
  const Complex nontrivial = group_convolve(ones, character_map(IrrepLabel::one_dim(1, 0)))(e)(0);
  const Complex trivial = group_convolve(ones, character_map(IrrepLabel::one_dim(0, 0)))(e)(0);
  return {nontrivial, trivial};
}

}  // namespace ut3
