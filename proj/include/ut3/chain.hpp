#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ut3/filters.hpp"

namespace ut3 {

inline constexpr double kRankTolerance = 1e-8;

/// max over g of the part of rho(g) B that leaves span(B); B orthonormal.
inline double invariance_residual(const Matrix& basis, const MatrixRep& rho) {
  double worst = 0.0;
  for (GroupElement g : elements()) worst = std::max(worst, residual_outside(basis, rho(g) * basis));
  return worst;
}

/**
 * Ascending chain V_0 < V_1 < ... < V_r = V of rho_V-invariant subspaces,
 * each stored as an orthonormal basis in the canonical basis of the type.
 */
class InvariantChain {
 public:
  /// Validates invariance, strict nesting and V_r = V; throws std::invalid_argument.
  InvariantChain(RepType ambient, std::vector<Matrix> subspaces, double tol = 1e-10)
      : ambient_(std::move(ambient)) {
    const MatrixRep rho = canonical_rep(ambient_);
    const int dim = ambient_.dimension();
    Eigen::Index previous_rank = -1;
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
      if (subspaces[i].rows() != dim)
        throw std::invalid_argument("InvariantChain: subspace " + std::to_string(i) + " has wrong row count");
      Matrix q = column_space(subspaces[i], kRankTolerance).basis;
      if (q.cols() <= previous_rank)
        throw std::invalid_argument("InvariantChain: subspaces must be strictly nested");
      if (!subspaces_.empty() && residual_outside(q, subspaces_.back()) > tol)
        throw std::invalid_argument("InvariantChain: subspace " + std::to_string(i) + " does not contain its predecessor");
      if (invariance_residual(q, rho) > tol)
        throw std::invalid_argument("InvariantChain: subspace " + std::to_string(i) + " is not G-invariant");
      previous_rank = q.cols();
      subspaces_.push_back(std::move(q));
    }
    if (subspaces_.empty() || subspaces_.back().cols() != dim)
      throw std::invalid_argument("InvariantChain: the last subspace must be the whole space");
  }

  const RepType& ambient_type() const noexcept { return ambient_; }
  const std::vector<Matrix>& subspaces() const noexcept { return subspaces_; }
  std::size_t length() const noexcept { return subspaces_.size(); }

 private:
  RepType ambient_;
  std::vector<Matrix> subspaces_;
};

/// Partial sums of isotypic components: V_j spans the blocks of the first j+1 irreps present.
inline InvariantChain isotypic_filtration(const RepType& type) {
  const int dim = type.dimension();
  std::vector<Matrix> subspaces;
  for (IrrepLabel label : all_irreps()) {
    if (type[label.position()] == 0) continue;
    const int end = type.offset(label.position()) + type[label.position()] * label.dimension();
    subspaces.push_back(Matrix::Identity(dim, dim).leftCols(end));
  }
  return InvariantChain(type, std::move(subspaces));
}

/// A linear map F_V -> F_W, given as a function on feature maps.
struct FeatureTransform {
  RepType in_type;
  RepType out_type;
  std::function<FeatureMap(const FeatureMap&)> apply;
};

inline FeatureTransform as_transform(const EquivariantFilter& filter) {
  return {filter.in_type(), filter.out_type(), [filter](const FeatureMap& f) { return steerable_convolve(f, filter); }};
}

/// max over u and a few seeded random inputs f of ||Psi(rho~_V(u) f) - rho~_W(u) Psi(f)||.
inline double transform_equivariance_residual(const FeatureTransform& map, std::uint64_t seed = 0, int samples = 3) {
  const MatrixRep rho_in = canonical_rep(map.in_type);
  const MatrixRep rho_out = canonical_rep(map.out_type);
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const FeatureMap f = FeatureMap::random(map.in_type, rng);
    const FeatureMap image = map.apply(f);
    for (GroupElement u : elements())
      worst = std::max(worst, distance(map.apply(induced_action(u, f, rho_in)), induced_action(u, image, rho_out)));
  }
  return worst;
}

struct ChainLevel {
  Eigen::Index rank = 0;
  double smallest_kept = 0.0;     // rank margin: smallest singular value counted
  double largest_dropped = 0.0;   // largest singular value treated as zero
  double invariance = 0.0;        // max_g distance of rho_W(g) W_i from W_i
  double nesting = 0.0;           // distance of W_{i-1} from W_i
  double containment = 0.0;       // distance of Psi(f)(h), f in F_{V_i}, from W_i
};

struct ChainImage {
  RepType ambient_type;
  std::vector<Matrix> subspaces;  // orthonormal bases of W_0 <= ... <= W_r
  std::vector<ChainLevel> levels;
  double tolerance = 0.0;

  bool certified() const {
    for (const ChainLevel& l : levels)
      if (l.invariance > tolerance || l.nesting > tolerance || l.containment > tolerance) return false;
    return true;
  }
};

/**
 * Image chain W_i = span{(Psi f)(h) : f in F_{V_i}, h in G} of an invariant
 * chain under an equivariant map, with a certificate that each W_i is
 * invariant, the W_i are nested, and Psi(F_{V_i}) takes values in W_i.
 * F_{V_i} is spanned by the maps delta_x * v, v a basis vector of V_i.
 */
inline ChainImage chain_image(const FeatureTransform& map, const InvariantChain& chain,
                              double rank_tol = kRankTolerance, double check_tol = 1e-10) {
  if (chain.ambient_type() != map.in_type)
    throw std::invalid_argument("chain_image: chain lives on " + chain.ambient_type().to_string() +
                                ", map expects " + map.in_type.to_string());
  const double defect = transform_equivariance_residual(map);
  if (defect > check_tol)
    throw EquivarianceError("chain_image: map is not equivariant (residual " + std::to_string(defect) + ")");

  const MatrixRep rho_out = canonical_rep(map.out_type);
  const int dim_out = map.out_type.dimension();
  constexpr auto kOrder = static_cast<Eigen::Index>(GroupElement::kOrder);

  ChainImage result;
  result.ambient_type = map.out_type;
  result.tolerance = check_tol;
  for (const Matrix& v : chain.subspaces()) {
    Matrix values(dim_out, kOrder * kOrder * v.cols());
    Eigen::Index col = 0;
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      for (GroupElement x : elements()) {
        FeatureMap delta(map.in_type);
        delta(x) = v.col(j);
        const FeatureMap image = map.apply(delta);
        if (image.fiber_dimension() != dim_out)
          throw std::invalid_argument("chain_image: map produced the wrong fiber dimension");
        for (GroupElement h : elements()) values.col(col++) = image(h);
      }
    }
    ColumnSpace w = column_space(values, rank_tol);
    ChainLevel level;
    level.rank = w.rank();
    level.smallest_kept = w.smallest_kept;
    level.largest_dropped = w.largest_dropped;
    level.invariance = invariance_residual(w.basis, rho_out);
    level.nesting = result.subspaces.empty() ? 0.0 : residual_outside(w.basis, result.subspaces.back());
    level.containment = residual_outside(w.basis, values);
    result.subspaces.push_back(std::move(w.basis));
    result.levels.push_back(level);
  }
  return result;
}

inline ChainImage chain_image(const EquivariantFilter& filter, const InvariantChain& chain,
                              double rank_tol = kRankTolerance, double check_tol = 1e-10) {
  return chain_image(as_transform(filter), chain, rank_tol, check_tol);
}

}  // namespace ut3
