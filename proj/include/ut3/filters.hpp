#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ut3/feature_map.hpp"

namespace ut3 {

/// Raised when a map that must commute with the group action does not.
class EquivarianceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function G -> Hom(V, W), one dim(W) x dim(V) matrix per element.
using KernelTable = std::array<Matrix, GroupElement::kOrder>;

/// Free parameters of one Schur block: an n_i x m_i matrix A(g) per element.
using BlockTable = std::array<Matrix, GroupElement::kOrder>;

/// Irreps present in both types, i.e. the blocks that carry parameters.
inline std::vector<IrrepLabel> shared_irreps(const RepType& in, const RepType& out) {
  std::vector<IrrepLabel> shared;
  for (IrrepLabel label : all_irreps())
    if (in[label.position()] > 0 && out[label.position()] > 0) shared.push_back(label);
  return shared;
}

/// Complex parameter count |G| * sum over shared irreps of m_i n_i.
inline int parameter_count(const RepType& in, const RepType& out) {
  int per_element = 0;
  for (IrrepLabel label : shared_irreps(in, out)) per_element += in[label.position()] * out[label.position()];
  return static_cast<int>(GroupElement::kOrder) * per_element;
}

/**
 * A kernel psi: G -> Hom(V, W) satisfying psi(x) rho_V(u) = rho_W(u) psi(x),
 * stored through its free parameters. In the canonical bases the realized
 * kernel is block diagonal over irreps, with the block of irrep i equal to
 * A_i(x) (x) I_{d_i} (copies outer, irrep coordinates inner); blocks between
 * different irreps are zero.
 */
class EquivariantFilter {
 public:
  using Blocks = std::map<std::size_t, BlockTable>;  // keyed by irrep position

  EquivariantFilter() = default;

  const RepType& in_type() const noexcept { return in_; }
  const RepType& out_type() const noexcept { return out_; }
  const Blocks& blocks() const noexcept { return blocks_; }

  int parameter_count() const { return ut3::parameter_count(in_, out_); }

  /// The realized dim(W) x dim(V) matrix psi(x).
  Matrix kernel(GroupElement x) const {
    Matrix psi = Matrix::Zero(out_.dimension(), in_.dimension());
    for (const auto& [pos, table] : blocks_) {
      const int d = irrep_dimension(pos);
      const Matrix& a = table[x.index()];
      const int row0 = out_.offset(pos);
      const int col0 = in_.offset(pos);
      for (Eigen::Index p = 0; p < a.rows(); ++p)
        for (Eigen::Index q = 0; q < a.cols(); ++q)
          for (int t = 0; t < d; ++t)
            psi(row0 + static_cast<int>(p) * d + t, col0 + static_cast<int>(q) * d + t) = a(p, q);
    }
    return psi;
  }

  KernelTable kernel_table() const {
    KernelTable t;
    for (GroupElement x : elements()) t[x.index()] = kernel(x);
    return t;
  }

  friend EquivariantFilter build_filter(Blocks params, const RepType& in_type, const RepType& out_type);

 private:
  RepType in_;
  RepType out_;
  Blocks blocks_;
};

/**
 * Assembles a filter from per-irrep parameter tables. Exactly the irreps
 * shared by both types must be supplied, each as 27 matrices of shape
 * n_i x m_i (out multiplicity x in multiplicity).
 */
inline EquivariantFilter build_filter(EquivariantFilter::Blocks params, const RepType& in_type,
                                      const RepType& out_type) {
  const auto shared = shared_irreps(in_type, out_type);
  if (params.size() != shared.size())
    throw std::invalid_argument("build_filter: expected " + std::to_string(shared.size()) +
                                " parameter blocks, got " + std::to_string(params.size()));
  for (IrrepLabel label : shared) {
    const auto it = params.find(label.position());
    if (it == params.end())
      throw std::invalid_argument("build_filter: missing parameter block for " + label.name());
    const int rows = out_type[label.position()];
    const int cols = in_type[label.position()];
    for (const Matrix& a : it->second)
      if (a.rows() != rows || a.cols() != cols)
        throw std::invalid_argument("build_filter: block for " + label.name() + " must be " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
  }
  EquivariantFilter f;
  f.in_ = in_type;
  f.out_ = out_type;
  f.blocks_ = std::move(params);
  return f;
}

/// All-zero parameters.
inline EquivariantFilter zero_filter(const RepType& in_type, const RepType& out_type) {
  EquivariantFilter::Blocks blocks;
  for (IrrepLabel label : shared_irreps(in_type, out_type)) {
    BlockTable t;
    for (Matrix& a : t) a = Matrix::Zero(out_type[label.position()], in_type[label.position()]);
    blocks.emplace(label.position(), std::move(t));
  }
  return build_filter(std::move(blocks), in_type, out_type);
}

inline EquivariantFilter random_filter(const RepType& in_type, const RepType& out_type, Rng& rng) {
  EquivariantFilter::Blocks blocks;
  for (IrrepLabel label : shared_irreps(in_type, out_type)) {
    BlockTable t;
    for (Matrix& a : t) a = rng.matrix(out_type[label.position()], in_type[label.position()]);
    blocks.emplace(label.position(), std::move(t));
  }
  return build_filter(std::move(blocks), in_type, out_type);
}

/// max over (x, u) of ||psi(x) rho_V(u) - rho_W(u) psi(x)||.
inline double constraint_residual(const KernelTable& psi, const MatrixRep& rho_in, const MatrixRep& rho_out) {
  double worst = 0.0;
  for (GroupElement x : elements())
    for (GroupElement u : elements())
      worst = std::max(worst, max_abs(psi[x.index()] * rho_in(u) - rho_out(u) * psi[x.index()]));
  return worst;
}

inline double constraint_residual(const EquivariantFilter& f) {
  return constraint_residual(f.kernel_table(), canonical_rep(f.in_type()), canonical_rep(f.out_type()));
}

/// Group average psi(x) -> (1/|G|) sum_u rho_W(u^-1) psi(x) rho_V(u), per x.
inline KernelTable reynolds_average(const KernelTable& raw, const MatrixRep& rho_in, const MatrixRep& rho_out) {
  KernelTable out;
  for (GroupElement x : elements()) {
    const Matrix& k = raw[x.index()];
    if (k.rows() != rho_out.dimension() || k.cols() != rho_in.dimension())
      throw std::invalid_argument("reynolds_average: kernel must be " + std::to_string(rho_out.dimension()) + "x" +
                                  std::to_string(rho_in.dimension()));
    Matrix acc = Matrix::Zero(k.rows(), k.cols());
    for (GroupElement u : elements()) acc += rho_out(inverse(u)) * k * rho_in(u);
    out[x.index()] = acc / static_cast<double>(GroupElement::kOrder);
  }
  return out;
}

/**
 * Projects an arbitrary kernel onto the equivariant ones and reads off the
 * Schur-block parameters: A_i(x)[p][q] is the average diagonal entry of the
 * d_i x d_i sub-block pairing output copy p with input copy q.
 */
inline EquivariantFilter project_filter(const KernelTable& raw, const RepType& in_type, const RepType& out_type,
                                        const MatrixRep& rho_in, const MatrixRep& rho_out) {
  const KernelTable avg = reynolds_average(raw, rho_in, rho_out);
  EquivariantFilter::Blocks blocks;
  for (IrrepLabel label : shared_irreps(in_type, out_type)) {
    const std::size_t pos = label.position();
    const int d = label.dimension();
    const int n = out_type[pos];
    const int m = in_type[pos];
    BlockTable t;
    for (GroupElement x : elements()) {
      Matrix a(n, m);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < m; ++q)
          a(p, q) = avg[x.index()].block(out_type.offset(pos) + p * d, in_type.offset(pos) + q * d, d, d).trace() /
                    static_cast<double>(d);
      t[x.index()] = std::move(a);
    }
    blocks.emplace(pos, std::move(t));
  }
  return build_filter(std::move(blocks), in_type, out_type);
}

inline EquivariantFilter project_filter(const KernelTable& raw, const RepType& in_type, const RepType& out_type) {
  return project_filter(raw, in_type, out_type, canonical_rep(in_type), canonical_rep(out_type));
}

/**
 * Matrix of the Reynolds projection on the full kernel space (dimension
 * 27 * dim W * dim V), assembled column by column by projecting each
 * standard basis kernel. Intended for small fibers.
 */
inline Matrix reynolds_operator(const RepType& in_type, const RepType& out_type) {
  const int dv = in_type.dimension();
  const int dw = out_type.dimension();
  const int per = dv * dw;
  const Eigen::Index n = static_cast<Eigen::Index>(GroupElement::kOrder) * per;
  Matrix op = Matrix::Zero(n, n);
  const MatrixRep rho_in = canonical_rep(in_type);
  const MatrixRep rho_out = canonical_rep(out_type);
  KernelTable raw;
  for (Matrix& k : raw) k = Matrix::Zero(dw, dv);
  Eigen::Index col = 0;
  for (GroupElement x : elements()) {
    for (int j = 0; j < dv; ++j) {
      for (int i = 0; i < dw; ++i, ++col) {
        raw[x.index()](i, j) = 1.0;
        const KernelTable projected = project_filter(raw, in_type, out_type, rho_in, rho_out).kernel_table();
        raw[x.index()](i, j) = 0.0;
        Eigen::Index row = 0;
        for (GroupElement y : elements())
          for (int jj = 0; jj < dv; ++jj)
            for (int ii = 0; ii < dw; ++ii, ++row) op(row, col) = projected[y.index()](ii, jj);
      }
    }
  }
  return op;
}

/// (f * psi)(g) = sum_h psi(g^-1 h) f(h), summed over h in index order.
inline FeatureMap steerable_convolve(const FeatureMap& f, const EquivariantFilter& filter) {
  if (f.fiber_type() != filter.in_type())
    throw std::invalid_argument("steerable_convolve: feature fiber type " + f.fiber_type().to_string() +
                                " does not match filter input type " + filter.in_type().to_string());
  const KernelTable psi = filter.kernel_table();
  return FeatureMap::from_function(filter.out_type(), [&](GroupElement g) {
    const GroupElement g_inv = inverse(g);
    Vector acc = Vector::Zero(filter.out_type().dimension());
    for (GroupElement h : elements()) acc += psi[mul(g_inv, h).index()] * f(h);
    return acc;
  });
}

/**
 * Worst equivariance defect of steerable convolution with `filter` on `f`:
 * max over u, g of ||((rho~_V(u) f) * psi)(g) - (rho~_W(u)(f * psi))(g)||.
 */
inline double equivariance_residual(const FeatureMap& f, const EquivariantFilter& filter) {
  const MatrixRep rho_in = canonical_rep(filter.in_type());
  const MatrixRep rho_out = canonical_rep(filter.out_type());
  const FeatureMap base = steerable_convolve(f, filter);
  double worst = 0.0;
  for (GroupElement u : elements()) {
    const FeatureMap lhs = steerable_convolve(induced_action(u, f, rho_in), filter);
    const FeatureMap rhs = induced_action(u, base, rho_out);
    worst = std::max(worst, distance(lhs, rhs));
  }
  return worst;
}

}  // namespace ut3
