#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <cstddef>
#include <limits>

#include "ut3/irreps.hpp"

namespace ut3 {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix to_matrix(const IrrepMatrix& m) {
  Matrix out(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = to_complex(m(i, j));
  return out;
}

/// Largest absolute entry; 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Numerically determined column space of a matrix.
struct ColumnSpace {
  Matrix basis;            // orthonormal columns
  double smallest_kept = 0.0;
  double largest_dropped = 0.0;  // 0 when nothing was dropped

  Eigen::Index rank() const noexcept { return basis.cols(); }
};

/**
 * Orthonormal basis of span(columns of m) via SVD. Singular values at or
 * below tol * max(1, sigma_max) count as zero.
 */
inline ColumnSpace column_space(const Matrix& m, double tol = 1e-8) {
  ColumnSpace out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.basis = Matrix(m.rows(), 0);
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cutoff = tol * std::max(1.0, sigma.size() > 0 ? sigma(0) : 0.0);
  Eigen::Index r = 0;
  while (r < sigma.size() && sigma(r) > cutoff) ++r;
  out.basis = svd.matrixU().leftCols(r);
  out.smallest_kept = r > 0 ? sigma(r - 1) : 0.0;
  out.largest_dropped = r < sigma.size() ? sigma(r) : 0.0;
  return out;
}

inline Eigen::Index numerical_rank(const Matrix& m, double tol = 1e-8) {
  return column_space(m, tol).rank();
}

/// Distance of the columns of `m` from span(orthonormal basis `q`).
inline double residual_outside(const Matrix& q, const Matrix& m) {
  if (m.cols() == 0) return 0.0;
  if (q.cols() == 0) return max_abs(m);
  return max_abs(m - q * (q.adjoint() * m));
}

/// 2-norm condition number; infinity for rank-deficient input.
inline double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double smallest = s(s.size() - 1);
  return smallest == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / smallest;
}

}  // namespace ut3
