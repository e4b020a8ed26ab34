#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ut3/irreps.hpp"
#include "ut3/linalg.hpp"
#include "ut3/random.hpp"

namespace ut3 {

/// Raised when a matrix table fails to be a representation of G.
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical construction cannot reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Multiplicities (m_1, ..., m_11) of the irreps, in label order. Names the
 * canonical representation: the block-diagonal sum of m_i copies of each
 * irrep, irreps in label order and copies of the same irrep adjacent.
 */
class RepType {
 public:
  using Multiplicities = std::array<int, kNumIrreps>;

  constexpr RepType() noexcept = default;
  explicit RepType(const Multiplicities& m) : m_(m) {
    for (int x : m_)
      if (x < 0) throw std::invalid_argument("RepType: multiplicities must be non-negative");
  }

  /// Type of a single irrep.
  static RepType of(IrrepLabel label, int copies = 1) {
    Multiplicities m{};
    m[label.position()] = copies;
    return RepType(m);
  }

  /// Type of the regular representation: each irrep with multiplicity equal to its dimension.
  static RepType regular() { return RepType({1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3}); }

  /// Parses "m1,m2,...,m11".
  static RepType parse(const std::string& text) {
    Multiplicities m{};
    std::stringstream ss(text);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= kNumIrreps) throw std::invalid_argument("RepType: expected 11 multiplicities");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("RepType: '" + item + "' is not an integer");
      }
      if (used != item.size()) throw std::invalid_argument("RepType: '" + item + "' is not an integer");
      m[i++] = v;
    }
    if (i != kNumIrreps) throw std::invalid_argument("RepType: expected 11 multiplicities");
    return RepType(m);
  }

  const Multiplicities& multiplicities() const noexcept { return m_; }
  int operator[](std::size_t i) const { return m_.at(i); }

  int dimension() const noexcept {
    int d = 0;
    for (std::size_t i = 0; i < kNumIrreps; ++i) d += m_[i] * irrep_dimension(i);
    return d;
  }

  /// Row/column where the isotypic block of irrep i starts in the canonical basis.
  int offset(std::size_t i) const {
    int d = 0;
    for (std::size_t j = 0; j < i; ++j) d += m_[j] * irrep_dimension(j);
    return d;
  }

  /// Nonzero multiplicity only on the trivial irrep.
  bool is_scalar() const noexcept {
    return std::all_of(m_.begin() + 1, m_.end(), [](int x) { return x == 0; });
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kNumIrreps; ++i) out += (i ? "," : "") + std::to_string(m_[i]);
    return out;
  }

  friend bool operator==(const RepType&, const RepType&) = default;

 private:
  Multiplicities m_{};
};

/// A matrix representation G -> GL(d, C), stored as its 27 matrices.
class MatrixRep {
 public:
  using Table = std::array<Matrix, GroupElement::kOrder>;

  MatrixRep() = default;
  MatrixRep(int dimension, Table table) : dim_(dimension), table_(std::move(table)) {
    for (const Matrix& m : table_)
      if (m.rows() != dim_ || m.cols() != dim_)
        throw std::invalid_argument("MatrixRep: every matrix must be " + std::to_string(dim_) + "x" +
                                    std::to_string(dim_));
  }

  static MatrixRep from_function(int dimension, const std::function<Matrix(GroupElement)>& f) {
    Table t;
    for (GroupElement g : elements()) t[g.index()] = f(g);
    return MatrixRep(dimension, std::move(t));
  }

  int dimension() const noexcept { return dim_; }
  const Matrix& evaluate(GroupElement g) const { return table_[g.index()]; }
  const Matrix& operator()(GroupElement g) const { return evaluate(g); }
  const Table& table() const noexcept { return table_; }

  /// Conjugated copy S^-1 rho(g) S.
  MatrixRep conjugated(const Matrix& s) const {
    const Matrix s_inv = s.inverse();
    Table t;
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = s_inv * table_[i] * s;
    return MatrixRep(dim_, std::move(t));
  }

  /// max ||rho(gh) - rho(g) rho(h)|| over all pairs, together with ||rho(e) - I||.
  double homomorphism_residual() const {
    double worst = max_abs(evaluate(GroupElement::identity()) - Matrix::Identity(dim_, dim_));
    for (GroupElement g : elements())
      for (GroupElement h : elements())
        worst = std::max(worst, max_abs(evaluate(mul(g, h)) - evaluate(g) * evaluate(h)));
    return worst;
  }

  /**
   * Cheap homomorphism test: rho(e) = I and rho(s h) = rho(s) rho(h) for the
   * generators s in {g(1,0,0), g(0,0,1)} and every h. Sufficient, since every
   * element is a word in the generators.
   */
  double generator_residual() const {
    double worst = max_abs(evaluate(GroupElement::identity()) - Matrix::Identity(dim_, dim_));
    for (GroupElement s : {GroupElement(1, 0, 0), GroupElement(0, 0, 1)})
      for (GroupElement h : elements())
        worst = std::max(worst, max_abs(evaluate(mul(s, h)) - evaluate(s) * evaluate(h)));
    return worst;
  }

  Complex character(GroupElement g) const { return evaluate(g).trace(); }

 private:
  int dim_ = 0;
  Table table_;
};

/// The irrep itself as a MatrixRep.
inline MatrixRep irrep_rep(IrrepLabel label) {
  return MatrixRep::from_function(label.dimension(),
                                  [label](GroupElement g) { return to_matrix(evaluate(label, g)); });
}

/// Block-diagonal sum of m_i copies of each irrep, in label order.
inline MatrixRep canonical_rep(const RepType& t) {
  const int dim = t.dimension();
  return MatrixRep::from_function(dim, [&t, dim](GroupElement g) {
    Matrix m = Matrix::Zero(dim, dim);
    int at = 0;
    for (IrrepLabel label : all_irreps()) {
      const Matrix block = to_matrix(evaluate(label, g));
      const int d = label.dimension();
      for (int copy = 0; copy < t[label.position()]; ++copy, at += d) m.block(at, at, d, d) = block;
    }
    return m;
  });
}

/// L_g delta_h = delta_{gh} on the 27-dimensional space of functions on G.
inline MatrixRep regular_representation() {
  return MatrixRep::from_function(static_cast<int>(GroupElement::kOrder), [](GroupElement g) {
    Matrix m = Matrix::Zero(GroupElement::kOrder, GroupElement::kOrder);
    for (GroupElement h : elements())
      m(static_cast<Eigen::Index>(mul(g, h).index()), static_cast<Eigen::Index>(h.index())) = 1.0;
    return m;
  });
}

inline constexpr double kMultiplicityTolerance = 1e-6;

/// Multiplicity of irrep i in a representation with the given character values.
inline Complex multiplicity_estimate(const MatrixRep& rep, IrrepLabel label) {
  Complex sum = 0.0;
  for (GroupElement g : elements()) sum += rep.character(g) * std::conj(to_complex(character_at(label, g)));
  return sum / static_cast<double>(GroupElement::kOrder);
}

/**
 * m_j = <chi_rep, chi_j>, rounded to the nearest integer. Throws
 * RepresentationError if any estimate is further than `tol` from a
 * non-negative integer or the dimensions do not add up.
 */
inline RepType type_of(const MatrixRep& rep, double tol = kMultiplicityTolerance) {
  RepType::Multiplicities m{};
  for (IrrepLabel label : all_irreps()) {
    const Complex est = multiplicity_estimate(rep, label);
    const double rounded = std::round(est.real());
    if (std::abs(est - Complex(rounded, 0.0)) > tol || rounded < 0) {
      std::ostringstream msg;
      msg << "type_of: multiplicity of " << label.name() << " is " << est
          << ", not a non-negative integer";
      throw RepresentationError(msg.str());
    }
    m[label.position()] = static_cast<int>(rounded);
  }
  RepType t(m);
  if (t.dimension() != rep.dimension()) {
    throw RepresentationError("type_of: multiplicities account for dimension " +
                              std::to_string(t.dimension()) + ", representation has " +
                              std::to_string(rep.dimension()));
  }
  return t;
}

/// P_i = (d_i / |G|) sum_g conj(chi_i(g)) rho(g)
inline Matrix isotypic_projector(const MatrixRep& rep, IrrepLabel label) {
  Matrix p = Matrix::Zero(rep.dimension(), rep.dimension());
  for (GroupElement g : elements()) p += std::conj(to_complex(character_at(label, g))) * rep(g);
  return p * (static_cast<double>(label.dimension()) / static_cast<double>(GroupElement::kOrder));
}

struct BlockBasis {
  Matrix q;        // columns: canonical basis vectors expressed in the input basis
  RepType type;
  double residual = 0.0;  // max_g ||Q^-1 rho(g) Q - canonical(g)||
};

inline constexpr double kBlockBasisTolerance = 1e-9;
inline constexpr double kMaxConditionNumber = 1e8;

/**
 * Change of basis Q with Q^-1 rho(g) Q = canonical_rep(type_of(rho))(g).
 *
 * For each irrep i, copy k of rho_i is spanned by the columns of
 * X = (1/|G|) sum_g rho(g) P_i B rho_i(g^-1) for a random seed matrix B;
 * every such X intertwines rho_i into rho. Independent copies come from
 * independent seeds; a poorly conditioned draw is retried with a new seed.
 */
inline BlockBasis block_basis(const MatrixRep& rep, double tol = kBlockBasisTolerance,
                              std::uint64_t seed = 0x5eed) {
  const RepType type = type_of(rep);
  const int dim = rep.dimension();
  const MatrixRep target = canonical_rep(type);
  constexpr int kMaxAttempts = 8;

  double last_residual = 0.0;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    Matrix q(dim, dim);
    bool well_conditioned = true;
    for (IrrepLabel label : all_irreps()) {
      const int copies = type[label.position()];
      if (copies == 0) continue;
      const int d = label.dimension();
      const Matrix projector = isotypic_projector(rep, label);
      Matrix component(dim, copies * d);
      for (int k = 0; k < copies; ++k) {
        const Matrix seed_block = projector * rng.matrix(dim, d);
        Matrix x = Matrix::Zero(dim, d);
        for (GroupElement g : elements())
          x += rep(g) * seed_block * to_matrix(evaluate(label, inverse(g)));
        component.middleCols(k * d, d) = x / static_cast<double>(GroupElement::kOrder);
      }
      if (condition_number(component) > kMaxConditionNumber) {
        well_conditioned = false;
        break;
      }
      q.middleCols(type.offset(label.position()), copies * d) = component;
    }
    if (!well_conditioned || (dim > 0 && condition_number(q) > kMaxConditionNumber)) continue;

    const Matrix q_inv = q.inverse();
    double residual = 0.0;
    for (GroupElement g : elements())
      residual = std::max(residual, max_abs(q_inv * rep(g) * q - target(g)));
    last_residual = residual;
    if (residual < tol) return {q, type, residual};
  }
  throw NumericalError("block_basis: no basis reached residual " + std::to_string(tol) +
                       " (last " + std::to_string(last_residual) + ")");
}

}  // namespace ut3
