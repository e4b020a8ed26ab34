#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ut3/cyclotomic.hpp"
#include "ut3/group.hpp"

namespace ut3 {

inline constexpr std::size_t kNumIrreps = 11;

/**
 * One of the 11 irreducible representations, identified by its 0-based
 * column position in the character table:
 *
 *   0..8   rho(r,s), one-dimensional, position 3r + s
 *   9, 10  rho1, rho2, three-dimensional, induced from H = {g(0,b,c)}
 */
class IrrepLabel {
 public:
  static constexpr IrrepLabel one_dim(int r, int s) noexcept {
    return IrrepLabel(static_cast<std::size_t>(3 * mod3(r) + mod3(s)));
  }
  static IrrepLabel three_dim(int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("three-dimensional irrep index must be 1 or 2");
    return IrrepLabel(static_cast<std::size_t>(8 + k));
  }
  static IrrepLabel from_position(std::size_t pos) {
    if (pos >= kNumIrreps) throw std::out_of_range("irrep position out of range");
    return IrrepLabel(pos);
  }

  /// Parses "rho(r,s)", "rho1", "rho2", or a 1-based table column "1".."11".
  static std::optional<IrrepLabel> parse(std::string_view text) {
    for (std::size_t i = 0; i < kNumIrreps; ++i) {
      const IrrepLabel l(i);
      if (text == l.name() || text == std::to_string(i + 1)) return l;
    }
    return std::nullopt;
  }

  constexpr std::size_t position() const noexcept { return pos_; }
  /// 1-based column number, as printed in tables and used as JSON block keys.
  constexpr std::size_t number() const noexcept { return pos_ + 1; }
  constexpr bool is_one_dim() const noexcept { return pos_ < 9; }
  constexpr int dimension() const noexcept { return is_one_dim() ? 1 : 3; }
  constexpr int r() const noexcept { return static_cast<int>(pos_ / 3); }
  constexpr int s() const noexcept { return static_cast<int>(pos_ % 3); }
  constexpr int k() const noexcept { return static_cast<int>(pos_) - 8; }
  constexpr bool is_trivial() const noexcept { return pos_ == 0; }

  std::string name() const {
    if (is_one_dim()) return "rho(" + std::to_string(r()) + "," + std::to_string(s()) + ")";
    return "rho" + std::to_string(k());
  }

  friend constexpr bool operator==(IrrepLabel, IrrepLabel) noexcept = default;

 private:
  constexpr explicit IrrepLabel(std::size_t pos) noexcept : pos_(pos) {}
  std::size_t pos_;
};

inline std::array<IrrepLabel, kNumIrreps> all_irreps() {
  return {IrrepLabel::from_position(0), IrrepLabel::from_position(1), IrrepLabel::from_position(2),
          IrrepLabel::from_position(3), IrrepLabel::from_position(4), IrrepLabel::from_position(5),
          IrrepLabel::from_position(6), IrrepLabel::from_position(7), IrrepLabel::from_position(8),
          IrrepLabel::from_position(9), IrrepLabel::from_position(10)};
}

constexpr int irrep_dimension(std::size_t pos) noexcept { return pos < 9 ? 1 : 3; }

/// Square matrix of size 1 or 3 over Z[w].
class IrrepMatrix {
 public:
  explicit IrrepMatrix(int dim = 1) : dim_(dim) {
    if (dim != 1 && dim != 3) throw std::invalid_argument("IrrepMatrix dimension must be 1 or 3");
  }

  static IrrepMatrix identity(int dim) {
    IrrepMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  int dim() const noexcept { return dim_; }
  Cyclotomic& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row * 3 + col)]; }
  Cyclotomic operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * 3 + col)];
  }

  Cyclotomic trace() const {
    Cyclotomic t;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  IrrepMatrix adjoint() const {
    IrrepMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out(i, j) = conj((*this)(j, i));
    return out;
  }

  friend IrrepMatrix operator*(const IrrepMatrix& x, const IrrepMatrix& y) {
    if (x.dim_ != y.dim_) throw std::invalid_argument("IrrepMatrix dimension mismatch");
    IrrepMatrix out(x.dim_);
    for (int i = 0; i < x.dim_; ++i)
      for (int j = 0; j < x.dim_; ++j)
        for (int l = 0; l < x.dim_; ++l) out(i, j) += x(i, l) * y(l, j);
    return out;
  }

  friend bool operator==(const IrrepMatrix& x, const IrrepMatrix& y) {
    if (x.dim_ != y.dim_) return false;
    for (int i = 0; i < x.dim_; ++i)
      for (int j = 0; j < x.dim_; ++j)
        if (x(i, j) != y(i, j)) return false;
    return true;
  }

 private:
  int dim_;
  std::array<Cyclotomic, 9> entries_{};
};

/// rho(r,s)(g(a,b,c)) = w^(r a + s c)
constexpr Cyclotomic rho_1d(int r, int s, GroupElement g) noexcept {
  return omega_pow(r * g.a() + s * g.c());
}

/**
 * The induced representation Ind_H^G(tau_k), tau_k(g(0,b,c)) = w^(k b), in the
 * basis v[n] = phi(g(n,0,0)) of coset functions. G acts on functions by
 * (g.phi)(x) = phi(x g), which gives
 *
 *     (rho_k(g(a,b,c)) v)[n] = w^(k (b + n c)) v[(a + n) mod 3]
 *
 * i.e. a permutation matrix with phases.
 */
inline IrrepMatrix rho_3d(int k, GroupElement g) {
  if (k != 1 && k != 2) throw std::invalid_argument("rho_3d: k must be 1 or 2");
  IrrepMatrix m(3);
  for (int n = 0; n < 3; ++n) m(n, mod3(g.a() + n)) = omega_pow(k * (g.b() + n * g.c()));
  return m;
}

inline IrrepMatrix evaluate(IrrepLabel label, GroupElement g) {
  if (label.is_one_dim()) {
    IrrepMatrix m(1);
    m(0, 0) = rho_1d(label.r(), label.s(), g);
    return m;
  }
  return rho_3d(label.k(), g);
}

/// Character values on C_1 ... C_11.
using CharacterVector = std::array<Cyclotomic, kNumClasses>;

/// Trace at each class representative. Class functions by construction;
/// constancy on classes is covered by the test suite.
inline CharacterVector character(IrrepLabel label) {
  CharacterVector chi{};
  for (std::size_t i = 0; i < kNumClasses; ++i) chi[i] = evaluate(label, kClassRepresentatives[i]).trace();
  return chi;
}

/// Character of an arbitrary element.
inline Cyclotomic character_at(IrrepLabel label, GroupElement g) { return evaluate(label, g).trace(); }

/// Rows are classes C_1..C_11, columns the irreps in label order.
using CharacterTable = std::array<std::array<Cyclotomic, kNumIrreps>, kNumClasses>;

inline CharacterTable character_table() {
  CharacterTable table{};
  for (IrrepLabel label : all_irreps()) {
    const CharacterVector chi = character(label);
    for (std::size_t c = 0; c < kNumClasses; ++c) table[c][label.position()] = chi[c];
  }
  return table;
}

/// The character of the regular representation: 27 at e, 0 elsewhere.
inline CharacterVector regular_character() {
  CharacterVector chi{};
  chi[0] = static_cast<Cyclotomic::Int>(GroupElement::kOrder);
  return chi;
}

/**
 * <x, y> = (1/|G|) sum_g x(g) conj(y(g)), accumulated exactly in Z[w] as
 * sum over classes of |C| x(C) conj(y(C)). The sum of two class functions
 * that are characters is real; a nonzero w-part signals malformed input.
 */
inline ExactRational inner_product(const CharacterVector& x, const CharacterVector& y) {
  const auto sizes = class_sizes();
  Cyclotomic sum;
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    sum += Cyclotomic(static_cast<Cyclotomic::Int>(sizes[i])) * x[i] * conj(y[i]);
  }
  if (sum.omega() != 0) {
    throw std::domain_error("inner_product: accumulated sum " + sum.to_string() +
                            " is not real; inputs are not characters");
  }
  return {sum.one(), static_cast<ExactRational::Int>(GroupElement::kOrder)};
}

/// tau_k on H = {g(0,b,c)}: trivial on c.
inline Cyclotomic tau(int k, GroupElement h) {
  if (h.a() != 0) throw std::invalid_argument("tau: element is not in H");
  return omega_pow(k * h.b());
}

/// Induced character of tau_k at u: sum over coset representatives r with
/// r^-1 u r in H of tau_k(r^-1 u r).
inline Cyclotomic induced_character(int k, GroupElement u) {
  if (k != 1 && k != 2) throw std::invalid_argument("induced_character: k must be 1 or 2");
  Cyclotomic sum;
  for (GroupElement r : right_coset_representatives()) {
    const GroupElement x = mul(mul(inverse(r), u), r);
    if (x.a() == 0) sum += tau(k, x);
  }
  return sum;
}

}  // namespace ut3
