#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ut3/group.hpp"

namespace ut3 {

/**
 * Exact element m + n*w of Z[w], w = exp(2 pi i / 3), reduced with
 * w^2 = -1 - w. All irrep entries and character values live here.
 */
class Cyclotomic {
 public:
  using Int = std::int64_t;

  constexpr Cyclotomic() noexcept = default;
  constexpr Cyclotomic(Int one) noexcept : one_(one) {}  // NOLINT(google-explicit-constructor)
  constexpr Cyclotomic(Int one, Int omega) noexcept : one_(one), omega_(omega) {}

  constexpr Int one() const noexcept { return one_; }
  constexpr Int omega() const noexcept { return omega_; }

  constexpr bool is_zero() const noexcept { return one_ == 0 && omega_ == 0; }
  constexpr bool is_integer() const noexcept { return omega_ == 0; }

  friend constexpr bool operator==(Cyclotomic, Cyclotomic) noexcept = default;

  friend constexpr Cyclotomic operator+(Cyclotomic x, Cyclotomic y) noexcept {
    return {checked_add(x.one_, y.one_), checked_add(x.omega_, y.omega_)};
  }
  friend constexpr Cyclotomic operator-(Cyclotomic x, Cyclotomic y) noexcept {
    return {checked_add(x.one_, -y.one_), checked_add(x.omega_, -y.omega_)};
  }
  friend constexpr Cyclotomic operator-(Cyclotomic x) noexcept { return {-x.one_, -x.omega_}; }

  // (m + n w)(p + q w) = mp - nq + (mq + np - nq) w
  friend constexpr Cyclotomic operator*(Cyclotomic x, Cyclotomic y) noexcept {
    const Int mp = checked_mul(x.one_, y.one_);
    const Int nq = checked_mul(x.omega_, y.omega_);
    const Int mq = checked_mul(x.one_, y.omega_);
    const Int np = checked_mul(x.omega_, y.one_);
    return {checked_add(mp, -nq), checked_add(checked_add(mq, np), -nq)};
  }

  constexpr Cyclotomic& operator+=(Cyclotomic y) noexcept { return *this = *this + y; }
  constexpr Cyclotomic& operator-=(Cyclotomic y) noexcept { return *this = *this - y; }
  constexpr Cyclotomic& operator*=(Cyclotomic y) noexcept { return *this = *this * y; }

  friend std::ostream& operator<<(std::ostream& os, Cyclotomic x) { return os << x.to_string(); }

  /// "m+n*w", e.g. "1+0*w", "-1-1*w".
  std::string to_string() const {
    return std::to_string(one_) + (omega_ < 0 ? "-" : "+") +
           std::to_string(omega_ < 0 ? -omega_ : omega_) + "*w";
  }

  /// Compact form using the symbols ω and ω²: "0", "1", "3ω", "-ω²", "1+2ω".
  std::string to_unicode() const {
    auto scaled = [](Int k, const char* unit) {
      if (k == 1) return std::string(unit);
      if (k == -1) return "-" + std::string(unit);
      return std::to_string(k) + unit;
    };
    if (omega_ == 0) return std::to_string(one_);
    if (one_ == 0) return scaled(omega_, "ω");
    if (one_ == omega_) return scaled(-one_, "ω²");  // k w^2 = -k - k w
    return std::to_string(one_) + (omega_ < 0 ? "-" : "+") +
           scaled(omega_ < 0 ? -omega_ : omega_, "ω");
  }

 private:
  static constexpr Int checked_add(Int x, Int y) noexcept {
    Int r = 0;
    [[maybe_unused]] const bool overflow = __builtin_add_overflow(x, y, &r);
    assert(!overflow && "Cyclotomic coefficient overflow");
    return r;
  }
  static constexpr Int checked_mul(Int x, Int y) noexcept {
    Int r = 0;
    [[maybe_unused]] const bool overflow = __builtin_mul_overflow(x, y, &r);
    assert(!overflow && "Cyclotomic coefficient overflow");
    return r;
  }

  Int one_ = 0;
  Int omega_ = 0;
};

/// w^(j mod 3)
constexpr Cyclotomic omega_pow(long long j) noexcept {
  switch (mod3(j)) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    default:
      return {-1, -1};
  }
}

/// Complex conjugate: conj(w) = w^2, so m + n w -> (m - n) - n w.
constexpr Cyclotomic conj(Cyclotomic x) noexcept {
  return {x.one() - x.omega(), -x.omega()};
}

inline std::complex<double> to_complex(Cyclotomic x) noexcept {
  const double m = static_cast<double>(x.one());
  const double n = static_cast<double>(x.omega());
  return {m - 0.5 * n, n * (std::sqrt(3.0) / 2.0)};
}

/// Reduced fraction with positive denominator.
class ExactRational {
 public:
  using Int = std::int64_t;

  constexpr ExactRational() noexcept = default;
  constexpr ExactRational(Int value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(Int num, Int den) {
    if (den == 0) throw std::domain_error("ExactRational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const Int g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / g;
    den_ = den / g;
  }

  constexpr Int numerator() const noexcept { return num_; }
  constexpr Int denominator() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr bool operator==(ExactRational, ExactRational) noexcept = default;

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, ExactRational q) { return os << q.to_string(); }

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace ut3
