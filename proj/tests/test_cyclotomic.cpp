#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ut3 {
namespace {

TEST(Cyclotomic, OmegaPowers) {
  EXPECT_EQ(omega_pow(0), Cyclotomic(1));
  EXPECT_EQ(omega_pow(1) * omega_pow(2), Cyclotomic(1));
  EXPECT_EQ(omega_pow(1) + omega_pow(2), Cyclotomic(-1));
  EXPECT_EQ(omega_pow(-1), omega_pow(2));
  EXPECT_EQ(omega_pow(1) * omega_pow(1) * omega_pow(1), Cyclotomic(1));
}

TEST(Cyclotomic, Conjugation) {
  EXPECT_EQ(conj(omega_pow(1)), omega_pow(2));
  EXPECT_EQ(conj(Cyclotomic(3)), Cyclotomic(3));
  const Cyclotomic x(1, 2);
  EXPECT_EQ(conj(x), Cyclotomic(-1, -2));
  EXPECT_LT(std::abs(to_complex(conj(x)) - std::conj(to_complex(x))), 1e-12);
  EXPECT_EQ(conj(conj(x)), x);
}

TEST(Cyclotomic, ToComplex) {
  EXPECT_EQ(to_complex(Cyclotomic(1)), std::complex<double>(1.0, 0.0));
  EXPECT_NEAR(to_complex(omega_pow(1)).real(), -0.5, 1e-15);
  EXPECT_NEAR(to_complex(omega_pow(1)).imag(), 0.8660254037844386, 1e-15);
  const std::complex<double> oracle = 3.0 * std::polar(1.0, -2.0 * std::numbers::pi / 3.0);
  const std::complex<double> got = to_complex(Cyclotomic(3) * omega_pow(2));
  EXPECT_NEAR(got.real(), -1.5, 1e-12);
  EXPECT_NEAR(got.imag(), -2.598076211353316, 1e-12);
  EXPECT_LT(std::abs(got - oracle), 1e-12);
  for (int j = 0; j < 3; ++j) EXPECT_LT(std::abs(to_complex(omega_pow(j)) - testing::omega_numeric(j)), 1e-15);
}

TEST(Cyclotomic, RingOpsMatchComplexArithmetic) {
  Rng rng(11);
  auto draw = [&] {
    return Cyclotomic(static_cast<Cyclotomic::Int>(rng.below(2000001)) - 1000000,
                      static_cast<Cyclotomic::Int>(rng.below(2000001)) - 1000000);
  };
  for (int i = 0; i < 1000; ++i) {
    const Cyclotomic x = draw(), y = draw(), z = draw();
    const auto xc = to_complex(x), yc = to_complex(y);
    auto rel = [](auto a, auto b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    EXPECT_LT(rel(to_complex(x * y), xc * yc), 1e-9);
    EXPECT_LT(rel(to_complex(x + y), xc + yc), 1e-9);
    EXPECT_LT(rel(to_complex(x - y), xc - yc), 1e-9);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(conj(x * y), conj(x) * conj(y));
    EXPECT_EQ(conj(x + y), conj(x) + conj(y));
  }
}

TEST(Cyclotomic, UnicodeRendering) {
  EXPECT_EQ(Cyclotomic(0).to_unicode(), "0");
  EXPECT_EQ(Cyclotomic(3).to_unicode(), "3");
  EXPECT_EQ(omega_pow(1).to_unicode(), "ω");
  EXPECT_EQ(omega_pow(2).to_unicode(), "ω²");
  EXPECT_EQ((Cyclotomic(3) * omega_pow(2)).to_unicode(), "3ω²");
  EXPECT_EQ(Cyclotomic(1, 3).to_unicode(), "1+3ω");
  EXPECT_EQ(Cyclotomic(1, 2).to_string(), "1+2*w");
  EXPECT_EQ(Cyclotomic(-1, -1).to_string(), "-1-1*w");
}

TEST(ExactRational, ReducesAndNormalizesSign) {
  const ExactRational q(27, 27);
  EXPECT_TRUE(q.is_integer());
  EXPECT_EQ(q, ExactRational(1));
  const ExactRational r(6, -27);
  EXPECT_EQ(r.numerator(), -2);
  EXPECT_EQ(r.denominator(), 9);
  EXPECT_EQ(r.to_string(), "-2/9");
  EXPECT_THROW(ExactRational(1, 0), std::domain_error);
}

}  // namespace
}  // namespace ut3
