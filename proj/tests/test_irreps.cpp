#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ut3 {
namespace {

const GroupElement e = GroupElement::identity();

TEST(IrrepLabel, OrderingAndNames) {
  const auto labels = all_irreps();
  int dim_squares = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    EXPECT_EQ(labels[i].position(), i);
    EXPECT_EQ(IrrepLabel::parse(labels[i].name()), labels[i]);
    EXPECT_EQ(IrrepLabel::parse(std::to_string(i + 1)), labels[i]);
    dim_squares += labels[i].dimension() * labels[i].dimension();
  }
  EXPECT_EQ(dim_squares, 27);
  EXPECT_EQ(labels.size(), kNumClasses);
  EXPECT_EQ(IrrepLabel::one_dim(1, 2).position(), 5u);
  EXPECT_EQ(IrrepLabel::three_dim(2).position(), 10u);
  EXPECT_FALSE(IrrepLabel::parse("rho3"));
  EXPECT_THROW(IrrepLabel::three_dim(0), std::invalid_argument);
}

TEST(Rho1d, Examples) {
  for (GroupElement g : elements()) EXPECT_EQ(rho_1d(0, 0, g), Cyclotomic(1));
  EXPECT_EQ(rho_1d(1, 0, GroupElement(1, 0, 0)), omega_pow(1));
  EXPECT_EQ(rho_1d(1, 2, GroupElement(1, 0, 1)), Cyclotomic(1));
}

TEST(Rho3d, Examples) {
  EXPECT_EQ(rho_3d(1, e), IrrepMatrix::identity(3));
  EXPECT_EQ(rho_3d(1, GroupElement(0, 1, 0)).trace(), Cyclotomic(0, 3));
  EXPECT_EQ(rho_3d(2, GroupElement(1, 0, 2)).trace(), Cyclotomic(0));
  EXPECT_THROW(rho_3d(3, e), std::invalid_argument);
}

TEST(Rho3d, PhasedPermutationStructure) {
  for (int k : {1, 2})
    for (GroupElement g : elements()) {
      const IrrepMatrix m = rho_3d(k, g);
      for (int n = 0; n < 3; ++n) {
        int nonzero = 0;
        for (int col = 0; col < 3; ++col)
          if (!m(n, col).is_zero()) {
            ++nonzero;
            EXPECT_EQ(col, mod3(g.a() + n));
            EXPECT_EQ(m(n, col), omega_pow(k * (g.b() + n * g.c())));
          }
        EXPECT_EQ(nonzero, 1);
      }
    }
}

TEST(Irreps, HomomorphismExact) {
  for (IrrepLabel label : all_irreps())
    for (GroupElement g : elements())
      for (GroupElement h : elements())
        ASSERT_EQ(evaluate(label, mul(g, h)), evaluate(label, g) * evaluate(label, h))
            << label.name() << " " << g << " " << h;
}

TEST(Irreps, Unitary) {
  for (IrrepLabel label : all_irreps())
    for (GroupElement g : elements()) {
      EXPECT_EQ(evaluate(label, inverse(g)), evaluate(label, g).adjoint());
      EXPECT_EQ(evaluate(label, g) * evaluate(label, g).adjoint(), IrrepMatrix::identity(label.dimension()));
    }
}

TEST(Characters, Examples) {
  const CharacterVector triv = character(IrrepLabel::one_dim(0, 0));
  for (Cyclotomic x : triv) EXPECT_EQ(x, Cyclotomic(1));
  const CharacterVector rho1 = character(IrrepLabel::three_dim(1));
  const CharacterVector expected{Cyclotomic(3), Cyclotomic(0, 3), Cyclotomic(-3, -3)};
  EXPECT_EQ(rho1, expected);
  EXPECT_EQ(character(IrrepLabel::one_dim(2, 1))[9], omega_pow(2));
}

TEST(Characters, ClassFunctionAndInverseConjugate) {
  for (IrrepLabel label : all_irreps()) {
    const CharacterVector chi = character(label);
    EXPECT_EQ(chi[0], Cyclotomic(label.dimension()));
    for (GroupElement g : elements()) {
      EXPECT_EQ(character_at(label, g), chi[class_position(g)]);
      EXPECT_EQ(character_at(label, inverse(g)), conj(character_at(label, g)));
    }
  }
}

TEST(CharacterTable, MatchesReferenceEntrywise) {
  const CharacterTable got = character_table();
  const CharacterTable want = testing::reference_table();
  for (std::size_t c = 0; c < kNumClasses; ++c)
    for (std::size_t i = 0; i < kNumIrreps; ++i)
      EXPECT_EQ(got[c][i], want[c][i]) << "C" << c + 1 << ", " << IrrepLabel::from_position(i).name();
  EXPECT_EQ(got, verify::published_character_table());
}

TEST(CharacterTable, ColumnOrthogonality) {
  // sum_i chi_i(C) conj(chi_i(C')) = delta_{CC'} |G| / |C|, summed exactly.
  const CharacterTable t = character_table();
  const auto sizes = class_sizes();
  for (std::size_t c = 0; c < kNumClasses; ++c)
    for (std::size_t c2 = 0; c2 < kNumClasses; ++c2) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < kNumIrreps; ++i) sum += t[c][i] * conj(t[c2][i]);
      const Cyclotomic expected = c == c2 ? Cyclotomic(static_cast<Cyclotomic::Int>(27 / sizes[c])) : Cyclotomic(0);
      EXPECT_EQ(sum, expected);
    }
}

TEST(InnerProduct, Examples) {
  const auto chi = [](IrrepLabel l) { return character(l); };
  EXPECT_EQ(inner_product(chi(IrrepLabel::three_dim(1)), chi(IrrepLabel::three_dim(1))), ExactRational(1));
  EXPECT_EQ(inner_product(chi(IrrepLabel::one_dim(0, 1)), chi(IrrepLabel::one_dim(1, 0))), ExactRational(0));
  EXPECT_EQ(inner_product(regular_character(), chi(IrrepLabel::three_dim(2))), ExactRational(3));
}

TEST(InnerProduct, OrthonormalOnAllPairs) {
  for (IrrepLabel x : all_irreps())
    for (IrrepLabel y : all_irreps())
      EXPECT_EQ(inner_product(character(x), character(y)), ExactRational(x == y ? 1 : 0));
}

TEST(InnerProduct, RejectsNonRealSums) {
  CharacterVector bad{};
  bad[0] = omega_pow(1);
  EXPECT_THROW(inner_product(bad, character(IrrepLabel::one_dim(0, 0))), std::domain_error);
  // Non-integer but real results come back as fractions.
  CharacterVector one_at_e{};
  one_at_e[0] = Cyclotomic(1);
  EXPECT_EQ(inner_product(one_at_e, character(IrrepLabel::one_dim(0, 0))), ExactRational(1, 27));
}

TEST(InducedCharacter, Examples) {
  EXPECT_EQ(induced_character(1, e), Cyclotomic(3));
  EXPECT_EQ(induced_character(1, GroupElement(0, 2, 0)), Cyclotomic(-3, -3));
  EXPECT_EQ(induced_character(2, GroupElement(2, 0, 1)), Cyclotomic(0));
  EXPECT_THROW(induced_character(0, e), std::invalid_argument);
}

TEST(InducedCharacter, EqualsTraceOfInducedMatrices) {
  for (int k : {1, 2})
    for (GroupElement u : elements()) EXPECT_EQ(induced_character(k, u), rho_3d(k, u).trace());
}

}  // namespace
}  // namespace ut3
