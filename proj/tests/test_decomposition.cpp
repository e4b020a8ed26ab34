#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ut3 {
namespace {

const GroupElement e = GroupElement::identity();

RepType::Multiplicities with(std::initializer_list<std::pair<std::size_t, int>> entries) {
  RepType::Multiplicities m{};
  for (auto [pos, count] : entries) m[pos] = count;
  return m;
}

RepType random_type(Rng& rng, int max_dim) {
  while (true) {
    RepType::Multiplicities m{};
    for (std::size_t i = 0; i < kNumIrreps; ++i) m[i] = static_cast<int>(rng.below(i < 9 ? 3 : 3));
    const RepType t(m);
    if (t.dimension() > 0 && t.dimension() <= max_dim) return t;
  }
}

TEST(RepType, DimensionOffsetsAndParsing) {
  const RepType t = RepType::parse("1,0,0,0,0,0,0,0,0,1,0");
  EXPECT_EQ(t.dimension(), 4);
  EXPECT_EQ(t.offset(9), 1);
  EXPECT_EQ(RepType::regular().dimension(), 27);
  EXPECT_EQ(RepType(with({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 3}, {10, 3}})),
            RepType::regular());
  EXPECT_THROW(RepType::parse("1,2,3"), std::invalid_argument);
  EXPECT_THROW(RepType::parse("1,0,0,0,0,0,0,0,0,x,0"), std::invalid_argument);
  EXPECT_THROW(RepType::parse("1,0,0,0,0,0,0,0,0,-1,0"), std::invalid_argument);
}

TEST(CanonicalRep, SingleIrrepIsTheIrrep) {
  const MatrixRep rep = canonical_rep(RepType::of(IrrepLabel::three_dim(1)));
  ASSERT_EQ(rep.dimension(), 3);
  for (GroupElement g : elements()) EXPECT_EQ(max_abs(rep(g) - to_matrix(rho_3d(1, g))), 0.0);
}

TEST(CanonicalRep, CharacterIsSumOfTableColumns) {
  const RepType t(with({{0, 1}, {9, 1}}));
  const MatrixRep rep = canonical_rep(t);
  EXPECT_EQ(rep.dimension(), 4);
  const CharacterTable table = testing::reference_table();
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const Cyclotomic expected = table[c][0] + table[c][9];
    EXPECT_LT(std::abs(rep.character(kClassRepresentatives[c]) - to_complex(expected)), 1e-12) << "C" << c + 1;
  }
  EXPECT_LT(std::abs(rep.character(e) - Complex(4, 0)), 1e-12);
  EXPECT_LT(std::abs(rep.character(GroupElement(0, 1, 0)) - to_complex(Cyclotomic(1, 3))), 1e-12);
  EXPECT_EQ(canonical_rep(RepType::regular()).dimension(), 27);
}

TEST(MatrixRep, HomomorphismChecks) {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const MatrixRep rep = canonical_rep(random_type(rng, 12));
    EXPECT_LT(rep.homomorphism_residual(), 1e-10);
    EXPECT_LT(rep.generator_residual(), 1e-10);
    for (GroupElement g : elements())
      EXPECT_LT(max_abs(rep(g) * rep(inverse(g)) - Matrix::Identity(rep.dimension(), rep.dimension())), 1e-10);
  }
  // A table that is not a homomorphism is caught by the generator test.
  MatrixRep::Table bogus;
  for (GroupElement g : elements()) bogus[g.index()] = Matrix::Identity(1, 1) * (g.is_identity() ? 1.0 : 2.0);
  EXPECT_GT(MatrixRep(1, bogus).generator_residual(), 0.5);
}

TEST(RegularRepresentation, PermutationWithoutFixedPoints) {
  const MatrixRep reg = regular_representation();
  EXPECT_EQ(max_abs(reg(e) - Matrix::Identity(27, 27)), 0.0);
  for (GroupElement g : elements()) {
    if (!g.is_identity()) EXPECT_EQ(reg.character(g), Complex(0.0, 0.0));
    for (GroupElement h : elements())
      EXPECT_EQ(reg(g)(static_cast<Eigen::Index>(mul(g, h).index()), static_cast<Eigen::Index>(h.index())), Complex(1.0, 0.0));
  }
  EXPECT_LT(reg.homomorphism_residual(), 1e-12);
}

TEST(TypeOf, Examples) {
  EXPECT_EQ(type_of(regular_representation()), RepType::regular());
  EXPECT_EQ(type_of(irrep_rep(IrrepLabel::three_dim(1))), RepType::of(IrrepLabel::three_dim(1)));
}

TEST(TypeOf, InvertsCanonicalRep) {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const RepType t = random_type(rng, 30);
    EXPECT_EQ(type_of(canonical_rep(t)), t) << t.to_string();
  }
}

TEST(TypeOf, RejectsNonRepresentations) {
  MatrixRep::Table half;
  for (Matrix& m : half) m = Matrix::Identity(1, 1) * 0.5;
  EXPECT_THROW(type_of(MatrixRep(1, half)), RepresentationError);
}

TEST(IsotypicProjector, TrivialComponentOfRegularIsAveraging) {
  const Matrix p = isotypic_projector(regular_representation(), IrrepLabel::one_dim(0, 0));
  EXPECT_LT(max_abs(p - Matrix::Constant(27, 27, 1.0 / 27.0)), 1e-14);
  EXPECT_EQ(numerical_rank(p), 1);
}

TEST(IsotypicProjector, AlgebraOnScrambledReps) {
  Rng rng(8);
  for (int trial = 0; trial < 4; ++trial) {
    const RepType t = random_type(rng, 10);
    const int d = t.dimension();
    const MatrixRep rep = canonical_rep(t).conjugated(Matrix::Identity(d, d) + 0.4 * rng.matrix(d, d));
    Matrix sum = Matrix::Zero(d, d);
    Eigen::Index total_rank = 0;
    std::vector<Matrix> ps;
    for (IrrepLabel label : all_irreps()) {
      const Matrix p = isotypic_projector(rep, label);
      EXPECT_LT(max_abs(p * p - p), 1e-10);
      const Eigen::Index rank = numerical_rank(p);
      EXPECT_EQ(rank, t[label.position()] * label.dimension());
      total_rank += rank;
      for (GroupElement g : elements()) EXPECT_LT(max_abs(p * rep(g) - rep(g) * p), 1e-10);
      for (const Matrix& q : ps) EXPECT_LT(max_abs(p * q), 1e-10);
      ps.push_back(p);
      sum += p;
    }
    EXPECT_LT(max_abs(sum - Matrix::Identity(d, d)), 1e-10);
    EXPECT_EQ(total_rank, d);
  }
}

TEST(IsotypicProjector, BlockIndicatorsOnCanonicalReps) {
  const RepType t(with({{0, 2}, {4, 1}, {9, 1}, {10, 2}}));
  const MatrixRep rep = canonical_rep(t);
  for (IrrepLabel label : all_irreps()) {
    const Matrix p = isotypic_projector(rep, label);
    Matrix expected = Matrix::Zero(t.dimension(), t.dimension());
    const int start = t.offset(label.position());
    const int len = t[label.position()] * label.dimension();
    expected.block(start, start, len, len).setIdentity();
    EXPECT_LT(max_abs(p - expected), 1e-12) << label.name();
  }
}

TEST(BlockBasis, CanonicalInputHasZeroResidual) {
  const RepType t(with({{1, 1}, {9, 2}}));
  const BlockBasis bb = block_basis(canonical_rep(t));
  EXPECT_EQ(bb.type, t);
  EXPECT_LT(bb.residual, 1e-12);
}

TEST(BlockBasis, RegularRepresentation) {
  const MatrixRep reg = regular_representation();
  const BlockBasis bb = block_basis(reg);
  EXPECT_EQ(bb.type, RepType::regular());
  EXPECT_LT(bb.residual, 1e-9);
  const MatrixRep canon = canonical_rep(bb.type);
  const Matrix q_inv = bb.q.inverse();
  for (GroupElement g : elements()) EXPECT_LT(max_abs(q_inv * reg(g) * bb.q - canon(g)), 1e-9);
}

TEST(BlockBasis, RecoversTypeOfScrambledReps) {
  Rng rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const RepType t = random_type(rng, 15);
    const int d = t.dimension();
    const MatrixRep scrambled = canonical_rep(t).conjugated(rng.matrix(d, d) + 2.0 * Matrix::Identity(d, d));
    const BlockBasis bb = block_basis(scrambled);
    EXPECT_EQ(bb.type, t);
    EXPECT_LT(bb.residual, 1e-9);
  }
}

}  // namespace
}  // namespace ut3
