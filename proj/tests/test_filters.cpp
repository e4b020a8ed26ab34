#include <gtest/gtest.h>

#include "test_support.hpp"

namespace ut3 {
namespace {

const GroupElement e = GroupElement::identity();
const IrrepLabel kTriv = IrrepLabel::one_dim(0, 0);

RepType triv_plus_rho1() { return RepType({1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}); }

KernelTable random_kernel(Rng& rng, int rows, int cols) {
  KernelTable raw;
  for (Matrix& k : raw) k = rng.matrix(rows, cols);
  return raw;
}

TEST(ParameterCount, SharedIrrepProducts) {
  const RepType in = RepType({1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0});
  const RepType out = RepType({2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0});
  EXPECT_EQ(parameter_count(in, out), 54);
  EXPECT_EQ(parameter_count(RepType::regular(), RepType({2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0})), 27 * (2 + 3));
  EXPECT_EQ(parameter_count(RepType::of(IrrepLabel::three_dim(1)), RepType::of(IrrepLabel::three_dim(2))), 0);
  EXPECT_TRUE(shared_irreps(RepType::of(IrrepLabel::three_dim(1)), RepType::of(IrrepLabel::three_dim(2))).empty());
}

TEST(BuildFilter, ZeroAndScalarBlocks) {
  const RepType t = RepType::of(IrrepLabel::three_dim(1));
  const EquivariantFilter zero = zero_filter(t, t);
  for (const Matrix& k : zero.kernel_table()) EXPECT_EQ(max_abs(k), 0.0);

  const Complex lambda(0.5, -2.0);
  BlockTable table;
  for (Matrix& a : table) a = Matrix::Constant(1, 1, lambda);
  const EquivariantFilter f = build_filter({{9, table}}, t, t);
  EXPECT_EQ(f.parameter_count(), 27);
  for (const Matrix& k : f.kernel_table()) EXPECT_EQ(max_abs(k - lambda * Matrix::Identity(3, 3)), 0.0);
}

TEST(BuildFilter, CopyMajorLayout) {
  // Two copies of rho1 in, one out: psi = [a0 I, a1 I].
  const RepType in = RepType::of(IrrepLabel::three_dim(1), 2);
  const RepType out = RepType::of(IrrepLabel::three_dim(1));
  BlockTable table;
  for (Matrix& a : table) {
    a.resize(1, 2);
    a << Complex(1.0), Complex(2.0);
  }
  const Matrix k = build_filter({{9, table}}, in, out).kernel(e);
  Matrix expected(3, 6);
  expected << Matrix::Identity(3, 3), 2.0 * Matrix::Identity(3, 3);
  EXPECT_EQ(max_abs(k - expected), 0.0);
}

TEST(BuildFilter, RejectsMissingOrMisshapenBlocks) {
  const RepType in = triv_plus_rho1();
  const RepType out = RepType({2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0});
  BlockTable good_triv, good_rho1, bad;
  for (Matrix& a : good_triv) a = Matrix::Zero(2, 1);
  for (Matrix& a : good_rho1) a = Matrix::Zero(1, 1);
  for (Matrix& a : bad) a = Matrix::Zero(1, 2);
  EXPECT_NO_THROW(build_filter({{0, good_triv}, {9, good_rho1}}, in, out));
  EXPECT_THROW(build_filter({{0, good_triv}}, in, out), std::invalid_argument);
  EXPECT_THROW(build_filter({{0, bad}, {9, good_rho1}}, in, out), std::invalid_argument);
  EXPECT_THROW(build_filter({{0, good_triv}, {10, good_rho1}}, in, out), std::invalid_argument);
  EXPECT_THROW(build_filter({{0, good_triv}, {9, good_rho1}, {10, good_rho1}}, in, out), std::invalid_argument);
}

TEST(Filters, RandomFiltersSatisfyTheConstraint) {
  Rng rng(10);
  for (const RepType& in : verify::mixed_types())
    for (const RepType& out : verify::mixed_types()) EXPECT_LT(constraint_residual(random_filter(in, out, rng)), 1e-12);
}

TEST(ProjectFilter, IdempotentAndEquivariant) {
  Rng rng(11);
  const RepType in = triv_plus_rho1();
  const RepType out = RepType({2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1});
  const KernelTable raw = random_kernel(rng, out.dimension(), in.dimension());
  const EquivariantFilter once = project_filter(raw, in, out);
  EXPECT_LT(constraint_residual(once), 1e-12);
  const EquivariantFilter twice = project_filter(once.kernel_table(), in, out);
  for (GroupElement x : elements()) EXPECT_LT(max_abs(once.kernel(x) - twice.kernel(x)), 1e-12);
  // The Schur parametrization reproduces the Reynolds average exactly.
  const KernelTable avg = reynolds_average(raw, canonical_rep(in), canonical_rep(out));
  for (GroupElement x : elements()) EXPECT_LT(max_abs(once.kernel(x) - avg[x.index()]), 1e-12);
}

TEST(ProjectFilter, Rho1ToRho2IsZero) {
  Rng rng(12);
  const RepType in = RepType::of(IrrepLabel::three_dim(1));
  const RepType out = RepType::of(IrrepLabel::three_dim(2));
  const EquivariantFilter f = project_filter(random_kernel(rng, 3, 3), in, out);
  EXPECT_TRUE(f.blocks().empty());
  const KernelTable avg = reynolds_average(random_kernel(rng, 3, 3), canonical_rep(in), canonical_rep(out));
  for (const Matrix& k : avg) EXPECT_LT(max_abs(k), 1e-14);
}

TEST(ProjectFilter, RejectsWrongKernelShape) {
  Rng rng(13);
  EXPECT_THROW(project_filter(random_kernel(rng, 2, 2), triv_plus_rho1(), triv_plus_rho1()), std::invalid_argument);
}

TEST(ReynoldsOperator, RankEqualsParameterCount) {
  for (const auto& [in, out] : verify::filter_space_cases()) {
    const Matrix op = reynolds_operator(in, out);
    EXPECT_LT(max_abs(op * op - op), 1e-10);
    EXPECT_EQ(numerical_rank(op, 1e-8), parameter_count(in, out)) << in.to_string() << " -> " << out.to_string();
  }
}

TEST(SteerableConvolve, ZeroFilterGivesZero) {
  Rng rng(14);
  const RepType t = triv_plus_rho1();
  const FeatureMap out = steerable_convolve(FeatureMap::random(t, rng), zero_filter(t, t));
  for (GroupElement g : elements()) EXPECT_EQ(max_abs(out(g)), 0.0);
}

TEST(SteerableConvolve, TrivialFibersReduceToGroupConvolution) {
  Rng rng(15);
  const RepType s = RepType::of(kTriv);
  const FeatureMap f = FeatureMap::random(s, rng);
  const FeatureMap psi = FeatureMap::random(s, rng);
  BlockTable table;
  for (GroupElement x : elements()) table[x.index()] = Matrix::Constant(1, 1, psi(x)(0));
  const FeatureMap steer = steerable_convolve(f, build_filter({{0, table}}, s, s));
  const FeatureMap plain = group_convolve(f, psi);
  EXPECT_LT(distance(steer, plain), 1e-12);

  const FeatureMap ones = FeatureMap::scalar([](GroupElement) { return Complex(1.0); });
  for (Matrix& a : table) a = Matrix::Constant(1, 1, 1.0);
  EXPECT_LT(distance(steerable_convolve(f, build_filter({{0, table}}, s, s)), group_convolve(f, ones)), 1e-12);
}

TEST(SteerableConvolve, MatchesDirectSum) {
  Rng rng(16);
  const RepType in = triv_plus_rho1();
  const RepType out = RepType({2, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0});
  const EquivariantFilter filter = random_filter(in, out, rng);
  const FeatureMap f = FeatureMap::random(in, rng);
  const FeatureMap got = steerable_convolve(f, filter);
  for (GroupElement g : elements()) {
    Vector oracle = Vector::Zero(out.dimension());
    for (GroupElement h : elements()) oracle += filter.kernel(mul(inverse(g), h)) * f(h);
    EXPECT_LT(max_abs(got(g) - oracle), 1e-12);
  }
}

TEST(SteerableConvolve, Equivariant) {
  Rng rng(17);
  const RepType t = triv_plus_rho1();
  for (int trial = 0; trial < 5; ++trial)
    EXPECT_LT(equivariance_residual(FeatureMap::random(t, rng), random_filter(t, t, rng)), 1e-10);
}

TEST(SteerableConvolve, RejectsTypeMismatch) {
  Rng rng(18);
  const RepType t = triv_plus_rho1();
  EXPECT_THROW(steerable_convolve(FeatureMap::random(RepType::of(kTriv), rng), zero_filter(t, t)),
               std::invalid_argument);
}

}  // namespace
}  // namespace ut3
