#include <gtest/gtest.h>

#include <random>

#include "ncsphere/instanton.hpp"
#include "test_util.hpp"

using namespace ncsphere;

namespace {
PresPtr S3 = Presentation::odd_sphere(2);

AlgMatrix random_matrix(const PresPtr& pres, std::mt19937& rng, int r, int c) {
  AlgMatrix m(pres, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = test_util::random_element(pres, rng, 2, 2);
  return m;
}
}  // namespace

TEST(MatrixOps, IdentityAndShapeErrors) {
  std::mt19937 rng(1);
  auto a = random_matrix(S3, rng, 2, 3);
  EXPECT_EQ(AlgMatrix::identity(S3, 2) * a, a);
  EXPECT_THROW(a * a, Error);  // 2x3 times 2x3
  AlgMatrix b(Presentation::even_sphere(2), 3, 2);
  EXPECT_THROW(a * b, Error);  // presentation mismatch
  EXPECT_THROW(a.alg_trace(), Error);
  EXPECT_THROW(is_projection(a), Error);
}

TEST(MatrixOps, AssociativityAndAdjointRandom) {
  std::mt19937 rng(7);
  for (int it = 0; it < 30; ++it) {
    auto a = random_matrix(S3, rng, 2, 2);
    auto b = random_matrix(S3, rng, 2, 3);
    auto c = random_matrix(S3, rng, 3, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint());
  }
}

TEST(MatrixOps, ProjectionE) {
  auto rep = is_projection(builtin_e());
  EXPECT_TRUE(rep.all_pass());
  EXPECT_TRUE(is_projection(AlgMatrix::identity(S3, 2)).all_pass());
}

TEST(MatrixOps, ProjectionEFailsUnderSwappedConvention) {
  auto rep = is_projection(builtin_e(true));
  EXPECT_FALSE(rep.all_pass());
}

TEST(MatrixOps, TraceOfE) {
  auto tr = builtin_e().alg_trace();
  auto two = PhaseScalar(2) * AlgebraElement::one(instanton_sphere_pres());
  EXPECT_EQ(tr, two);  // the x-terms cancel exactly
  EXPECT_EQ(AlgMatrix::identity(S3, 4).alg_trace(),
            PhaseScalar(4) * AlgebraElement::one(S3));
}

TEST(MatrixOps, TraceOfH) {
  EXPECT_EQ(builtin_h_expected().alg_trace(), parse_element("z2' + z2", S3));
}

TEST(MatrixOps, PsiInverses) {
  auto ball = instanton_ball_pres();
  auto id2 = AlgMatrix::identity(ball, 2);
  EXPECT_EQ(builtin_psi1() * builtin_psi1_inv(), id2);
  EXPECT_EQ(builtin_psi2() * builtin_psi2_inv(), id2);
  EXPECT_EQ(builtin_psi1_inv() * builtin_psi1(), i1_of_e());
  EXPECT_EQ(builtin_psi2_inv() * builtin_psi2(), i2_of_e());
}

TEST(MatrixOps, QuotientOfPsi1Inv) {
  // j1(psi1^{-1}) = 1/2 ((1,0),(0,1),(z2',-conj(rho) z1),(z1',z2)); hand
  // substitution y -> 0, u -> 1.
  auto got = builtin_psi1_inv().substituted(quotient_to_equator());
  auto expect = PhaseScalar(GaussianRational(Rational(1, 2))) *
                detail::matrix_from_strings(
                    S3, {{"1", "0"}, {"0", "1"}, {"z2'", "-rho^-1*z1"}, {"z1'", "z2"}});
  EXPECT_EQ(got, expect);
}

TEST(MatrixOps, ComputeH) {
  EXPECT_EQ(compute_h(), builtin_h_expected());
}

TEST(MatrixOps, ComputeHSwappedDiffers) {
  EXPECT_NE(compute_h(true), builtin_h_expected());
}

TEST(MatrixOps, Factorization) {
  auto rep = verify_factorization();
  EXPECT_TRUE(rep.all_pass());
  // The product, written out: ((z2, z1), (-rho z1*, z2*)).
  EXPECT_EQ(builtin_factorization_chain(), builtin_h_inverse());
}

TEST(MatrixOps, InstantonSuiteAllPass) {
  auto rep = verify_instanton();
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

TEST(MatrixOps, BuiltinByName) {
  EXPECT_EQ(builtin("e").rows(), 4);
  EXPECT_EQ(builtin("psi1").rows(), 2);
  EXPECT_EQ(builtin("psi1").cols(), 4);
  EXPECT_EQ(builtin("h_expected").rows(), 2);
  EXPECT_THROW(builtin("nope"), Error);
  // (1,1) entry of e is (1+x)/2.
  auto e11 = builtin("e").at(0, 0);
  EXPECT_EQ(e11, parse_element("1/2 + 1/2*x", instanton_sphere_pres()));
}
