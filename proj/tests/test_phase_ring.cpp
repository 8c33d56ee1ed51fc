#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "ncsphere/phase_scalar.hpp"
#include "test_util.hpp"

using namespace ncsphere;

TEST(PhaseRing, RhoTimesRhoBarIsOne) {
  EXPECT_EQ(PhaseScalar::rho() * PhaseScalar::rho_bar(), PhaseScalar::one());
}

TEST(PhaseRing, HalfPowersAddExponents) {
  auto half = PhaseScalar::rho_power_halves(1);
  EXPECT_EQ(half * half, PhaseScalar::rho());
}

TEST(PhaseRing, GaussianRationalProduct) {
  // (1/2 + 1/2 i) rho * (1/2 - 1/2 i) rho = 1/2 rho^2, by hand.
  PhaseScalar a = PhaseScalar::rho_power_halves(2, {Rational(1, 2), Rational(1, 2)});
  PhaseScalar b = PhaseScalar::rho_power_halves(2, {Rational(1, 2), Rational(-1, 2)});
  PhaseScalar expect = PhaseScalar::rho_power_halves(4, {Rational(1, 2), Rational(0)});
  EXPECT_EQ(a * b, expect);
}

TEST(PhaseRing, EvalAtQuarter) {
  auto v = PhaseScalar::rho().eval(Theta::rational(1, 4));
  EXPECT_NEAR(v.real(), 0.0, 1e-15);
  EXPECT_NEAR(v.imag(), 1.0, 1e-15);
}

TEST(PhaseRing, EvalHalfPowerBranch) {
  // sqrt(rho) at theta = 1/2 evaluates on the fixed branch exp(pi i theta) = i.
  auto v = PhaseScalar::rho_power_halves(1).eval(Theta::rational(1, 2));
  EXPECT_NEAR(v.real(), 0.0, 1e-15);
  EXPECT_NEAR(v.imag(), 1.0, 1e-15);
}

TEST(PhaseRing, EvalOnePlusRhoThird) {
  // 1 + e^{2 pi i/3} = 0.5 + 0.86602540378...i (direct evaluation oracle).
  auto v = (PhaseScalar::one() + PhaseScalar::rho()).eval(Theta::rational(1, 3));
  EXPECT_NEAR(v.real(), 0.5, 1e-12);
  EXPECT_NEAR(v.imag(), 0.8660254037844387, 1e-12);
}

TEST(PhaseRing, RingAxiomsRandom) {
  std::mt19937 rng(12345);
  for (int it = 0; it < 300; ++it) {
    auto a = test_util::random_phase_scalar(rng, 3);
    auto b = test_util::random_phase_scalar(rng, 3);
    auto c = test_util::random_phase_scalar(rng, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(PhaseRing, ConjugationLaws) {
  std::mt19937 rng(777);
  for (int it = 0; it < 300; ++it) {
    auto a = test_util::random_phase_scalar(rng, 3);
    auto b = test_util::random_phase_scalar(rng, 3);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
  }
}

TEST(PhaseRing, EvalIsRingHomomorphism) {
  std::mt19937 rng(424242);
  Theta ths[] = {Theta::rational(34, 89), Theta::irrational(0.3819660112501051)};
  for (const auto& th : ths) {
    for (int it = 0; it < 200; ++it) {
      auto a = test_util::random_phase_scalar(rng, 3);
      auto b = test_util::random_phase_scalar(rng, 3);
      auto lhs = (a * b).eval(th);
      auto rhs = a.eval(th) * b.eval(th);
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
      auto lhs2 = (a + b).eval(th);
      auto rhs2 = a.eval(th) + b.eval(th);
      EXPECT_NEAR(std::abs(lhs2 - rhs2), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(a.conj().eval(th) - std::conj(a.eval(th))), 0.0, 1e-12);
    }
  }
}

TEST(PhaseRing, ThetaValidation) {
  EXPECT_THROW(Theta::rational(1, 0), Error);
  EXPECT_THROW(Theta::irrational(0.0), Error);
  EXPECT_THROW(Theta::irrational(1.5), Error);
  auto t = Theta::rational(-3, 9);  // reduces and wraps into [0, q)
  EXPECT_EQ(t.p, 2);
  EXPECT_EQ(t.q, 3);
}

TEST(PhaseRing, ContinuedFractionConvergent) {
  auto t = convergent_of(0.3819660112501051, 100);  // 1/phi^2; convergents are Fibonacci
  EXPECT_EQ(t.p, 34);
  EXPECT_EQ(t.q, 89);
  auto t2 = convergent_of(0.5, 64);
  EXPECT_EQ(t2.p, 1);
  EXPECT_EQ(t2.q, 2);
}

TEST(PhaseRing, Printing) {
  EXPECT_EQ(to_string(PhaseScalar::rho()), "rho");
  EXPECT_EQ(to_string(PhaseScalar::rho_power_halves(1)), "rho^1/2");
  EXPECT_EQ(to_string(PhaseScalar::rho_power_halves(-2)), "rho^-1");
  EXPECT_EQ(to_string(PhaseScalar(GaussianRational(Rational(1, 2), Rational(1, 2)))),
            "(1/2 + 1/2i)");
  EXPECT_EQ(to_string(PhaseScalar::one() + PhaseScalar::rho()), "(1 + rho)");
  EXPECT_EQ(to_string(PhaseScalar()), "0");
}
