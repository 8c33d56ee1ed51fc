#include <gtest/gtest.h>

#include <random>

#include "ncsphere/parser.hpp"
#include "ncsphere/relations.hpp"
#include "test_util.hpp"
#include "word_oracle.hpp"

using namespace ncsphere;

namespace {
PresPtr S3 = Presentation::odd_sphere(2);
PresPtr S4 = Presentation::even_sphere(2);
PresPtr BALL = Presentation::ball(2, true);
PresPtr T2 = Presentation::torus(2);

AlgebraElement P(const std::string& s, const PresPtr& p) { return parse_element(s, p); }
}  // namespace

TEST(AlgebraCore, ParseBasics) {
  auto a = P("z1*z2", S3);
  EXPECT_EQ(to_string(a), "z1*z2");
  EXPECT_TRUE(P("z1*z1' + z2*z2' - 1", S3).is_zero());
  EXPECT_TRUE(P("z1*z1' + z2*z2' + x^2 - 1", S4).is_zero());
  EXPECT_TRUE((P("u*(1+y)", BALL) - P("1", BALL)).is_zero());
}

TEST(AlgebraCore, ParseErrors) {
  EXPECT_THROW(P("z1*", S3), ParseError);
  EXPECT_THROW(P("z3", S3), ParseError);        // index out of range
  EXPECT_THROW(P("w1", S3), ParseError);        // wrong family letter
  EXPECT_THROW(P("x", S3), ParseError);         // no central generator on S3
  EXPECT_THROW(P("u", Presentation::ball(2)), ParseError);
  EXPECT_THROW(P("z1^-1", S3), ParseError);     // z is not invertible
  EXPECT_THROW(P("1/0", S3), ParseError);
  EXPECT_THROW(P("z1)(", S3), ParseError);
  try {
    P("z1 + @", S3);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos, 5u);
  }
}

TEST(AlgebraCore, ExchangeNormalForm) {
  // z2 z1 = rho z1 z2 under the fixed convention theta_{12} = theta.
  EXPECT_EQ(to_string(P("z2*z1", S3)), "rho * z1*z2");
  EXPECT_EQ(to_string(P("U2*U1", T2)), "rho * U1*U2");
  EXPECT_EQ(to_string(P("z2*z1'", S3)), "rho^-1 * z1'*z2");
}

TEST(AlgebraCore, RadiusReduction) {
  EXPECT_EQ(P("z2*z2'", S4), P("1 - z1*z1' - x^2", S4));
  EXPECT_EQ(to_string(P("z2*z2'", S3)), "1 - z1*z1'");
  EXPECT_EQ(P("w2*w2'", BALL), P("1 - w1*w1' - y^2", BALL));
}

TEST(AlgebraCore, URewrite) {
  // u y^2 = y - 1 + u, by applying u y -> 1 - u twice (hand oracle).
  auto lhs = P("u*y^2", BALL);
  auto rhs = P("y - 1 + u", BALL);
  EXPECT_EQ(lhs, rhs);
  EXPECT_TRUE(P("u*y - 1 + u", BALL).is_zero());
}

TEST(AlgebraCore, MulExamples) {
  EXPECT_EQ(to_string(P("z1*z1'", S3)), "z1*z1'");
  EXPECT_TRUE((P("U1*U1^-1", T2) - P("1", T2)).is_zero());
  // z1 z2 z2* z1* = z1 z1* - (z1 z1*)^2 after the radius relation.
  EXPECT_EQ(P("z1*z2*z2'*z1'", S3), P("z1*z1' - z1^2*z1'^2", S3));
}

TEST(AlgebraCore, MulPresentationMismatch) {
  EXPECT_THROW(P("z1", S3) * P("z1", S4), Error);
}

TEST(AlgebraCore, AdjointExamples) {
  EXPECT_EQ(to_string(P("z1", S3).adjoint()), "z1'");
  // adjoint(rho z1 z2) = conj(rho) z2* z1* = z1* z2* (exchange phase cancels).
  EXPECT_EQ(P("rho*z1*z2", S3).adjoint(), P("z1'*z2'", S3));
  EXPECT_EQ(P("x", S4).adjoint(), P("x", S4));
  EXPECT_EQ(P("(z1*z2)'", S3), P("z1*z2", S3).adjoint());
}

TEST(AlgebraCore, AdjointIsInvolutiveAntihom) {
  std::mt19937 rng(99);
  for (const auto& pres : {S3, S4, BALL, T2}) {
    for (int it = 0; it < 150; ++it) {
      auto a = test_util::random_element(pres, rng);
      auto b = test_util::random_element(pres, rng);
      EXPECT_EQ(a.adjoint().adjoint(), a);
      EXPECT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint());
    }
  }
}

TEST(AlgebraCore, AssociativityAndDistributivityRandom) {
  std::mt19937 rng(2024);
  for (const auto& pres : {S3, S4, BALL, T2}) {
    for (int it = 0; it < 120; ++it) {
      auto a = test_util::random_element(pres, rng, 2, 3);
      auto b = test_util::random_element(pres, rng, 2, 3);
      auto c = test_util::random_element(pres, rng, 2, 3);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(AlgebraCore, NormalFormIdempotent) {
  // Re-normalizing a normal form (monomial-wise) is the identity.
  std::mt19937 rng(5150);
  for (const auto& pres : {S3, S4, BALL, T2}) {
    for (int it = 0; it < 60; ++it) {
      auto a = test_util::random_element(pres, rng, 3, 4);
      AlgebraElement again = AlgebraElement::zero(pres);
      for (const auto& [m, c] : a.terms()) again.reduce_and_accumulate(m, c);
      EXPECT_EQ(again, a);
    }
  }
}

TEST(AlgebraCore, CentralityOfRadiusTerms) {
  // z_i z_i* commutes with every generator, exactly.
  for (const auto& pres : {S3, S4}) {
    for (int i = 0; i < 2; ++i) {
      auto zi = AlgebraElement::generator(pres, i);
      auto central = zi * zi.adjoint();
      for (int j = 0; j < 2; ++j) {
        for (bool star : {false, true}) {
          auto g = AlgebraElement::generator(pres, j, star);
          EXPECT_EQ(central * g, g * central);
        }
      }
      if (pres->has_central()) {
        auto x = AlgebraElement::central(pres);
        EXPECT_EQ(central * x, x * central);
      }
    }
  }
}

TEST(AlgebraCore, WordOracleAgreesWithEngine) {
  // Independent word-level rewriting oracle vs the exponent-vector engine,
  // on random words over every preset presentation.
  std::mt19937 rng(31337);
  for (const auto& pres : {S3, S4, BALL, T2}) {
    std::uniform_int_distribution<int> len(0, 5), gen(0, 1), coin(0, 1), kindd(0, 9);
    for (int it = 0; it < 400; ++it) {
      word_oracle::Word w;
      int L = len(rng);
      for (int k = 0; k < L; ++k) {
        int kd = kindd(rng);
        if (pres->has_u() && kd == 9) {
          w.push_back({word_oracle::Factor::U, 0, false});
        } else if (pres->has_central() && kd >= 7) {
          w.push_back({word_oracle::Factor::Central, 0, false});
        } else {
          w.push_back({word_oracle::Factor::Normal, gen(rng), coin(rng) == 1});
        }
      }
      PhaseScalar c = test_util::random_phase_scalar(rng, 2);
      auto expected = word_oracle::normalize(*pres, c, w);

      AlgebraElement e = AlgebraElement::scalar(pres, c);
      for (const auto& f : w) {
        switch (f.kind) {
          case word_oracle::Factor::Normal:
            e = e * AlgebraElement::generator(pres, f.idx, f.star);
            break;
          case word_oracle::Factor::Central:
            e = e * AlgebraElement::central(pres);
            break;
          case word_oracle::Factor::U:
            e = e * AlgebraElement::u_gen(pres);
            break;
        }
      }
      EXPECT_EQ(word_oracle::from_engine(e), expected) << pres->name();
    }
  }
}

TEST(AlgebraCore, PresetRelationsNormalizeToZero) {
  for (const auto& pres :
       {S3, S4, BALL, T2, Presentation::odd_sphere(3), Presentation::torus(3),
        Presentation::even_sphere(3), Presentation::ball(3, true), Presentation::odd_sphere(1)}) {
    auto rep = relations_vanish(pres);
    EXPECT_TRUE(rep.all_pass()) << pres->name();
  }
}

TEST(AlgebraCore, TraceCoeff) {
  EXPECT_EQ(P("1", T2).trace_coeff(), PhaseScalar(1));
  EXPECT_TRUE(P("U1^2*U2", T2).trace_coeff().is_zero());
  EXPECT_TRUE(P("z1*z1'", S3).trace_coeff().is_zero());
  EXPECT_EQ(P("3 + U1", T2).trace_coeff(), PhaseScalar(3));
}

TEST(AlgebraCore, TraceCoeffTracialOnTorus) {
  std::mt19937 rng(808);
  for (int it = 0; it < 300; ++it) {
    auto a = test_util::random_element(T2, rng, 3, 4);
    auto b = test_util::random_element(T2, rng, 3, 4);
    EXPECT_EQ((a * b).trace_coeff(), (b * a).trace_coeff());
  }
  // Linearity, unitality, adjoint compatibility.
  std::mt19937 rng2(809);
  for (int it = 0; it < 100; ++it) {
    auto a = test_util::random_element(T2, rng2);
    EXPECT_EQ(a.adjoint().trace_coeff(), a.trace_coeff().conj());
  }
}

TEST(AlgebraCore, HomCheckPullbackSummands) {
  // z_i -> w_i with x -> y (first summand) and x -> -y (second) both send
  // every S4 relation to zero in the ball algebra.
  PresPtr ball = Presentation::ball(2);
  GenImages plus{ball,
                 {AlgebraElement::generator(ball, 0), AlgebraElement::generator(ball, 1)},
                 AlgebraElement::central(ball),
                 std::nullopt};
  GenImages minus{ball,
                  {AlgebraElement::generator(ball, 0), AlgebraElement::generator(ball, 1)},
                  -AlgebraElement::central(ball),
                  std::nullopt};
  auto rep = hom_check(*S4, {plus, minus});
  EXPECT_TRUE(rep.all_pass());
}

TEST(AlgebraCore, HomCheckSwapFailsExchange) {
  // Swapping z1 <-> w2, z2 <-> w1 reverses the exchange phase and must fail.
  PresPtr ball = Presentation::ball(2);
  GenImages swapped{ball,
                    {AlgebraElement::generator(ball, 1), AlgebraElement::generator(ball, 0)},
                    AlgebraElement::central(ball),
                    std::nullopt};
  auto rep = hom_check(*S4, {swapped});
  EXPECT_FALSE(rep.all_pass());
  bool exchange_failed = false;
  for (const auto& c : rep.checks)
    if (!c.pass && c.name.find("exchange") != std::string::npos) exchange_failed = true;
  EXPECT_TRUE(exchange_failed);
}

TEST(AlgebraCore, HomCheckUnmappedGenerator) {
  PresPtr ball = Presentation::ball(2);
  GenImages incomplete{ball, {AlgebraElement::generator(ball, 0)}, std::nullopt, std::nullopt};
  EXPECT_THROW(hom_check(*S4, {incomplete}), Error);
}

TEST(AlgebraCore, PrintedFormsRoundTrip) {
  std::mt19937 rng(4711);
  for (const auto& pres : {S3, S4, BALL, T2}) {
    for (int it = 0; it < 150; ++it) {
      auto a = test_util::random_element(pres, rng, 3, 3);
      EXPECT_EQ(parse_element(to_string(a), pres), a) << to_string(a);
    }
  }
}

TEST(AlgebraCore, GeneralMSupport) {
  auto S5 = Presentation::odd_sphere(3);
  EXPECT_EQ(to_string(P("z3*z1", S5)), "rho * z1*z3");
  EXPECT_TRUE(P("z1*z1' + z2*z2' + z3*z3' - 1", S5).is_zero());
  auto T3 = Presentation::torus(3);
  EXPECT_EQ(to_string(P("U3*U2", T3)), "rho * U2*U3");
}
