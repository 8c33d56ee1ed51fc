#ifndef NCSPHERE_TESTS_TEST_UTIL_HPP
#define NCSPHERE_TESTS_TEST_UTIL_HPP

#include <random>

#include "ncsphere/element.hpp"

namespace test_util {

using ncsphere::AlgebraElement;
using ncsphere::GaussianRational;
using ncsphere::PhaseScalar;
using ncsphere::PresPtr;
using ncsphere::Rational;

inline GaussianRational random_gauss(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  return {Rational(num(rng)) / den(rng), Rational(num(rng)) / den(rng)};
}

inline PhaseScalar random_phase_scalar(std::mt19937& rng, int max_terms = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms), halves(-4, 4);
  PhaseScalar s;
  for (int t = nterms(rng); t > 0; --t)
    s += PhaseScalar::rho_power_halves(halves(rng), random_gauss(rng));
  return s;
}

// Random element as a sum of products of generator factors, so its degree
// stays under the requested word length.
inline AlgebraElement random_element(const PresPtr& pres, std::mt19937& rng, int max_terms = 3,
                                     int max_len = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms), len(0, max_len);
  std::uniform_int_distribution<int> gen(0, pres->m() - 1), coin(0, 1);
  int extra = (pres->has_central() ? 1 : 0) + (pres->has_u() ? 1 : 0);
  std::uniform_int_distribution<int> kind(0, 1 + (extra > 0 ? extra : 0) - 1 + 1);
  AlgebraElement acc = AlgebraElement::zero(pres);
  for (int t = nterms(rng); t > 0; --t) {
    AlgebraElement term = AlgebraElement::scalar(pres, random_phase_scalar(rng));
    for (int k = len(rng); k > 0; --k) {
      int which = kind(rng);
      if (which <= 1) {
        term = term * AlgebraElement::generator(pres, gen(rng), coin(rng) == 1);
      } else if (which == 2 && pres->has_central()) {
        term = term * AlgebraElement::central(pres);
      } else if (pres->has_u()) {
        term = term * AlgebraElement::u_gen(pres);
      } else if (pres->has_central()) {
        term = term * AlgebraElement::central(pres);
      } else {
        term = term * AlgebraElement::generator(pres, gen(rng), coin(rng) == 1);
      }
    }
    acc += term;
  }
  return acc;
}

}  // namespace test_util

#endif
