// The charge-1 instanton data over the even sphere: the projection e, the
// trivializations psi_1, psi_2 with their explicit inverses over the ball
// algebra (with u standing in for (1+y)^{-1}), the clutching matrix
// h = j_2(psi_2) j_1(psi_1)^{-1}, and the five-factor path factorization of
// h^{-1} through the corrected SU(2)-type unitary.
//
// Every builtin takes a `swapped` flag that conjugates the explicit phases;
// the swapped variants realize the opposite exchange convention and are used
// as negative controls (e stops being idempotent, h stops matching).
#ifndef NCSPHERE_INSTANTON_HPP
#define NCSPHERE_INSTANTON_HPP

#include <array>
#include <string>
#include <vector>

#include "ncsphere/alg_matrix.hpp"
#include "ncsphere/parser.hpp"

namespace ncsphere {

namespace detail {

inline AlgMatrix matrix_from_strings(const PresPtr& pres,
                                     const std::vector<std::vector<std::string>>& rows) {
  AlgMatrix m(pres, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = parse_element(rows[i][j], pres);
  return m;
}

struct PhaseNames {
  std::string r, rb, rh, rbh;  // rho, conj(rho), sqrt(rho), sqrt(conj(rho))
  explicit PhaseNames(bool swapped) {
    r = swapped ? "rho^-1" : "rho";
    rb = swapped ? "rho" : "rho^-1";
    rh = swapped ? "rho^-1/2" : "rho^1/2";
    rbh = swapped ? "rho^1/2" : "rho^-1/2";
  }
};

}  // namespace detail

inline PresPtr instanton_sphere_pres() { return Presentation::even_sphere(2); }
inline PresPtr instanton_ball_pres() { return Presentation::ball(2, true); }
inline PresPtr instanton_equator_pres() { return Presentation::odd_sphere(2); }

inline AlgMatrix builtin_e(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  auto m = detail::matrix_from_strings(
      instanton_sphere_pres(),
      {{"1+x", "0", "z2", "z1"},
       {"0", "1+x", "-" + ph.r + "*z1'", "z2'"},
       {"z2'", "-" + ph.rb + "*z1", "1-x", "0"},
       {"z1'", "z2", "0", "1-x"}});
  return PhaseScalar(GaussianRational(Rational(1, 2))) * m;
}

inline AlgMatrix builtin_psi1(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  return detail::matrix_from_strings(
      instanton_ball_pres(),
      {{"1", "0", "u*w2", "u*w1"}, {"0", "1", "-" + ph.r + "*u*w1'", "u*w2'"}});
}

inline AlgMatrix builtin_psi1_inv(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  auto m = detail::matrix_from_strings(
      instanton_ball_pres(),
      {{"1+y", "0"}, {"0", "1+y"}, {"w2'", "-" + ph.rb + "*w1"}, {"w1'", "w2"}});
  return PhaseScalar(GaussianRational(Rational(1, 2))) * m;
}

inline AlgMatrix builtin_psi2(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  return detail::matrix_from_strings(
      instanton_ball_pres(),
      {{"u*w2'", "-" + ph.rb + "*u*w1", "1", "0"}, {"u*w1'", "u*w2", "0", "1"}});
}

inline AlgMatrix builtin_psi2_inv(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  auto m = detail::matrix_from_strings(
      instanton_ball_pres(),
      {{"w2", "w1"}, {"-" + ph.r + "*w1'", "w2'"}, {"1+y", "0"}, {"0", "1+y"}});
  return PhaseScalar(GaussianRational(Rational(1, 2))) * m;
}

inline AlgMatrix builtin_h_expected(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  return detail::matrix_from_strings(instanton_equator_pres(),
                                     {{"z2'", "-" + ph.rb + "*z1"}, {"z1'", "z2"}});
}

inline AlgMatrix builtin_h_inverse(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  return detail::matrix_from_strings(instanton_equator_pres(),
                                     {{"z2", "z1"}, {"-" + ph.r + "*z1'", "z2'"}});
}

inline AlgMatrix builtin_z_corrected(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  return detail::matrix_from_strings(
      instanton_equator_pres(),
      {{"z1", ph.rbh + "*z2"}, {"-" + ph.rbh + "*z2'", "z1'"}});
}

// The five path factors of h^{-1}, in order.
inline std::vector<AlgMatrix> factorization_factors(bool swapped = false) {
  detail::PhaseNames ph(swapped);
  auto pres = instanton_equator_pres();
  std::vector<AlgMatrix> f;
  f.push_back(detail::matrix_from_strings(pres, {{"1", "0"}, {"0", "-" + ph.r}}));
  f.push_back(detail::matrix_from_strings(pres, {{"1", "0"}, {"0", ph.rbh}}));
  f.push_back(builtin_z_corrected(swapped));
  f.push_back(detail::matrix_from_strings(pres, {{"1", "0"}, {"0", ph.rh}}));
  f.push_back(detail::matrix_from_strings(pres, {{"0", "1"}, {"1", "0"}}));
  return f;
}

inline AlgMatrix builtin_factorization_chain(bool swapped = false) {
  auto f = factorization_factors(swapped);
  AlgMatrix acc = f[0];
  for (std::size_t k = 1; k < f.size(); ++k) acc = acc * f[k];
  return acc;
}

inline AlgMatrix builtin(const std::string& name, bool swapped = false) {
  if (name == "e") return builtin_e(swapped);
  if (name == "psi1") return builtin_psi1(swapped);
  if (name == "psi1_inv") return builtin_psi1_inv(swapped);
  if (name == "psi2") return builtin_psi2(swapped);
  if (name == "psi2_inv") return builtin_psi2_inv(swapped);
  if (name == "h_expected") return builtin_h_expected(swapped);
  if (name == "z_corrected") return builtin_z_corrected(swapped);
  if (name == "factorization_chain") return builtin_factorization_chain(swapped);
  throw Error("builtin: unknown matrix name '" + name + "'");
}

// Quotient map j_k of the ball algebra onto the equator sphere:
// w_i -> z_i, y -> 0, u -> 1 (u is the localized inverse of 1+y and 1+0 = 1).
inline GenImages quotient_to_equator() {
  auto dst = instanton_equator_pres();
  GenImages img;
  img.dst = dst;
  img.normal = {AlgebraElement::generator(dst, 0), AlgebraElement::generator(dst, 1)};
  img.central = AlgebraElement::zero(dst);
  img.u = AlgebraElement::one(dst);
  return img;
}

// Summand inclusions of the even sphere into the ball: z_i -> w_i and
// x -> +y (first) or x -> -y (second).
inline GenImages sphere_into_ball(int sign) {
  auto dst = instanton_ball_pres();
  GenImages img;
  img.dst = dst;
  img.normal = {AlgebraElement::generator(dst, 0), AlgebraElement::generator(dst, 1)};
  img.central = sign >= 0 ? AlgebraElement::central(dst) : -AlgebraElement::central(dst);
  return img;
}

inline AlgMatrix i1_of_e(bool swapped = false) {
  return builtin_e(swapped).substituted(sphere_into_ball(+1));
}
inline AlgMatrix i2_of_e(bool swapped = false) {
  return builtin_e(swapped).substituted(sphere_into_ball(-1));
}

// h = j_2(psi_2) j_1(psi_1)^{-1}, computed from the displayed data.
inline AlgMatrix compute_h(bool swapped = false) {
  auto j = quotient_to_equator();
  return builtin_psi2(swapped).substituted(j) * builtin_psi1_inv(swapped).substituted(j);
}

// Exact verification of the path factorization and its supporting identities.
inline Report verify_factorization() {
  Report rep;
  rep.title = "factorization of h^{-1}";
  auto pres = instanton_equator_pres();
  auto h = builtin_h_expected();
  auto hinv = builtin_h_inverse();
  auto id2 = AlgMatrix::identity(pres, 2);

  AlgMatrix prod = builtin_factorization_chain();
  AlgMatrix d1 = prod - hinv;
  rep.add("five-factor product equals h^{-1}", d1.is_zero(),
          static_cast<double>(d1.term_count()));
  AlgMatrix d2 = h * hinv - id2;
  rep.add("h h^{-1} = 1", d2.is_zero(), static_cast<double>(d2.term_count()));
  AlgMatrix d3 = hinv * h - id2;
  rep.add("h^{-1} h = 1", d3.is_zero(), static_cast<double>(d3.term_count()));

  auto z = builtin_z_corrected();
  AlgMatrix d4 = z * z.adjoint() - id2;
  AlgMatrix d5 = z.adjoint() * z - id2;
  rep.add("Z Z* = 1", d4.is_zero(), static_cast<double>(d4.term_count()));
  rep.add("Z* Z = 1", d5.is_zero(), static_cast<double>(d5.term_count()));
  return rep;
}

// The whole exact instanton suite as one report.
inline Report verify_instanton() {
  Report rep;
  rep.title = "instanton suite";
  auto ball = instanton_ball_pres();
  auto id2b = AlgMatrix::identity(ball, 2);

  auto e = builtin_e();
  rep.merge(is_projection(e));
  {
    AlgebraElement tr = e.alg_trace() -
        (PhaseScalar(2) * AlgebraElement::one(instanton_sphere_pres()));
    rep.add("trace(e) = 2", tr.is_zero(), static_cast<double>(tr.terms().size()));
  }
  {
    AlgMatrix d = builtin_psi1() * builtin_psi1_inv() - id2b;
    rep.add("psi1 psi1^{-1} = 1", d.is_zero(), static_cast<double>(d.term_count()));
  }
  {
    AlgMatrix d = builtin_psi2() * builtin_psi2_inv() - id2b;
    rep.add("psi2 psi2^{-1} = 1", d.is_zero(), static_cast<double>(d.term_count()));
  }
  {
    AlgMatrix d = builtin_psi1_inv() * builtin_psi1() - i1_of_e();
    rep.add("psi1^{-1} psi1 = i1(e)", d.is_zero(), static_cast<double>(d.term_count()));
  }
  {
    AlgMatrix d = builtin_psi2_inv() * builtin_psi2() - i2_of_e();
    rep.add("psi2^{-1} psi2 = i2(e)", d.is_zero(), static_cast<double>(d.term_count()));
  }
  {
    AlgMatrix d = compute_h() - builtin_h_expected();
    rep.add("h = j2(psi2) j1(psi1^{-1})", d.is_zero(), static_cast<double>(d.term_count()));
  }
  rep.merge(verify_factorization());
  {
    // Negative control: the swapped phase convention breaks idempotency.
    auto es = builtin_e(true);
    AlgMatrix d = es * es - es;
    rep.add("negative control: swapped-phase e fails e^2 = e", !d.is_zero(),
            static_cast<double>(d.term_count()));
  }
  return rep;
}

}  // namespace ncsphere

#endif
