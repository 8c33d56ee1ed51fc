// Named verification suites shared by the CLI and the acceptance tests.
#ifndef NCSPHERE_SUITES_HPP
#define NCSPHERE_SUITES_HPP

#include "ncsphere/clutching.hpp"
#include "ncsphere/relations.hpp"
#include "ncsphere/spectral.hpp"

namespace ncsphere {

// Images of the even-sphere relations under z_i -> (w_i, w_i),
// x -> (y, -y) vanish in both ball summands; the index swap is kept as a
// negative control.
inline Report verify_pullback() {
  auto s4 = Presentation::even_sphere(2);
  auto ball = Presentation::ball(2);
  auto gen = [&](int i) { return AlgebraElement::generator(ball, i); };
  GenImages plus{ball, {gen(0), gen(1)}, AlgebraElement::central(ball), std::nullopt};
  GenImages minus{ball, {gen(0), gen(1)}, -AlgebraElement::central(ball), std::nullopt};
  Report rep = hom_check(*s4, {plus, minus});
  rep.title = "pullback generator maps";
  GenImages swapped{ball, {gen(1), gen(0)}, AlgebraElement::central(ball), std::nullopt};
  bool swap_fails = !hom_check(*s4, {swapped}).all_pass();
  rep.add("negative control: swapped generators fail", swap_fails, swap_fails ? 0.0 : 1.0);
  return rep;
}

inline Report verify_semigroup(long long n_max = 6, long long s_max = 6) {
  Report rep;
  rep.title = "module-class semigroup";
  for (ThetaKind kind : {ThetaKind::Irrational, ThetaKind::Rational}) {
    std::vector<ModuleClass> cls;
    for (long long n = 0; n <= n_max; ++n)
      for (long long s = -s_max; s <= s_max; ++s) cls.push_back(make_class(kind, n, s));
    auto zero = make_class(kind, 0, 0);
    bool assoc = true, comm = true, neutral = true, cancel = true, decomp = true;
    for (const auto& a : cls) {
      neutral = neutral && direct_sum(a, zero) == a;
      for (const auto& b : cls) {
        comm = comm && direct_sum(a, b) == direct_sum(b, a);
        for (const auto& c : cls) {
          assoc = assoc && direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c));
          cancel = cancel && cancellation_test(a, b, c);
        }
      }
    }
    if (kind == ThetaKind::Irrational)
      for (long long n = 1; n <= n_max; ++n)
        for (long long s = -s_max; s <= s_max; ++s)
          decomp = decomp && make_class(kind, n, s) ==
                                 direct_sum(make_class(kind, 1, s), make_class(kind, n - 1, 0));
    std::string k = kind == ThetaKind::Irrational ? "irrational" : "rational";
    rep.add(k + ": associativity", assoc, assoc ? 0.0 : 1.0);
    rep.add(k + ": commutativity", comm, comm ? 0.0 : 1.0);
    rep.add(k + ": zero class neutral", neutral, neutral ? 0.0 : 1.0);
    rep.add(k + ": cancellation", cancel, cancel ? 0.0 : 1.0);
    if (kind == ThetaKind::Irrational)
      rep.add(k + ": N(n,s) = N(1,s) + N(n-1,0)", decomp, decomp ? 0.0 : 1.0);
  }
  bool pc = paper_module_class("instanton_e") == make_class(ThetaKind::Irrational, 2, -1) &&
            paper_module_class("landi_vs", 1) == make_class(ThetaKind::Irrational, 2, -1) &&
            paper_module_class("landi_vs", 2) == make_class(ThetaKind::Irrational, 3, -4);
  rep.add("catalogued classes: e -> N(2,-1), p(1) -> N(2,-1), p(2) -> N(3,-4)", pc,
          pc ? 0.0 : 1.0);
  return rep;
}

inline Report verify_retractions(const Rep& rep_matrices) {
  Report rep;
  rep.title = "deformation retractions";
  rep.merge(retraction_ball_to_scalars(rep_matrices));
  rep.merge(retraction_solid_torus_to_circle(rep_matrices));
  return rep;
}

}  // namespace ncsphere

#endif
