// Isomorphism classes of finitely-generated projective modules over the
// twisted 4-sphere, as (rank, index) pairs with the kind-dependent
// normalization:
//   irrational theta:  {0} u (N x Z)
//   rational theta:    {0,1} u ((N \ {1}) x Z)   (rank-1 classes collapse)
// Direct sum adds both components and renormalizes.
#ifndef NCSPHERE_MODULE_CLASS_HPP
#define NCSPHERE_MODULE_CLASS_HPP

#include <string>

#include "ncsphere/phase_scalar.hpp"

namespace ncsphere {

enum class ThetaKind { Rational, Irrational };

inline ThetaKind kind_of(const Theta& t) {
  return t.is_rational ? ThetaKind::Rational : ThetaKind::Irrational;
}

struct ModuleClass {
  ThetaKind kind = ThetaKind::Irrational;
  long long n = 0;
  long long s = 0;

  friend bool operator==(const ModuleClass& a, const ModuleClass& b) {
    return a.kind == b.kind && a.n == b.n && a.s == b.s;
  }
  friend bool operator!=(const ModuleClass& a, const ModuleClass& b) { return !(a == b); }
};

inline ModuleClass make_class(ThetaKind kind, long long n, long long s) {
  if (n < 0) throw Error("make_class: negative rank");
  if (n == 0) return {kind, 0, 0};
  if (kind == ThetaKind::Rational && n == 1) return {kind, 1, 0};
  return {kind, n, s};
}

inline ModuleClass direct_sum(const ModuleClass& a, const ModuleClass& b) {
  if (a.kind != b.kind) throw Error("direct_sum: theta-kind mismatch");
  return make_class(a.kind, a.n + b.n, a.s + b.s);
}

// (a + c = b + c) => (a = b); evaluated over the implemented semigroup.
inline bool cancellation_test(const ModuleClass& a, const ModuleClass& b, const ModuleClass& c) {
  if (a.kind != b.kind || a.kind != c.kind) throw Error("cancellation_test: kind mismatch");
  if (direct_sum(a, c) != direct_sum(b, c)) return true;  // hypothesis empty
  return a == b;
}

// Classes the literature assigns to the named module families (rank, index
// normalized as above, irrational kind).
inline ModuleClass paper_module_class(const std::string& name, long long n = 0,
                                      long long s = 0) {
  if (name == "instanton_e") return make_class(ThetaKind::Irrational, 2, -1);
  if (name == "landi_vs") {
    if (n < 1) throw Error("paper_module_class: landi_vs needs n >= 1");
    return make_class(ThetaKind::Irrational, n + 1, -(n * (n + 1) * (n + 2)) / 6);
  }
  if (name == "brain_landi") {
    if (n < 2) throw Error("paper_module_class: brain_landi needs n >= 2");
    return make_class(ThetaKind::Irrational, n, s);
  }
  throw Error("paper_module_class: unknown name '" + name + "'");
}

inline std::string to_string(const ModuleClass& c) {
  if (c.n == 0) return "0";
  return "N(" + std::to_string(c.n) + "," + std::to_string(c.s) + ")";
}

}  // namespace ncsphere

#endif
