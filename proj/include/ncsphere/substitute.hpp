// Generator substitution: evaluates an element under a map sending each
// generator of its presentation to an element of a destination presentation.
// This is the engine behind the quotient maps j_k (w_i -> z_i, y -> 0,
// u -> 1), the summand inclusions x -> +/- y, and the relation checker.
#ifndef NCSPHERE_SUBSTITUTE_HPP
#define NCSPHERE_SUBSTITUTE_HPP

#include <optional>
#include <vector>

#include "ncsphere/element.hpp"

namespace ncsphere {

struct GenImages {
  PresPtr dst;
  std::vector<AlgebraElement> normal;      // image of z_i / w_i / U_i
  std::optional<AlgebraElement> central;   // image of x / y
  std::optional<AlgebraElement> u;         // image of u

  void validate(const Presentation& src) const {
    if (!dst) throw Error("substitution: missing destination presentation");
    if (static_cast<int>(normal.size()) != src.m())
      throw Error("substitution: unmapped generator (need an image for every z_i/w_i/U_i)");
    if (src.has_central() && !central) throw Error("substitution: unmapped central generator");
    if (src.has_u() && !u) throw Error("substitution: unmapped generator u");
    for (const auto& a : normal)
      if (*a.pres() != *dst) throw Error("substitution: image in wrong presentation");
  }
};

inline AlgebraElement substitute(const AlgebraElement& a, const GenImages& img) {
  const Presentation& src = *a.pres();
  img.validate(src);
  std::vector<char> unitary_checked(src.m(), 0);
  AlgebraElement out = AlgebraElement::zero(img.dst);
  for (const auto& [mono, coeff] : a.terms()) {
    AlgebraElement acc = AlgebraElement::scalar(img.dst, coeff);
    if (src.is_torus()) {
      for (int i = 0; i < src.m(); ++i) {
        int k = mono.e[i];
        if (k == 0) continue;
        if (k < 0) {
          // Negative powers are only meaningful when the image is unitary.
          if (!unitary_checked[i]) {
            const AlgebraElement& g = img.normal[i];
            if (g * g.adjoint() != AlgebraElement::one(img.dst) ||
                g.adjoint() * g != AlgebraElement::one(img.dst))
              throw Error("substitution: negative power of a generator with non-unitary image");
            unitary_checked[i] = 1;
          }
          acc = acc * img.normal[i].adjoint().pow(-k);
        } else {
          acc = acc * img.normal[i].pow(k);
        }
      }
    } else {
      for (int i = 0; i < src.m(); ++i) {
        if (mono.e[2 * i] > 0) acc = acc * img.normal[i].pow(mono.e[2 * i]);
        if (mono.e[2 * i + 1] > 0) acc = acc * img.normal[i].adjoint().pow(mono.e[2 * i + 1]);
      }
      if (src.has_central() && mono.e[src.central_slot()] > 0)
        acc = acc * img.central->pow(mono.e[src.central_slot()]);
      if (src.has_u() && mono.e[src.u_slot()] > 0)
        acc = acc * img.u->pow(mono.e[src.u_slot()]);
    }
    out += acc;
  }
  return out;
}

// Identity-shaped image set (gen -> gen) as a starting point for tweaks.
inline GenImages identity_images(const PresPtr& pres) {
  GenImages img;
  img.dst = pres;
  for (int i = 0; i < pres->m(); ++i) img.normal.push_back(AlgebraElement::generator(pres, i));
  if (pres->has_central()) img.central = AlgebraElement::central(pres);
  if (pres->has_u()) img.u = AlgebraElement::u_gen(pres);
  return img;
}

}  // namespace ncsphere

#endif
