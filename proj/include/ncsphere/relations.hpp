// Defining relations of the preset presentations as formal words (so they
// can be pushed through generator maps before any normalization), plus the
// homomorphism checker built on top of them.
//
// The starred exchange relations z_j z_i* = conj(rho) z_i* z_j (i < j) are
// not listed in the universal presentations; they hold in the C*-envelope
// and the rewriting engine imposes them, so they are part of the checked
// set and are labelled "derived".
#ifndef NCSPHERE_RELATIONS_HPP
#define NCSPHERE_RELATIONS_HPP

#include <string>
#include <vector>

#include "ncsphere/report.hpp"
#include "ncsphere/substitute.hpp"

namespace ncsphere {

struct FormalFactor {
  enum Kind { Gen, CentralGen, UGen } kind = Gen;
  int index = 0;
  bool star = false;
  int power = 1;
};
using FormalWord = std::vector<FormalFactor>;

struct Relation {
  std::string name;
  std::vector<std::pair<PhaseScalar, FormalWord>> combo;
};

namespace detail {
inline FormalFactor g(int i, bool star = false, int pow = 1) {
  return {FormalFactor::Gen, i, star, pow};
}
inline FormalFactor central(int pow = 1, bool star = false) {
  return {FormalFactor::CentralGen, 0, star, pow};
}
inline FormalFactor uf(bool star = false) { return {FormalFactor::UGen, 0, star, 1}; }
}  // namespace detail

inline std::vector<Relation> defining_relations(const Presentation& p) {
  using namespace detail;
  std::vector<Relation> rels;
  const PhaseScalar one(1), rho = PhaseScalar::rho(), rho_bar = PhaseScalar::rho_bar();
  auto commutator = [&](const std::string& name, FormalFactor a, FormalFactor b) {
    rels.push_back({name, {{one, {a, b}}, {-one, {b, a}}}});
  };

  if (p.is_torus()) {
    for (int i = 0; i < p.m(); ++i) {
      rels.push_back({"unitary " + p.normal_name(i) + " (right)",
                      {{one, {g(i), g(i, true)}}, {-one, {}}}});
      rels.push_back({"unitary " + p.normal_name(i) + " (left)",
                      {{one, {g(i, true), g(i)}}, {-one, {}}}});
    }
    for (int i = 0; i < p.m(); ++i)
      for (int j = i + 1; j < p.m(); ++j)
        rels.push_back({"exchange " + p.normal_name(j) + " " + p.normal_name(i),
                        {{one, {g(j), g(i)}}, {-rho, {g(i), g(j)}}}});
    return rels;
  }

  for (int i = 0; i < p.m(); ++i)
    commutator("normal " + p.normal_name(i), g(i), g(i, true));
  for (int i = 0; i < p.m(); ++i) {
    for (int j = i + 1; j < p.m(); ++j) {
      rels.push_back({"exchange " + p.normal_name(j) + " " + p.normal_name(i),
                      {{one, {g(j), g(i)}}, {-rho, {g(i), g(j)}}}});
      rels.push_back({"exchange " + p.normal_name(j) + " " + p.normal_name(i) + "* (derived)",
                      {{one, {g(j), g(i, true)}}, {-rho_bar, {g(i, true), g(j)}}}});
    }
  }
  {
    Relation radius{"radius", {}};
    for (int i = 0; i < p.m(); ++i) radius.combo.push_back({one, {g(i), g(i, true)}});
    if (p.has_central()) radius.combo.push_back({one, {central(2)}});
    radius.combo.push_back({-one, {}});
    rels.push_back(std::move(radius));
  }
  if (p.has_central()) {
    rels.push_back({"selfadjoint " + p.central_name(),
                    {{one, {central(1, true)}}, {-one, {central(1)}}}});
    for (int i = 0; i < p.m(); ++i)
      commutator("central " + p.central_name() + " " + p.normal_name(i), central(), g(i));
  }
  if (p.has_u()) {
    rels.push_back({"u*(1+y) = 1", {{one, {uf()}}, {one, {uf(), central()}}, {-one, {}}}});
    rels.push_back({"selfadjoint u", {{one, {uf(true)}}, {-one, {uf()}}}});
    commutator("central u " + p.central_name(), uf(), central());
    for (int i = 0; i < p.m(); ++i)
      commutator("central u " + p.normal_name(i), uf(), g(i));
  }
  return rels;
}

inline AlgebraElement eval_word(const FormalWord& w, const GenImages& img) {
  AlgebraElement acc = AlgebraElement::one(img.dst);
  for (const auto& f : w) {
    const AlgebraElement* base = nullptr;
    switch (f.kind) {
      case FormalFactor::Gen: base = &img.normal.at(f.index); break;
      case FormalFactor::CentralGen: base = &*img.central; break;
      case FormalFactor::UGen: base = &*img.u; break;
    }
    AlgebraElement b = f.star ? base->adjoint() : *base;
    acc = acc * b.pow(f.power);
  }
  return acc;
}

inline AlgebraElement eval_relation(const Relation& r, const GenImages& img) {
  AlgebraElement acc = AlgebraElement::zero(img.dst);
  for (const auto& [c, w] : r.combo) acc += c * eval_word(w, img);
  return acc;
}

// Checks that a generator map (one image tuple per pullback summand) sends
// every defining relation of src to zero. Passes iff all residuals vanish.
inline Report hom_check(const Presentation& src, const std::vector<GenImages>& summands) {
  if (summands.empty()) throw Error("hom_check: no target summands");
  Report rep;
  rep.title = "hom_check from " + src.name();
  auto rels = defining_relations(src);
  for (std::size_t k = 0; k < summands.size(); ++k) {
    summands[k].validate(src);
    for (const auto& r : rels) {
      AlgebraElement defect = eval_relation(r, summands[k]);
      std::string name = r.name;
      if (summands.size() > 1) name = "summand " + std::to_string(k + 1) + ": " + name;
      rep.add(name, defect.is_zero(), static_cast<double>(defect.terms().size()),
              defect.is_zero() ? "" : to_string(defect));
    }
  }
  return rep;
}

// Engine self-consistency: every preset relation normalizes to zero under
// the identity map.
inline Report relations_vanish(const PresPtr& pres) {
  return hom_check(*pres, {identity_images(pres)});
}

}  // namespace ncsphere

#endif
