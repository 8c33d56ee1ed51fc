// Algebra elements: finite sums of normal-ordered twisted monomials with
// PhaseScalar coefficients, together with the confluent rewriting that gives
// the exact equality oracle.
//
// Normal form of a monomial:
//   * factors sorted z1 z1* z2 z2* ... x/y u (torus: U1 U2 ...);
//   * exchange phases collected into the coefficient;
//   * radius reduction on the top generator: z_m z_m* -> 1 - sum_{i<m} z_i z_i*
//     (minus x^2 resp. y^2 for the even sphere / ball);
//   * u reduction: u*y -> 1 - u, applied to exhaustion.
// Each z_i z_i* is central and every substituted polynomial is central, so
// the rewriting is confluent and normal forms are unique.
#ifndef NCSPHERE_ELEMENT_HPP
#define NCSPHERE_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncsphere/presentation.hpp"

namespace ncsphere {

struct Monomial {
  std::vector<std::int32_t> e;

  bool empty() const {
    for (auto v : e)
      if (v != 0) return false;
    return true;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

namespace detail {

// Exchange-phase exponent (whole powers of rho) created when the factors of
// n are moved left past the factors of m to merge two normal-ordered
// monomials. Derived from z_j z_i = rho z_i z_j plus the starred variants.
inline std::int64_t cross_phase(const Presentation& p, const Monomial& m, const Monomial& n) {
  std::int64_t E = 0;
  if (p.is_torus()) {
    for (int i = 0; i < p.m(); ++i)
      for (int j = i + 1; j < p.m(); ++j)
        E += static_cast<std::int64_t>(m.e[j]) * n.e[i];
  } else {
    for (int i = 0; i < p.m(); ++i) {
      std::int64_t ni = static_cast<std::int64_t>(n.e[2 * i]) - n.e[2 * i + 1];
      if (ni == 0) continue;
      for (int j = i + 1; j < p.m(); ++j) {
        std::int64_t mj = static_cast<std::int64_t>(m.e[2 * j]) - m.e[2 * j + 1];
        E += mj * ni;
      }
    }
  }
  return E;
}

// Phase exponent picked up by reordering the reversed starred word back into
// canonical order when taking adjoints.
inline std::int64_t adjoint_phase(const Presentation& p, const Monomial& m) {
  std::int64_t E = 0;
  if (p.is_torus()) {
    for (int i = 0; i < p.m(); ++i)
      for (int j = i + 1; j < p.m(); ++j)
        E += static_cast<std::int64_t>(m.e[i]) * m.e[j];
  } else {
    for (int i = 0; i < p.m(); ++i) {
      std::int64_t di = static_cast<std::int64_t>(m.e[2 * i]) - m.e[2 * i + 1];
      if (di == 0) continue;
      for (int j = i + 1; j < p.m(); ++j) {
        std::int64_t dj = static_cast<std::int64_t>(m.e[2 * j]) - m.e[2 * j + 1];
        E += di * dj;
      }
    }
  }
  return E;
}

}  // namespace detail

class AlgebraElement {
 public:
  using Terms = std::map<Monomial, PhaseScalar>;

  AlgebraElement() = default;
  explicit AlgebraElement(PresPtr pres) : pres_(std::move(pres)) {}

  static AlgebraElement zero(PresPtr pres) { return AlgebraElement(std::move(pres)); }
  static AlgebraElement scalar(PresPtr pres, PhaseScalar c) {
    AlgebraElement a(std::move(pres));
    a.accumulate(Monomial{std::vector<std::int32_t>(a.pres_->slots(), 0)}, std::move(c));
    return a;
  }
  static AlgebraElement one(PresPtr pres) { return scalar(std::move(pres), PhaseScalar(1)); }

  // z_i (torus: U_i), optionally starred; i is 0-based.
  static AlgebraElement generator(PresPtr pres, int i, bool star = false) {
    if (i < 0 || i >= pres->m()) throw Error("generator index out of range");
    Monomial mo{std::vector<std::int32_t>(pres->slots(), 0)};
    if (pres->is_torus())
      mo.e[i] = star ? -1 : 1;
    else
      mo.e[2 * i + (star ? 1 : 0)] = 1;
    AlgebraElement a(std::move(pres));
    a.accumulate(mo, PhaseScalar(1));
    return a;
  }
  static AlgebraElement central(PresPtr pres) {
    if (!pres->has_central()) throw Error("presentation has no central generator");
    Monomial mo{std::vector<std::int32_t>(pres->slots(), 0)};
    mo.e[pres->central_slot()] = 1;
    AlgebraElement a(std::move(pres));
    a.accumulate(mo, PhaseScalar(1));
    return a;
  }
  static AlgebraElement u_gen(PresPtr pres) {
    if (!pres->has_u()) throw Error("presentation has no u generator");
    Monomial mo{std::vector<std::int32_t>(pres->slots(), 0)};
    mo.e[pres->u_slot()] = 1;
    AlgebraElement a(std::move(pres));
    a.accumulate(mo, PhaseScalar(1));
    return a;
  }

  const PresPtr& pres() const { return pres_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PhaseScalar trace_coeff() const {
    for (const auto& [m, c] : terms_)
      if (m.empty()) return c;
    return PhaseScalar();
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_same(b);
    AlgebraElement r = a;
    for (const auto& [m, c] : b.terms_) r.accumulate(m, c);
    return r;
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_same(b);
    AlgebraElement r = a;
    for (const auto& [m, c] : b.terms_) r.accumulate(m, -c);
    return r;
  }
  friend AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement r(a.pres_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_same(b);
    const Presentation& p = *a.pres_;
    AlgebraElement r(a.pres_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        PhaseScalar c =
            ca * cb * PhaseScalar::rho_power_halves(2 * detail::cross_phase(p, ma, mb));
        Monomial m;
        m.e.resize(p.slots());
        for (int k = 0; k < p.slots(); ++k) m.e[k] = ma.e[k] + mb.e[k];
        r.reduce_and_accumulate(std::move(m), std::move(c));
      }
    }
    return r;
  }
  friend AlgebraElement operator*(const PhaseScalar& c, const AlgebraElement& a) {
    AlgebraElement r(a.pres_);
    for (const auto& [m, cm] : a.terms_) r.accumulate(m, c * cm);
    return r;
  }
  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  AlgebraElement adjoint() const {
    const Presentation& p = *pres_;
    AlgebraElement r(pres_);
    for (const auto& [m, c] : terms_) {
      Monomial ms;
      ms.e = m.e;
      if (p.is_torus()) {
        for (int i = 0; i < p.m(); ++i) ms.e[i] = -m.e[i];
      } else {
        for (int i = 0; i < p.m(); ++i) std::swap(ms.e[2 * i], ms.e[2 * i + 1]);
      }
      PhaseScalar cs =
          c.conj() * PhaseScalar::rho_power_halves(2 * detail::adjoint_phase(p, m));
      r.reduce_and_accumulate(std::move(ms), std::move(cs));
    }
    return r;
  }

  AlgebraElement pow(int k) const {
    if (k < 0) throw Error("pow: negative exponent on a non-invertible element");
    AlgebraElement r = one(pres_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return *a.pres_ == *b.pres_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  // Inserts c * mono, applying radius and u reductions to exhaustion.
  void reduce_and_accumulate(Monomial mono, PhaseScalar c) {
    const Presentation& p = *pres_;
    std::vector<std::pair<Monomial, PhaseScalar>> work;
    work.emplace_back(std::move(mono), std::move(c));
    while (!work.empty()) {
      auto [m, cf] = std::move(work.back());
      work.pop_back();
      if (cf.is_zero()) continue;
      if (!p.is_torus()) {
        const int top = p.m() - 1;
        if (m.e[2 * top] >= 1 && m.e[2 * top + 1] >= 1) {
          Monomial base = m;
          base.e[2 * top] -= 1;
          base.e[2 * top + 1] -= 1;
          work.emplace_back(base, cf);
          for (int i = 0; i < top; ++i) {
            Monomial t = base;
            t.e[2 * i] += 1;
            t.e[2 * i + 1] += 1;
            work.emplace_back(std::move(t), -cf);
          }
          if (p.has_central()) {
            Monomial t = base;
            t.e[p.central_slot()] += 2;
            work.emplace_back(std::move(t), -cf);
          }
          continue;
        }
        if (p.has_u() && m.e[p.central_slot()] >= 1 && m.e[p.u_slot()] >= 1) {
          Monomial a = m;
          a.e[p.central_slot()] -= 1;
          a.e[p.u_slot()] -= 1;
          Monomial b = m;
          b.e[p.central_slot()] -= 1;
          work.emplace_back(std::move(a), cf);
          work.emplace_back(std::move(b), -cf);
          continue;
        }
      }
      accumulate(m, cf);
    }
  }

 private:
  void require_same(const AlgebraElement& o) const {
    if (!pres_ || !o.pres_ || *pres_ != *o.pres_)
      throw Error("presentation mismatch between operands");
  }
  void accumulate(const Monomial& m, PhaseScalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PresPtr pres_;
  Terms terms_;
};

// Canonical printing; output re-parses to the same element.
inline std::string monomial_str(const Presentation& p, const Monomial& m) {
  std::string out;
  auto emit = [&out](const std::string& g, std::int64_t k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += g;
    if (k != 1) out += "^" + std::to_string(k);
  };
  if (p.is_torus()) {
    for (int i = 0; i < p.m(); ++i) emit(p.normal_name(i), m.e[i]);
  } else {
    for (int i = 0; i < p.m(); ++i) {
      emit(p.normal_name(i), m.e[2 * i]);
      emit(p.normal_name(i) + "'", m.e[2 * i + 1]);
    }
    if (p.has_central()) emit(p.central_name(), m.e[p.central_slot()]);
    if (p.has_u()) emit("u", m.e[p.u_slot()]);
  }
  return out;
}

inline std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    std::string mono = monomial_str(*a.pres(), m);
    std::string term;
    if (mono.empty()) {
      term = to_string(c);
    } else if (c.is_one()) {
      term = mono;
    } else if (c == -PhaseScalar(1)) {
      term = "-" + mono;
    } else {
      term = to_string(c) + " * " + mono;
    }
    if (first) {
      out = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace ncsphere

#endif
