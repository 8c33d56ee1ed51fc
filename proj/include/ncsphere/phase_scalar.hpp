// The phase ring: exact Laurent-style combinations of half-integer powers of
// the formal phase rho = exp(2*pi*i*theta), with Gaussian-rational
// coefficients. Half powers exist because the corrected SU(2)-type unitary
// needs sqrt(conj(rho)); for numeric evaluation the branch is fixed as
// rho^(1/2) := exp(pi*i*theta).
#ifndef NCSPHERE_PHASE_SCALAR_HPP
#define NCSPHERE_PHASE_SCALAR_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ncsphere/gaussian_rational.hpp"

namespace ncsphere {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Theta parameter of the deformation. Rational values are kept reduced with
// 0 <= p < q; irrational values are doubles in (0,1).
struct Theta {
  bool is_rational = true;
  long long p = 0;
  long long q = 1;
  double irr = 0.0;

  static Theta rational(long long p, long long q) {
    if (q <= 0) throw Error("Theta: q must be positive");
    p %= q;
    if (p < 0) p += q;
    long long g = std::gcd(p, q);
    Theta t;
    t.is_rational = true;
    t.p = p / g;
    t.q = q / g;
    return t;
  }
  static Theta irrational(double v) {
    if (!(v > 0.0 && v < 1.0) || !std::isfinite(v))
      throw Error("Theta: irrational value must lie in (0,1)");
    Theta t;
    t.is_rational = false;
    t.irr = v;
    return t;
  }
  double value() const { return is_rational ? static_cast<double>(p) / q : irr; }
};

// Best rational approximation p/q with q <= q_max (continued fractions).
inline Theta convergent_of(double theta, long long q_max) {
  if (!(theta > 0.0 && theta < 1.0)) throw Error("convergent_of: theta must be in (0,1)");
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = theta;
  for (int it = 0; it < 64; ++it) {
    long long a = static_cast<long long>(std::floor(x));
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > q_max || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = x - static_cast<double>(a);
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (q1 < 2) throw Error("convergent_of: no convergent with q >= 2 under q_max");
  return Theta::rational(p1, q1);
}

// Finite sum of c_k * rho^(k/2); keys are exponents counted in halves.
class PhaseScalar {
 public:
  using Terms = std::map<std::int64_t, GaussianRational>;

  PhaseScalar() = default;
  PhaseScalar(long v) {
    if (v != 0) terms_[0] = GaussianRational(v);
  }
  PhaseScalar(GaussianRational g) {
    if (!g.is_zero()) terms_[0] = std::move(g);
  }

  // rho^(halves/2) with an optional coefficient.
  static PhaseScalar rho_power_halves(std::int64_t halves,
                                      GaussianRational c = GaussianRational(1)) {
    PhaseScalar s;
    if (!c.is_zero()) s.terms_[halves] = std::move(c);
    return s;
  }
  static PhaseScalar rho() { return rho_power_halves(2); }
  static PhaseScalar rho_bar() { return rho_power_halves(-2); }
  static PhaseScalar one() { return PhaseScalar(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == GaussianRational(1);
  }

  PhaseScalar conj() const {
    PhaseScalar r;
    for (const auto& [k, c] : terms_) r.terms_[-k] = c.conj();
    return r;
  }

  friend PhaseScalar operator+(const PhaseScalar& a, const PhaseScalar& b) {
    PhaseScalar r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend PhaseScalar operator-(const PhaseScalar& a, const PhaseScalar& b) {
    PhaseScalar r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }
  friend PhaseScalar operator-(const PhaseScalar& a) {
    PhaseScalar r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
  }
  friend PhaseScalar operator*(const PhaseScalar& a, const PhaseScalar& b) {
    PhaseScalar r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  PhaseScalar& operator+=(const PhaseScalar& o) { return *this = *this + o; }
  PhaseScalar& operator-=(const PhaseScalar& o) { return *this = *this - o; }
  PhaseScalar& operator*=(const PhaseScalar& o) { return *this = *this * o; }

  friend bool operator==(const PhaseScalar& a, const PhaseScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PhaseScalar& a, const PhaseScalar& b) { return !(a == b); }

  // Substitutes rho = exp(2*pi*i*theta), half powers on the fixed branch.
  std::complex<double> eval(const Theta& th) const {
    const double pi = 3.14159265358979323846;
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, c] : terms_) {
      double ang = pi * th.value() * static_cast<double>(k);
      acc += c.to_complex() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }

  void add_term(std::int64_t halves, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(halves);
    if (it == terms_.end()) {
      terms_.emplace(halves, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  Terms terms_;
};

inline std::string half_exponent_str(std::int64_t halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return std::to_string(halves) + "/2";
}

// Canonical printed form, parseable by the expression grammar.
inline std::string to_string(const PhaseScalar& s) {
  if (s.is_zero()) return "0";
  auto one_term = [](std::int64_t k, const GaussianRational& c) -> std::string {
    if (k == 0) return to_string(c);
    std::string rho = (k == 2) ? "rho" : "rho^" + half_exponent_str(k);
    if (c == GaussianRational(1)) return rho;
    if (c == GaussianRational(-1)) return "-" + rho;
    return to_string(c) + " * " + rho;
  };
  if (s.terms().size() == 1) {
    const auto& [k, c] = *s.terms().begin();
    return one_term(k, c);
  }
  std::string out;
  bool first = true;
  for (const auto& [k, c] : s.terms()) {
    std::string t = one_term(k, c);
    if (first) {
      out = t;
      first = false;
    } else if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return "(" + out + ")";
}

}  // namespace ncsphere

#endif
