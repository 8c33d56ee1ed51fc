// Presentations of the twisted algebras: the m-torus on unitaries U_i, the
// odd sphere on normal z_i, the even sphere (adds the central hermitian x),
// and the even ball on w_i, y (optionally with the adjoined central inverse
// u of 1+y, subject to u*(1+y) = 1).
//
// Phase convention: a single scalar theta with theta_{ij} = theta for i < j.
// Concretely z_j z_i = rho * z_i z_j and U_j U_i = rho * U_i U_j whenever
// i < j, where rho = exp(2*pi*i*theta). This is the convention under which
// the standard charge-1 instanton projection is idempotent; the swapped
// convention is exercised as a negative control in the tests.
#ifndef NCSPHERE_PRESENTATION_HPP
#define NCSPHERE_PRESENTATION_HPP

#include <memory>
#include <string>

#include "ncsphere/phase_scalar.hpp"

namespace ncsphere {

enum class Family { Torus, OddSphere, EvenSphere, Ball };

class Presentation {
 public:
  Presentation(Family f, int m, bool with_u = false) : family_(f), m_(m), with_u_(with_u) {
    if (m < 1) throw Error("Presentation: m must be >= 1");
    if (with_u && f != Family::Ball) throw Error("Presentation: u is only adjoined to balls");
  }

  static std::shared_ptr<const Presentation> torus(int m) {
    return std::make_shared<const Presentation>(Family::Torus, m);
  }
  static std::shared_ptr<const Presentation> odd_sphere(int m) {
    return std::make_shared<const Presentation>(Family::OddSphere, m);
  }
  static std::shared_ptr<const Presentation> even_sphere(int m) {
    return std::make_shared<const Presentation>(Family::EvenSphere, m);
  }
  static std::shared_ptr<const Presentation> ball(int m, bool with_u = false) {
    return std::make_shared<const Presentation>(Family::Ball, m, with_u);
  }

  Family family() const { return family_; }
  int m() const { return m_; }
  bool with_u() const { return with_u_; }

  bool is_torus() const { return family_ == Family::Torus; }
  bool has_central() const { return family_ == Family::EvenSphere || family_ == Family::Ball; }
  bool has_u() const { return with_u_; }

  // Exponent-vector layout. Torus: one Laurent exponent per unitary. Other
  // families: the pair (a_i, b_i) for z_i^a z_i*^b per generator, then the
  // central exponent, then the u exponent.
  int slots() const {
    if (is_torus()) return m_;
    return 2 * m_ + (has_central() ? 1 : 0) + (has_u() ? 1 : 0);
  }
  int central_slot() const { return 2 * m_; }
  int u_slot() const { return 2 * m_ + 1; }

  // Generator spelling used by the parser and printer.
  std::string normal_name(int i) const {
    const char* letter = is_torus() ? "U" : (family_ == Family::Ball ? "w" : "z");
    return letter + std::to_string(i + 1);
  }
  std::string central_name() const { return family_ == Family::Ball ? "y" : "x"; }

  std::string name() const {
    switch (family_) {
      case Family::Torus: return "torus(" + std::to_string(m_) + ")";
      case Family::OddSphere: return "odd_sphere(" + std::to_string(m_) + ")";
      case Family::EvenSphere: return "even_sphere(" + std::to_string(m_) + ")";
      case Family::Ball:
        return "ball(" + std::to_string(m_) + (with_u_ ? ", u)" : ")");
    }
    return "?";
  }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.family_ == b.family_ && a.m_ == b.m_ && a.with_u_ == b.with_u_;
  }
  friend bool operator!=(const Presentation& a, const Presentation& b) { return !(a == b); }

 private:
  Family family_;
  int m_;
  bool with_u_;
};

using PresPtr = std::shared_ptr<const Presentation>;

}  // namespace ncsphere

#endif
