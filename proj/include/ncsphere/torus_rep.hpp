// Finite-dimensional clock-and-shift representations of the rational
// 2-torus, evaluation of symbolic torus elements, and the Rieffel projection
// built from the piecewise-linear bump profile.
//
// Conventions: U1 is the clock diag(exp(2 pi i p k / q)) and U2 the cyclic
// shift e_k -> e_{k-1}, so that U2 U1 = exp(2 pi i p/q) U1 U2 -- the same
// relation the rewriting engine imposes (higher index past lower gains rho).
// This is forced by requiring `represent` to be a *-homomorphism.
#ifndef NCSPHERE_TORUS_REP_HPP
#define NCSPHERE_TORUS_REP_HPP

#include <Eigen/Dense>

#include <complex>
#include <numeric>

#include "ncsphere/element.hpp"

namespace ncsphere {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

struct Rep {
  long long p = 0, q = 0;
  CMatrix U1, U2;

  Theta theta() const { return Theta::rational(p, q); }
};

inline Rep clock_shift(long long p, long long q) {
  if (q < 2) throw Error("clock_shift: q must be >= 2");
  p %= q;
  if (p < 0) p += q;
  if (std::gcd(p, q) != 1) throw Error("clock_shift: p and q must be coprime");
  Rep r;
  r.p = p;
  r.q = q;
  r.U1 = CMatrix::Zero(q, q);
  r.U2 = CMatrix::Zero(q, q);
  const double tau = 2.0 * 3.14159265358979323846;
  for (long long k = 0; k < q; ++k) {
    double ang = tau * static_cast<double>((p * k) % q) / static_cast<double>(q);
    r.U1(k, k) = Cplx(std::cos(ang), std::sin(ang));
    r.U2((k - 1 + q) % q, k) = 1.0;
  }
  return r;
}

// Spectral norm of the commutation defect U2 U1 - rho U1 U2.
inline double commutation_defect(const Rep& r) {
  const double tau = 2.0 * 3.14159265358979323846;
  double ang = tau * static_cast<double>(r.p) / static_cast<double>(r.q);
  CMatrix d = r.U2 * r.U1 - Cplx(std::cos(ang), std::sin(ang)) * (r.U1 * r.U2);
  return d.operatorNorm();
}

// U1^k1 U2^k2 as a dense matrix; the product has q nonzero entries,
// (row, col) = (col - k2 mod q, col) with value omega^(k1 * row).
inline CMatrix weyl_matrix(const Rep& r, long long k1, long long k2) {
  const long long q = r.q;
  const double tau = 2.0 * 3.14159265358979323846;
  CMatrix m = CMatrix::Zero(q, q);
  long long kk1 = ((k1 % q) + q) % q;
  long long kk2 = ((k2 % q) + q) % q;
  for (long long col = 0; col < q; ++col) {
    long long row = (col - kk2 + q) % q;
    long long e = (((r.p * row) % q) * kk1) % q;
    double a = tau * static_cast<double>(e) / static_cast<double>(q);
    m(row, col) = Cplx(std::cos(a), std::sin(a));
  }
  return m;
}

// Evaluates a torus(2) element in the representation; PhaseScalars are
// evaluated at theta = p/q.
inline CMatrix represent(const AlgebraElement& a, const Rep& r) {
  if (!a.pres()->is_torus() || a.pres()->m() != 2)
    throw Error("represent: element must live in a torus(2) presentation");
  CMatrix acc = CMatrix::Zero(r.q, r.q);
  Theta th = r.theta();
  for (const auto& [mono, coeff] : a.terms())
    acc += coeff.eval(th) * weyl_matrix(r, mono.e[0], mono.e[1]);
  return acc;
}

inline Cplx numeric_trace(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error("numeric_trace: non-square matrix");
  return m.trace() / static_cast<double>(m.rows());
}

// Piecewise-linear Rieffel profile: f ramps 0 -> 1 on [0, eps], is 1 on
// [eps, theta], ramps down on [theta, theta + eps] and vanishes elsewhere;
// g = sqrt(f - f^2) lives on the up-ramp only. These satisfy
//   g(x) g(x + theta) = 0,
//   g(x) (f(x) + f(x + theta) - 1) = 0,
//   g^2(x) + g^2(x - theta) = f(x) - f(x)^2
// pointwise, which is exactly what P^2 = P needs.
struct RieffelParams {
  double eps;
  explicit RieffelParams(double e) : eps(e) {}
  static RieffelParams standard(const Theta& th, double frac = 0.2) {
    double t = th.value();
    return RieffelParams(frac * std::min(t, 1.0 - t));
  }
};

struct RieffelProfile {
  double theta, eps;
  RieffelProfile(double theta_, double eps_) : theta(theta_), eps(eps_) {
    if (!(eps > 0.0) || eps > std::min(theta, 1.0 - theta))
      throw Error("rieffel: eps must lie in (0, min(theta, 1-theta)]");
  }
  double f(double x) const {
    x -= std::floor(x);
    if (x < eps) return x / eps;
    if (x <= theta) return 1.0;
    if (x < theta + eps) return 1.0 - (x - theta) / eps;
    return 0.0;
  }
  double g(double x) const {
    x -= std::floor(x);
    if (x <= 0.0 || x >= eps) return 0.0;
    double v = f(x);
    return std::sqrt(v * (1.0 - v));
  }
};

struct RieffelResult {
  CMatrix P;
  double idem_residual = 0.0;   // ||P^2 - P|| (spectral)
  double herm_residual = 0.0;   // ||P* - P|| (spectral)
  double trace_over_q = 0.0;
};

// P = g(U1) U2 + f(U1) + U2* g(U1), with f and g evaluated at the clock
// eigen-angles p k / q mod 1.
inline RieffelResult rieffel_projection(const Rep& r, const RieffelParams& params) {
  Theta th = r.theta();
  RieffelProfile prof(th.value(), params.eps);
  const long long q = r.q;
  Eigen::VectorXd fv(q), gv(q);
  for (long long k = 0; k < q; ++k) {
    double x = static_cast<double>((r.p * k) % q) / static_cast<double>(q);
    fv(k) = prof.f(x);
    gv(k) = prof.g(x);
  }
  CMatrix P = CMatrix::Zero(q, q);
  for (long long k = 0; k < q; ++k) {
    P(k, k) += fv(k);
    long long km = (k - 1 + q) % q;
    P(km, k) += gv(km);  // g(U1) U2 : column k feeds row k-1 scaled by g there
    P(k, km) += gv(km);  // U2* g(U1) : the Hermitian partner entry
  }
  RieffelResult out;
  out.P = P;
  // P is Hermitian by construction, so both residual matrices are
  // (skew-)Hermitian and the spectral norm is the largest |eigenvalue|.
  CMatrix idem = P * P - P;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(idem);
  out.idem_residual = es.eigenvalues().cwiseAbs().maxCoeff();
  CMatrix herm = Cplx(0, 1) * (P.adjoint() - P);
  Eigen::SelfAdjointEigenSolver<CMatrix> es2(herm);
  out.herm_residual = es2.eigenvalues().cwiseAbs().maxCoeff();
  out.trace_over_q = std::real(numeric_trace(P));
  return out;
}

}  // namespace ncsphere

#endif
