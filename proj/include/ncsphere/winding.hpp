// The tau-winding pairing of a loop of invertible fibers with the fiber
// trace: value = (1/2pi) sum_k Im tau(Log(g(t_k)^{-1} g(t_{k+1}))) with the
// principal logarithm and tau = tr/q (the per-block normalized trace summed
// over the diagonal blocks, so an X^s loop embedded in GL_n keeps winding
// s*theta for every n).
//
// Each step uses the determinant increment Arg(det g_{k+1} / det g_k) when a
// branch-margin bound certifies it equals the principal-log trace; otherwise
// the step falls back to the eigenvalue sum of g_k^{-1} g_{k+1}, and errors
// out as "step too coarse" when even the principal log is undefined.
#ifndef NCSPHERE_WINDING_HPP
#define NCSPHERE_WINDING_HPP

#include <cmath>
#include <limits>
#include <memory>

#include "ncsphere/field.hpp"

namespace ncsphere {

struct WindingResult {
  double value = 0.0;
  int grid = 0;                    // number of steps
  double residual_estimate = 0.0;  // |value - value on the half grid|
  double min_sigma = 0.0;          // smallest fiber sigma_min encountered
  double max_condition = 0.0;      // largest fiber condition estimate
};

namespace detail {

inline double wrap_pi(double x) {
  const double pi = 3.14159265358979323846;
  while (x > pi) x -= 2.0 * pi;
  while (x <= -pi) x += 2.0 * pi;
  return x;
}

inline double arg_det(const Eigen::PartialPivLU<CMatrix>& lu) {
  double arg = 0.0;
  const auto& m = lu.matrixLU();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Cplx d = m(i, i);
    if (d == Cplx(0, 0)) throw Error("winding: singular fiber (zero pivot)");
    arg += std::arg(d);
  }
  if (lu.permutationP().determinant() < 0) arg += 3.14159265358979323846;
  return arg;
}

// Solves A* x = b from the precomputed LU of A (PA = LU gives A* = U* L* P);
// Eigen's own lu.adjoint().solve() is an order of magnitude slower.
inline Eigen::VectorXcd adjoint_solve(const Eigen::PartialPivLU<CMatrix>& lu,
                                      Eigen::VectorXcd b) {
  const auto& m = lu.matrixLU();
  m.triangularView<Eigen::Upper>().adjoint().solveInPlace(b);
  m.triangularView<Eigen::UnitLower>().adjoint().solveInPlace(b);
  return lu.permutationP().inverse() * b;
}

// Power-iteration estimates of the extreme singular values, reusing the LU
// for the small one. Deterministic start vector.
struct SigmaEstimates {
  double smax, smin;
};
inline SigmaEstimates sigma_estimates(const CMatrix& a, const Eigen::PartialPivLU<CMatrix>& lu,
                                      int iters = 4) {
  const Eigen::Index n = a.rows();
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Cplx(1.0 + 0.37 * std::sin(1.0 + i), 0.11);
  v.normalize();
  double smax = 0.0;
  for (int it = 0; it < iters; ++it) {
    Eigen::VectorXcd w = a.adjoint() * (a * v);
    double nn = w.norm();
    if (nn == 0.0) return {0.0, 0.0};
    smax = std::sqrt(nn);
    v = w / nn;
  }
  Eigen::VectorXcd u(n);
  for (Eigen::Index i = 0; i < n; ++i) u(i) = Cplx(1.0, 0.29 * std::cos(2.0 + i));
  u.normalize();
  double sinv = 0.0;
  for (int it = 0; it < iters; ++it) {
    Eigen::VectorXcd w = adjoint_solve(lu, lu.solve(u));
    double nn = w.norm();
    if (!std::isfinite(nn) || nn == 0.0) return {smax, 0.0};
    sinv = std::sqrt(nn);
    u = w / nn;
  }
  return {smax, sinv > 0.0 ? 1.0 / sinv : 0.0};
}

}  // namespace detail

struct WindingOptions {
  double endpoint_tol = 1e-6;     // scalar-endpoint requirement
  double guard_fraction = 0.5;    // fraction of pi allowed in per-step phase mass
  bool require_scalar_endpoints = true;
};

inline WindingResult winding(const IntervalField& f, const WindingOptions& opt = {}) {
  const double pi = 3.14159265358979323846;
  const int N = static_cast<int>(f.grid.size()) - 1;
  if (N < 2) throw Error("winding: need at least two grid steps");
  const int dim = f.dim();
  const double sqrt_dim = std::sqrt(static_cast<double>(dim));

  WindingResult out;
  out.grid = N;
  out.min_sigma = std::numeric_limits<double>::infinity();

  std::vector<double> argdet(N + 1);
  CMatrix prev = f.fiber(f.grid[0]);
  auto prev_lu = std::make_unique<Eigen::PartialPivLU<CMatrix>>(prev);
  {
    auto sig = detail::sigma_estimates(prev, *prev_lu);
    if (!(sig.smin > 0.0)) throw Error("winding: singular fiber at t=0");
    out.min_sigma = std::min(out.min_sigma, sig.smin);
    out.max_condition = std::max(out.max_condition, sig.smax / sig.smin);
  }
  argdet[0] = detail::arg_det(*prev_lu);

  if (opt.require_scalar_endpoints) {
    double d0 = scalar_deviation(f.fiber(f.grid[0]));
    double d1 = scalar_deviation(f.fiber(f.grid[N]));
    if (d0 > opt.endpoint_tol || d1 > opt.endpoint_tol)
      throw Error("winding: endpoint fibers are not scalar");
  }

  double total = 0.0;
  double prev_smin = out.min_sigma;
  for (int k = 0; k < N; ++k) {
    CMatrix cur = f.fiber(f.grid[k + 1]);
    auto cur_lu = std::make_unique<Eigen::PartialPivLU<CMatrix>>(cur);
    auto sig = detail::sigma_estimates(cur, *cur_lu);
    if (!(sig.smin > 0.0)) throw Error("winding: singular fiber inside the loop");
    out.min_sigma = std::min(out.min_sigma, sig.smin);
    out.max_condition = std::max(out.max_condition, sig.smax / sig.smin);
    argdet[k + 1] = detail::arg_det(*cur_lu);

    double dg = (cur - prev).norm();
    double phase_mass_bound = 0.5 * pi * sqrt_dim * dg / prev_smin;
    double inc;
    if (phase_mass_bound <= opt.guard_fraction * pi) {
      inc = detail::wrap_pi(argdet[k + 1] - argdet[k]);
    } else {
      // Definitional path: principal-log eigenvalue sum of g_k^{-1} g_{k+1}.
      CMatrix M = prev_lu->solve(cur);
      CMatrix E = M - CMatrix::Identity(dim, dim);
      if (E.norm() >= 1.0)
        throw Error("winding: unstable log branch (step too coarse; refine the grid)");
      Eigen::ComplexEigenSolver<CMatrix> es(M, false);
      inc = 0.0;
      for (Eigen::Index i = 0; i < dim; ++i) {
        Cplx lam = es.eigenvalues()(i);
        if (std::real(lam) <= 0.0 && std::abs(std::imag(lam)) < 1e-14)
          throw Error("winding: step eigenvalue on the negative real axis");
        inc += std::arg(lam);
      }
    }
    total += inc;
    prev = std::move(cur);
    prev_lu = std::move(cur_lu);
    prev_smin = sig.smin;
  }
  out.value = total / (2.0 * pi * f.q);

  if (N % 2 == 0) {
    double half_total = 0.0;
    for (int k = 0; k + 2 <= N; k += 2)
      half_total += detail::wrap_pi(argdet[k + 2] - argdet[k]);
    out.residual_estimate = std::abs(out.value - half_total / (2.0 * pi * f.q));
  }
  return out;
}

// Minimum singular value across a sampled family of invertibles; certifies
// that the family stays invertible above the configured floor.
inline Report homotopy_check(const std::function<CMatrix(double s, double t)>& family,
                             const std::vector<double>& s_grid,
                             const std::vector<double>& t_grid, double floor = 1e-6) {
  double min_sigma = std::numeric_limits<double>::infinity();
  for (double s : s_grid) {
    for (double t : t_grid) {
      CMatrix m = family(s, t);
      Eigen::PartialPivLU<CMatrix> lu(m);
      auto sig = detail::sigma_estimates(m, lu);
      min_sigma = std::min(min_sigma, sig.smin);
    }
  }
  Report rep;
  rep.title = "homotopy invertibility";
  rep.add("min singular value >= floor", min_sigma >= floor, min_sigma);
  return rep;
}

}  // namespace ncsphere

#endif
