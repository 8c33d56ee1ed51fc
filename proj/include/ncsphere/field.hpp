// Numeric continuous-field models. Fields carry a fiber evaluator instead of
// a stored fiber array, so fine grids stream in O(1) memory; JSON export
// materializes on the declared grid.
//
// The 3-sphere field lives over [0,1] with z1 -> sqrt(t) U1 and
// z2 -> sqrt(1-t) U2, so the t=0 fiber lies in C*(U2) and the t=1 fiber in
// C*(U1). The 4-sphere field is a double cone over that interval: on
// hemisphere +/- at cone height s the sphere generators scale by
// sqrt(1-s^2) and x goes to +/- s, which satisfies the radius relation
// identically.
#ifndef NCSPHERE_FIELD_HPP
#define NCSPHERE_FIELD_HPP

#include <functional>
#include <memory>
#include <vector>

#include "ncsphere/report.hpp"
#include "ncsphere/torus_rep.hpp"

namespace ncsphere {

inline std::vector<double> uniform_grid(int steps, double lo = 0.0, double hi = 1.0) {
  if (steps < 1) throw Error("uniform_grid: need at least one step");
  std::vector<double> g(steps + 1);
  for (int k = 0; k <= steps; ++k)
    g[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps);
  return g;
}

struct IntervalField {
  int q = 1;       // torus fiber dimension
  int blocks = 1;  // fiber matrices are (blocks*q) x (blocks*q)
  std::vector<double> grid;
  std::function<CMatrix(double)> fiber;

  int dim() const { return blocks * q; }
};

struct DoubleConeField {
  int q = 1, blocks = 1;
  std::vector<double> cone_grid;     // s in [0,1]: 0 equator, 1 pole
  std::vector<double> equator_grid;  // t along the equator 3-sphere interval
  std::function<CMatrix(int hemi, double s, double t)> fiber;  // hemi 0: x>=0, 1: x<=0

  int dim() const { return blocks * q; }
};

namespace detail {
struct S3Term {
  Cplx c;
  int t_half, omt_half;  // exponents of sqrt(t) and sqrt(1-t)
  CMatrix W;
};
struct S4Term {
  Cplx c;
  int z_half, t_half, omt_half, xpow;
  CMatrix W;
};
}  // namespace detail

inline IntervalField eval_s3(const AlgebraElement& a, const Rep& rep, int grid_steps) {
  if (a.pres()->family() != Family::OddSphere || a.pres()->m() != 2)
    throw Error("eval_s3: element must live in odd_sphere(2)");
  auto terms = std::make_shared<std::vector<detail::S3Term>>();
  Theta th = rep.theta();
  for (const auto& [mono, coeff] : a.terms()) {
    detail::S3Term t;
    t.c = coeff.eval(th);
    t.t_half = mono.e[0] + mono.e[1];
    t.omt_half = mono.e[2] + mono.e[3];
    t.W = weyl_matrix(rep, mono.e[0] - mono.e[1], mono.e[2] - mono.e[3]);
    terms->push_back(std::move(t));
  }
  IntervalField f;
  f.q = static_cast<int>(rep.q);
  f.blocks = 1;
  f.grid = uniform_grid(grid_steps);
  long long q = rep.q;
  f.fiber = [terms, q](double t) {
    CMatrix acc = CMatrix::Zero(q, q);
    for (const auto& tm : *terms) {
      double w = std::pow(t, 0.5 * tm.t_half) * std::pow(1.0 - t, 0.5 * tm.omt_half);
      if (w != 0.0) acc += (tm.c * w) * tm.W;
    }
    return acc;
  };
  return f;
}

inline DoubleConeField eval_s4(const AlgebraElement& a, const Rep& rep, int cone_steps,
                               int equator_steps) {
  if (a.pres()->family() != Family::EvenSphere || a.pres()->m() != 2)
    throw Error("eval_s4: element must live in even_sphere(2)");
  auto terms = std::make_shared<std::vector<detail::S4Term>>();
  Theta th = rep.theta();
  const Presentation& p = *a.pres();
  for (const auto& [mono, coeff] : a.terms()) {
    detail::S4Term t;
    t.c = coeff.eval(th);
    t.t_half = mono.e[0] + mono.e[1];
    t.omt_half = mono.e[2] + mono.e[3];
    t.z_half = t.t_half + t.omt_half;
    t.xpow = mono.e[p.central_slot()];
    t.W = weyl_matrix(rep, mono.e[0] - mono.e[1], mono.e[2] - mono.e[3]);
    terms->push_back(std::move(t));
  }
  DoubleConeField f;
  f.q = static_cast<int>(rep.q);
  f.blocks = 1;
  f.cone_grid = uniform_grid(cone_steps);
  f.equator_grid = uniform_grid(equator_steps);
  long long q = rep.q;
  f.fiber = [terms, q](int hemi, double s, double t) {
    CMatrix acc = CMatrix::Zero(q, q);
    double x = (hemi == 0 ? s : -s);
    double zscale = 1.0 - s * s;
    for (const auto& tm : *terms) {
      double w = std::pow(zscale, 0.5 * tm.z_half) * std::pow(t, 0.5 * tm.t_half) *
                 std::pow(1.0 - t, 0.5 * tm.omt_half);
      for (int r = 0; r < tm.xpow; ++r) w *= x;
      if (w != 0.0) acc += (tm.c * w) * tm.W;
    }
    return acc;
  };
  return f;
}

// Projection of a q x q block onto span{U1^a} (diagonal matrices in the
// clock eigenbasis) resp. span{U2^b} (circulants); the residual is the
// Frobenius mass outside the span. Equivalent to expanding in the
// orthogonal U1^a U2^b basis and dropping the disallowed coefficients.
inline double offspan_u1(const CMatrix& m) {
  CMatrix d = m;
  d.diagonal().setZero();
  return d.norm();
}
inline double offspan_u2(const CMatrix& m) {
  const auto q = m.rows();
  std::vector<Cplx> avg(q, Cplx(0, 0));
  for (Eigen::Index j = 0; j < q; ++j)
    for (Eigen::Index k = 0; k < q; ++k) avg[(j - k + q) % q] += m(j, k);
  for (auto& v : avg) v /= static_cast<double>(q);
  double acc = 0.0;
  for (Eigen::Index j = 0; j < q; ++j)
    for (Eigen::Index k = 0; k < q; ++k) {
      Cplx r = m(j, k) - avg[(j - k + q) % q];
      acc += std::norm(r);
    }
  return std::sqrt(acc);
}

// Blockwise span residual over an n x n block matrix of q x q fibers.
inline double offspan_blocks(const CMatrix& m, int blocks, int q, bool u1span) {
  double acc = 0.0;
  for (int bi = 0; bi < blocks; ++bi)
    for (int bj = 0; bj < blocks; ++bj) {
      CMatrix blk = m.block(bi * q, bj * q, q, q);
      double r = u1span ? offspan_u1(blk) : offspan_u2(blk);
      acc += r * r;
    }
  return std::sqrt(acc);
}

// Endpoint membership: the t=0 fiber must lie in (matrices over) C*(U2),
// the t=1 fiber in C*(U1).
inline Report boundary_check(const IntervalField& f, double tol = 1e-8) {
  Report rep;
  rep.title = "interval boundary membership";
  double r0 = offspan_blocks(f.fiber(0.0), f.blocks, f.q, false);
  double r1 = offspan_blocks(f.fiber(1.0), f.blocks, f.q, true);
  rep.add("t=0 fiber in span{U2^k}", r0 <= tol, r0);
  rep.add("t=1 fiber in span{U1^k}", r1 <= tol, r1);
  return rep;
}

inline double scalar_deviation(const CMatrix& m) {
  Cplx mean = m.trace() / static_cast<double>(m.rows());
  return (m - mean * CMatrix::Identity(m.rows(), m.cols())).norm();
}

// Double-cone structural invariants: seam agreement at s=0 and scalar,
// t-independent pole fibers at s=1.
inline Report cone_invariants_check(const DoubleConeField& f, double seam_tol = 1e-8,
                                    double pole_tol = 1e-8) {
  Report rep;
  rep.title = "double-cone invariants";
  double seam = 0.0, pole = 0.0, pole_var = 0.0;
  CMatrix pole_ref[2] = {f.fiber(0, 1.0, f.equator_grid.front()),
                         f.fiber(1, 1.0, f.equator_grid.front())};
  for (double t : f.equator_grid) {
    seam = std::max(seam, (f.fiber(0, 0.0, t) - f.fiber(1, 0.0, t)).norm());
    for (int h = 0; h < 2; ++h) {
      CMatrix pf = f.fiber(h, 1.0, t);
      pole = std::max(pole, scalar_deviation(pf));
      pole_var = std::max(pole_var, (pf - pole_ref[h]).norm());
    }
  }
  rep.add("equator seam agreement", seam <= seam_tol, seam);
  rep.add("pole fibers scalar", pole <= pole_tol, pole);
  rep.add("pole fibers constant along equator", pole_var <= pole_tol, pole_var);
  return rep;
}

}  // namespace ncsphere

#endif
