// Clutching idempotents over the double cone via the Whitehead doubling: an
// invertible equator loop h lifts to L(sigma) = (h+1) R(sigma) (h^{-1}+1)
// R(sigma)^{-1} with R the block rotation by pi*sigma/2; the projection
// field is P = L (1+0) L^{-1} on one hemisphere and the constant 1+0 on the
// other. The loop's class data is recovered from the fiber trace (rank) and
// the tau-winding of the loop (index; X-power provenance only).
//
// All per-cone-fiber blocks are scalar combinations of per-equator-point
// products of {h, h^{-1}}, so building is quadratic per fiber; the cubic
// P^2 - P check runs on the extreme fibers plus a configurable subsample,
// while a per-fiber residual bound ||Lcol|| ||m - 1|| ||L^{-1}row|| (with
// m = (L^{-1} L)_{11}) covers every grid fiber cheaply.
#ifndef NCSPHERE_CLUTCHING_HPP
#define NCSPHERE_CLUTCHING_HPP

#include <map>
#include <memory>

#include "ncsphere/instanton.hpp"
#include "ncsphere/module_class.hpp"
#include "ncsphere/winding.hpp"

namespace ncsphere {

enum class LoopKind { XPower, HGenerator, Custom };

struct ClutchingDatum {
  int n = 1;     // module rank; the loop embeds as diag(loop, 1_{n - blocks})
  LoopKind kind = LoopKind::Custom;
  int s = 0;     // X exponent (XPower provenance only)
  Theta theta = Theta::rational(1, 2);
  IntervalField loop;
  std::string provenance;
};

inline ClutchingDatum make_x_datum(const Rep& rep, const Theta& theta, int n, int s,
                                   int loop_grid = 1024) {
  if (n < 1) throw Error("make_x_datum: need n >= 1");
  auto pr = rieffel_projection(rep, RieffelParams::standard(rep.theta()));
  auto P = std::make_shared<CMatrix>(pr.P);
  ClutchingDatum d;
  d.n = n;
  d.kind = LoopKind::XPower;
  d.s = s;
  d.theta = theta;
  d.provenance = "X^" + std::to_string(s);
  d.loop.q = static_cast<int>(rep.q);
  d.loop.blocks = 1;
  d.loop.grid = uniform_grid(loop_grid);
  d.loop.fiber = [P, s](double t) {
    const double tau = 2.0 * 3.14159265358979323846;
    Cplx w(std::cos(tau * s * t), std::sin(tau * s * t));
    return CMatrix((w - 1.0) * (*P) + CMatrix::Identity(P->rows(), P->cols()));
  };
  return d;
}

inline ClutchingDatum make_h_datum(const Rep& rep, const Theta& theta, int loop_grid = 256) {
  auto h = builtin_h_expected();
  auto e00 = std::make_shared<IntervalField>(eval_s3(h.at(0, 0), rep, 2));
  auto e01 = std::make_shared<IntervalField>(eval_s3(h.at(0, 1), rep, 2));
  auto e10 = std::make_shared<IntervalField>(eval_s3(h.at(1, 0), rep, 2));
  auto e11 = std::make_shared<IntervalField>(eval_s3(h.at(1, 1), rep, 2));
  ClutchingDatum d;
  d.n = 2;
  d.kind = LoopKind::HGenerator;
  d.theta = theta;
  d.provenance = "h_expected";
  d.loop.q = static_cast<int>(rep.q);
  d.loop.blocks = 2;
  d.loop.grid = uniform_grid(loop_grid);
  long long q = rep.q;
  d.loop.fiber = [e00, e01, e10, e11, q](double t) {
    CMatrix m(2 * q, 2 * q);
    m.block(0, 0, q, q) = e00->fiber(t);
    m.block(0, q, q, q) = e01->fiber(t);
    m.block(q, 0, q, q) = e10->fiber(t);
    m.block(q, q, q, q) = e11->fiber(t);
    return m;
  };
  return d;
}

namespace detail {

// Products of the core loop fiber needed by the block formulas, one set per
// equator point.
struct EquatorCache {
  CMatrix h, hi, k, kk, khi, hk, kh, h2, hik, hi2, hih;
  double norm_h, norm_hi;
};

inline EquatorCache equator_cache(const CMatrix& h) {
  EquatorCache c;
  c.h = h;
  Eigen::PartialPivLU<CMatrix> lu(h);
  auto sig = ncsphere::detail::sigma_estimates(h, lu);
  if (!(sig.smin > 1e-12 * std::max(1.0, sig.smax)))
    throw Error("build_idempotent: singular equator fiber during inversion");
  c.hi = lu.solve(CMatrix::Identity(h.rows(), h.cols()));
  c.k = c.h * c.hi;
  c.kk = c.k * c.k;
  c.khi = c.k * c.hi;
  c.hk = c.h * c.k;
  c.kh = c.k * c.h;
  c.h2 = c.h * c.h;
  c.hik = c.hi * c.k;
  c.hi2 = c.hi * c.hi;
  c.hih = c.hi * c.h;
  c.norm_h = h.norm();
  c.norm_hi = c.hi.norm();
  return c;
}

struct ConeBlocks {
  CMatrix p11, p12, p21, p22;  // core blocks of the idempotent
  CMatrix m;                   // (L^{-1} L)_{11} core block
  double lcol_bound, lrow_bound;
};

inline ConeBlocks cone_blocks(const EquatorCache& e, double sigma) {
  const double pi = 3.14159265358979323846;
  double cth = std::cos(0.5 * pi * sigma), sth = std::sin(0.5 * pi * sigma);
  double c2 = cth * cth, s2 = sth * sth, cs = cth * sth;
  const Eigen::Index d = e.h.rows();
  CMatrix I = CMatrix::Identity(d, d);
  ConeBlocks b;
  b.p11 = c2 * c2 * e.kk + c2 * s2 * (e.khi + e.hk) + s2 * s2 * e.k;
  b.p12 = cs * (c2 * e.kh - c2 * e.k + s2 * e.h2 - s2 * e.h);
  b.p21 = cs * (c2 * e.hik + s2 * e.hi2 - c2 * e.k - s2 * e.hi);
  b.p22 = cs * cs * (e.hih - e.hi - e.h + I);
  b.m = c2 * c2 * e.kk + c2 * s2 * (e.kh + e.hik + e.k - e.h - e.hi + I) + s2 * s2 * e.hih;
  // Frobenius bounds on the column/row halves of L and L^{-1}.
  double l11 = (c2 * e.k + s2 * e.h).norm(), l21 = std::abs(cs) * (e.hi - I).norm();
  double li11 = (c2 * e.k + s2 * e.hi).norm(), li12 = std::abs(cs) * (e.h - I).norm();
  b.lcol_bound = std::sqrt(l11 * l11 + l21 * l21);
  b.lrow_bound = std::sqrt(li11 * li11 + li12 * li12);
  return b;
}

// Assembles the full 2nq idempotent fiber from core blocks (the embedded
// identity tail contributes the constant 1(tail)+0 part).
inline CMatrix assemble_fiber(const ConeBlocks& b, int n, int q, int core_blocks) {
  const int half = n * q, core = core_blocks * q, tail = half - core;
  CMatrix P = CMatrix::Zero(2 * half, 2 * half);
  P.block(0, 0, core, core) = b.p11;
  if (tail > 0) P.block(core, core, tail, tail) = CMatrix::Identity(tail, tail);
  P.block(0, half, core, core) = b.p12;
  P.block(half, 0, core, core) = b.p21;
  P.block(half, half, core, core) = b.p22;
  return P;
}

}  // namespace detail

struct ClutchOptions {
  int equator_steps = 8;
  int idem_stride = 32;       // cone stride between direct P^2 - P checks
  double tol_idem = 1e-6;
  double tol_seam = 1e-8;
  double tol_pole = 1e-10;
  double tol_trace = 1e-6;
  int stored_cone_points = 5;     // declared grid of the returned field
  int stored_equator_points = 5;
};

struct ClutchResult {
  DoubleConeField field;  // lazy; declared grids are decimated for export
  Report report;
  double mean_trace_over_q = 0.0;
  int cone_steps = 0;
};

inline ClutchResult build_idempotent(const ClutchingDatum& d, int cone_steps,
                                     ClutchOptions opts = {}) {
  if (d.loop.blocks > d.n) throw Error("build_idempotent: loop blocks exceed rank n");
  const int q = d.loop.q, nl = d.loop.blocks, n = d.n;
  const int dim = 2 * n * q;

  // Per-equator-point caches are shared by the verification sweep and the
  // returned lazy field.
  auto cache = std::make_shared<std::map<double, detail::EquatorCache>>();
  auto loop_fiber = d.loop.fiber;
  auto cache_at = [cache, loop_fiber](double t) -> const detail::EquatorCache& {
    auto it = cache->find(t);
    if (it == cache->end()) it = cache->emplace(t, detail::equator_cache(loop_fiber(t))).first;
    return it->second;
  };

  Report rep;
  rep.title = "clutching idempotent (" + d.provenance + ")";
  auto cone = uniform_grid(cone_steps);
  auto equator = uniform_grid(opts.equator_steps);

  CMatrix E = CMatrix::Zero(dim, dim);
  E.block(0, 0, n * q, n * q) = CMatrix::Identity(n * q, n * q);

  double max_bound = 0.0, max_idem = 0.0, max_seam = 0.0, max_pole = 0.0, max_trace_dev = 0.0;
  double trace_acc = 0.0;
  long trace_count = 0;
  int direct_checks = 0;
  for (double t : equator) {
    const auto& ec = cache_at(t);
    for (int si = 0; si < static_cast<int>(cone.size()); ++si) {
      double s = cone[si];
      auto blocks = detail::cone_blocks(ec, 1.0 - s);
      // Residual bound valid on every fiber: P^2 - P = Lcol (m - 1) Lrow.
      double mres = (blocks.m - CMatrix::Identity(nl * q, nl * q)).norm();
      max_bound = std::max(max_bound, blocks.lcol_bound * mres * blocks.lrow_bound);
      double tr = std::real(blocks.p11.trace() + blocks.p22.trace()) +
                  static_cast<double>((n - nl) * q);
      trace_acc += tr / q;
      ++trace_count;
      max_trace_dev = std::max(max_trace_dev, std::abs(tr / q - n));

      bool extreme = (si == 0) || (si + 1 == static_cast<int>(cone.size()));
      bool sampled = (opts.idem_stride > 0) && (si % opts.idem_stride == 0);
      if (extreme || sampled) {
        CMatrix P = detail::assemble_fiber(blocks, n, q, nl);
        max_idem = std::max(max_idem, (P * P - P).norm());
        ++direct_checks;
        if (si == 0) max_seam = std::max(max_seam, (P - E).norm());
        if (si + 1 == static_cast<int>(cone.size()))
          max_pole = std::max(max_pole, (P - E).norm());
      }
    }
  }

  rep.add("projection residual bound (all fibers)", max_bound <= opts.tol_idem, max_bound);
  rep.add("projection residual (direct, " + std::to_string(direct_checks) + " fibers)",
          max_idem <= opts.tol_idem, max_idem);
  rep.add("equator seam agreement", max_seam <= opts.tol_seam, max_seam);
  rep.add("pole fibers equal 1+0", max_pole <= opts.tol_pole, max_pole);
  rep.add("fiber trace / q = n", max_trace_dev <= opts.tol_trace, max_trace_dev);

  ClutchResult out;
  out.report = std::move(rep);
  out.mean_trace_over_q = trace_acc / trace_count;
  out.cone_steps = cone_steps;
  out.field.q = q;
  out.field.blocks = 2 * n;
  out.field.cone_grid = uniform_grid(opts.stored_cone_points - 1);
  out.field.equator_grid = uniform_grid(opts.stored_equator_points - 1);
  out.field.fiber = [cache_at, n, q, nl, dim, E](int hemi, double s, double t) {
    if (hemi == 1) return E;
    auto blocks = detail::cone_blocks(cache_at(t), 1.0 - s);
    return detail::assemble_fiber(blocks, n, q, nl);
  };
  return out;
}

// The rotation-path family itself, for invertibility (homotopy) checks.
inline std::function<CMatrix(double, double)> whitehead_family(const ClutchingDatum& d) {
  auto loop_fiber = d.loop.fiber;
  const int q = d.loop.q, nl = d.loop.blocks;
  return [loop_fiber, q, nl](double sigma, double t) {
    auto ec = detail::equator_cache(loop_fiber(t));
    const double pi = 3.14159265358979323846;
    double c = std::cos(0.5 * pi * sigma), s = std::sin(0.5 * pi * sigma);
    double c2 = c * c, s2 = s * s, cs = c * s;
    const Eigen::Index dd = nl * q;
    CMatrix I = CMatrix::Identity(dd, dd);
    CMatrix L(2 * dd, 2 * dd);
    L.block(0, 0, dd, dd) = c2 * ec.k + s2 * ec.h;
    L.block(0, dd, dd, dd) = cs * (ec.k - ec.h);
    L.block(dd, 0, dd, dd) = cs * (ec.hi - I);
    L.block(dd, dd, dd, dd) = c2 * I + s2 * ec.hi;
    return L;
  };
}

struct RecoveredInvariants {
  long long n = 0, s = 0;
  ModuleClass cls;
  double raw_winding = 0.0;
  double raw_trace = 0.0;
};

// rank = rounded mean fiber trace / q; index = rounded winding(loop)/theta
// (X-power provenance only); the pair is normalized through make_class, so
// rank-1 rational classes collapse to index 0.
inline RecoveredInvariants recover_invariants(const ClutchResult& built,
                                              const ClutchingDatum& d) {
  RecoveredInvariants out;
  out.raw_trace = built.mean_trace_over_q;
  double nr = std::round(out.raw_trace);
  if (std::abs(out.raw_trace - nr) > 0.2)
    throw Error("recover_invariants: ambiguous rank rounding");
  out.n = static_cast<long long>(nr);

  double s_raw = 0.0;
  if (d.kind == LoopKind::XPower) {
    out.raw_winding = winding(d.loop).value;
    s_raw = out.raw_winding / d.theta.value();
  } else {
    throw Error(
        "recover_invariants: no numeric index without X-power provenance "
        "(the tau-winding of a non-loop generator path is not well-defined)");
  }
  double sr = std::round(s_raw);
  if (std::abs(s_raw - sr) > 0.2)
    throw Error("recover_invariants: ambiguous index rounding");
  out.s = static_cast<long long>(sr);
  out.cls = make_class(kind_of(d.theta), out.n, out.s);
  out.n = out.cls.n;
  out.s = out.cls.s;
  return out;
}

// Winding of z -> z^s over the unit circle by the same log-increment rule,
// in the 1x1 commutative case. Exact integer after rounding; the associated
// line bundle's Chern number is -s under the standard orientation.
inline long long classical_chern(int s, int grid_steps) {
  if (grid_steps < 256) throw Error("classical_chern: grid must be >= 256");
  IntervalField f;
  f.q = 1;
  f.blocks = 1;
  f.grid = uniform_grid(grid_steps);
  f.fiber = [s](double t) {
    const double tau = 2.0 * 3.14159265358979323846;
    CMatrix m(1, 1);
    m(0, 0) = Cplx(std::cos(tau * s * t), std::sin(tau * s * t));
    return m;
  };
  double w = winding(f).value;
  double r = std::round(w);
  if (std::abs(w - r) > 1e-6) throw Error("classical_chern: non-integer winding");
  return static_cast<long long>(r);
}

}  // namespace ncsphere

#endif
