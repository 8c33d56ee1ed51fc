// Spectrum sampling for the lifted loop element and the two deformation
// retractions that are checked numerically.
#ifndef NCSPHERE_SPECTRAL_HPP
#define NCSPHERE_SPECTRAL_HPP

#include <algorithm>
#include <limits>
#include <vector>

#include "ncsphere/field.hpp"
#include "ncsphere/parser.hpp"

namespace ncsphere {

struct SpectrumResult {
  std::vector<Cplx> samples;   // all eigenvalue samples over the (u,t) grid
  double coverage_gap = 0.0;   // max over a disk mesh of nearest-sample distance
  double boundary_gap = 0.0;   // u=0 slice: worst distance to the target circle point
  Report report;
};

namespace detail {

// Max over the closed-unit-disk mesh of the distance to the nearest sample,
// accelerated with a coarse occupancy grid.
inline double disk_coverage_gap(const std::vector<Cplx>& samples, double mesh_step = 0.02) {
  const double pi = 3.14159265358979323846;
  const int cells = 64;
  const double lo = -1.1, hi = 1.1, cw = (hi - lo) / cells;
  std::vector<std::vector<Cplx>> bucket(cells * cells);
  auto cell_of = [&](const Cplx& z) {
    int cx = std::clamp(static_cast<int>((z.real() - lo) / cw), 0, cells - 1);
    int cy = std::clamp(static_cast<int>((z.imag() - lo) / cw), 0, cells - 1);
    return cy * cells + cx;
  };
  for (const auto& z : samples) bucket[cell_of(z)].push_back(z);

  auto nearest = [&](const Cplx& z) {
    int cx = std::clamp(static_cast<int>((z.real() - lo) / cw), 0, cells - 1);
    int cy = std::clamp(static_cast<int>((z.imag() - lo) / cw), 0, cells - 1);
    double best = std::numeric_limits<double>::infinity();
    for (int ring = 0; ring < cells; ++ring) {
      // Cells at Chebyshev distance `ring` can still contain a closer point
      // only if (ring-1)*cw < best.
      if (ring > 0 && (ring - 1) * cw >= best) break;
      for (int dy = -ring; dy <= ring; ++dy) {
        for (int dx = -ring; dx <= ring; ++dx) {
          if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
          int x = cx + dx, y = cy + dy;
          if (x < 0 || y < 0 || x >= cells || y >= cells) continue;
          for (const auto& w : bucket[y * cells + x])
            best = std::min(best, std::abs(z - w));
        }
      }
    }
    return best;
  };

  double gap = 0.0;
  int rings = static_cast<int>(std::ceil(1.0 / mesh_step));
  for (int ri = 0; ri <= rings; ++ri) {
    double r = static_cast<double>(ri) / rings;
    int npts = std::max(1, static_cast<int>(std::ceil(2.0 * pi * r / mesh_step)));
    for (int k = 0; k < npts; ++k) {
      double a = 2.0 * pi * k / npts;
      gap = std::max(gap, nearest(Cplx(r * std::cos(a), r * std::sin(a))));
    }
  }
  return gap;
}

}  // namespace detail

// Samples the spectrum of c(u,t) = exp(2 pi i t)(1-u)P + (1 - (1-u)P) over
// an N x N grid in (u,t); P is the Rieffel projection. For a nontrivial
// projection the u=0 slice reaches the whole boundary circle and the chords
// from 1 sweep out the closed unit disk.
inline SpectrumResult spectrum_c(const Rep& rep, int grid_n, double coverage_tol = 0.1,
                                 double boundary_tol = 1e-8) {
  if (grid_n < 2) throw Error("spectrum_c: grid too small");
  const double tau = 2.0 * 3.14159265358979323846;
  auto pr = rieffel_projection(rep, RieffelParams::standard(rep.theta()));
  const CMatrix& P = pr.P;
  const auto q = P.rows();
  const CMatrix I = CMatrix::Identity(q, q);

  SpectrumResult out;
  out.samples.reserve(static_cast<std::size_t>(grid_n) * grid_n * q);
  double boundary_gap = 0.0, top_gap = 0.0;
  for (int iu = 0; iu < grid_n; ++iu) {
    double u = static_cast<double>(iu) / (grid_n - 1);
    for (int it = 0; it < grid_n; ++it) {
      double t = static_cast<double>(it) / (grid_n - 1);
      Cplx w(std::cos(tau * t), std::sin(tau * t));
      CMatrix c = I + (1.0 - u) * (w - 1.0) * P;
      Eigen::ComplexEigenSolver<CMatrix> es(c, false);
      if (es.info() != Eigen::Success) throw Error("spectrum_c: eigensolver failed");
      double best = std::numeric_limits<double>::infinity();
      double best_one = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < q; ++i) {
        Cplx lam = es.eigenvalues()(i);
        out.samples.push_back(lam);
        best = std::min(best, std::abs(lam - w));
        best_one = std::min(best_one, std::abs(lam - Cplx(1, 0)));
      }
      if (iu == 0) boundary_gap = std::max(boundary_gap, best);
      if (iu == grid_n - 1) top_gap = std::max(top_gap, best_one);
    }
  }
  out.boundary_gap = boundary_gap;
  out.coverage_gap = detail::disk_coverage_gap(out.samples);
  out.report.title = "spectrum of the lifted loop element";
  out.report.add("disk coverage gap <= " + std::to_string(coverage_tol),
                 out.coverage_gap <= coverage_tol, out.coverage_gap);
  out.report.add("u=0 slice reaches the boundary circle", boundary_gap <= boundary_tol,
                 boundary_gap);
  out.report.add("u=1 slice collapses to {1}", top_gap <= boundary_tol, top_gap);
  return out;
}

// Prop-4.1-style retraction of the ball onto the scalars:
//   F_t(w_k) = (1-t) w_k,  F_t(y) = sqrt(1 - (1-t)^2 sum w_k w_k*),
// verified fiber-wise on the cone model of the ball (the y fibers are
// scalar, so the square root is the scalar one).
inline Report retraction_ball_to_scalars(const Rep& rep, int retraction_steps = 8,
                                         int cone_steps = 8, int equator_steps = 16,
                                         double tol = 1e-10) {
  Report rep_out;
  rep_out.title = "ball retracts onto scalars";
  const auto q = rep.q;
  const CMatrix I = CMatrix::Identity(q, q);
  const double tau = 2.0 * 3.14159265358979323846;
  Cplx rho(std::cos(tau * rep.p / rep.q), std::sin(tau * rep.p / rep.q));

  double radius_res = 0.0, exchange_res = 0.0, endpoint_res = 0.0;
  for (double t : uniform_grid(retraction_steps)) {
    for (double s : uniform_grid(cone_steps)) {
      for (double te : uniform_grid(equator_steps)) {
        double zscale = std::sqrt(std::max(0.0, 1.0 - s * s));
        CMatrix w1 = (1.0 - t) * zscale * std::sqrt(te) * rep.U1;
        CMatrix w2 = (1.0 - t) * zscale * std::sqrt(1.0 - te) * rep.U2;
        double sumsq = std::pow((1.0 - t) * zscale, 2);
        CMatrix y = std::sqrt(std::max(0.0, 1.0 - sumsq)) * I;
        CMatrix radius = w1 * w1.adjoint() + w2 * w2.adjoint() + y * y - I;
        radius_res = std::max(radius_res, radius.norm());
        exchange_res = std::max(exchange_res, (w2 * w1 - rho * (w1 * w2)).norm());
        if (t == 1.0) {
          endpoint_res = std::max(endpoint_res, w1.norm() + w2.norm());
          endpoint_res = std::max(endpoint_res, (y - I).norm());
        }
      }
    }
  }
  rep_out.add("radius relation along the retraction", radius_res <= tol, radius_res);
  rep_out.add("exchange relation along the retraction", exchange_res <= tol, exchange_res);
  rep_out.add("t=1 images are scalars (w->0, y->1)", endpoint_res <= tol, endpoint_res);
  return rep_out;
}

// Prop-3.3-style retraction of the solid-torus half [1/2,1] onto constant
// C*(U1)-valued functions, via f_t(s) = f((1-t)s + t).
inline Report retraction_solid_torus_to_circle(const Rep& rep, int retraction_steps = 8,
                                               int tube_steps = 16, double span_tol = 1e-8,
                                               double exact_tol = 1e-12) {
  Report out;
  out.title = "solid torus retracts onto the circle";
  auto s3 = Presentation::odd_sphere(2);
  std::vector<AlgebraElement> samples = {
      parse_element("z1", s3), parse_element("z2", s3),
      parse_element("z1 + z2*z1'", s3), parse_element("z1^2 + rho*z2'", s3)};

  double fixed_res = 0.0, const_res = 0.0, span_res = 0.0;
  for (const auto& a : samples) {
    auto field = eval_s3(a, rep, 2);  // evaluator only; we sample arbitrary points
    auto F = [&](double s) { return field.fiber(s); };
    CMatrix end = F(1.0);
    for (double t : uniform_grid(retraction_steps)) {
      auto ft = [&](double s) { return F((1.0 - t) * s + t); };
      fixed_res = std::max(fixed_res, (ft(1.0) - end).norm());
      if (t == 1.0)
        for (double s : uniform_grid(tube_steps, 0.5, 1.0))
          const_res = std::max(const_res, (ft(s) - end).norm());
    }
    span_res = std::max(span_res, offspan_u1(end));
  }
  out.add("t=1 tube boundary is fixed", fixed_res <= exact_tol, fixed_res);
  out.add("retraction end is a constant function", const_res <= exact_tol, const_res);
  out.add("retraction end lands in span{U1^k}", span_res <= span_tol, span_res);
  return out;
}

}  // namespace ncsphere

#endif
