// Command-line surface over the toolkit:
//   ncsphere nf --algebra s3 "z2*z1"            canonical normal forms
//   ncsphere verify <suite>                      exact verification suites
//   ncsphere numeric <task> ...                  numeric experiments
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage/parameter error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "ncsphere/json_io.hpp"
#include "ncsphere/suites.hpp"

using namespace ncsphere;

namespace {

PresPtr algebra_by_name(const std::string& name, int m) {
  if (name == "s3" || name == "odd_sphere") return Presentation::odd_sphere(m);
  if (name == "s4" || name == "even_sphere") return Presentation::even_sphere(m);
  if (name == "ball") return Presentation::ball(m, true);
  if (name == "torus" || name == "t2") return Presentation::torus(m);
  throw Error("unknown algebra '" + name + "' (use s3, s4, ball, torus)");
}

struct RunReport {
  std::string command;
  Json params = Json::object();
  Report report;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int finish(const std::string& out_path) const {
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      std::cout << "  residual=" << c.residual;
      if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    bool ok = report.all_pass();
    std::cout << (ok ? "all checks passed" : "CHECK FAILURE") << "\n";
    if (!out_path.empty()) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      Json j{{"command", command},
             {"params", params},
             {"checks", to_json(report)["checks"]},
             {"elapsed_ms", ms}};
      std::ofstream f(out_path);
      if (!f) throw Error("cannot write report to " + out_path);
      f << j.dump(2) << "\n";
    }
    return ok ? 0 : 1;
  }
};

void write_json(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << j.dump(2) << "\n";
}

// theta resolution: --p/--q give the rational value directly; --theta-float
// picks the best convergent with denominator <= --q-max and echoes it.
struct ThetaFlags {
  long long p = 0, q = 0;
  double theta_float = 0.0;
  long long q_max = 200;

  void attach(CLI::App* cmd, bool required = true) {
    auto* po = cmd->add_option("--p", p, "theta numerator");
    auto* qo = cmd->add_option("--q", q, "theta denominator");
    auto* tf = cmd->add_option("--theta-float", theta_float,
                               "irrational theta; converted to a convergent");
    cmd->add_option("--q-max", q_max, "denominator bound for --theta-float");
    po->needs(qo);
    qo->needs(po);
    tf->excludes(po);
    if (required) {
      // one of the two forms must be present; checked in resolve()
    }
  }
  Theta resolve(Json& params) const {
    if (q > 0) {
      auto t = Theta::rational(p, q);
      params["p"] = t.p;
      params["q"] = t.q;
      return t;
    }
    if (theta_float > 0.0) {
      auto t = convergent_of(theta_float, q_max);
      params["theta_float"] = theta_float;
      params["convergent_p"] = t.p;
      params["convergent_q"] = t.q;
      std::cout << "using convergent " << t.p << "/" << t.q << " for theta=" << theta_float
                << "\n";
      return t;
    }
    throw Error("theta required: give --p/--q or --theta-float");
  }
};

int parse_loop_power(const std::string& loop) {
  if (loop == "W") return 0;  // marker handled by caller
  if (loop == "X") return 1;
  if (loop.rfind("X^", 0) == 0) return std::stoi(loop.substr(2));
  throw Error("unknown loop '" + loop + "' (use W, X or X^k)");
}

int cmd_nf(const std::string& algebra, int m, const std::string& expr) {
  auto pres = algebra_by_name(algebra, m);
  try {
    std::cout << to_string(parse_element(expr, pres)) << "\n";
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n  " << expr << "\n  "
              << std::string(std::min(e.pos, expr.size()), ' ') << "^\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted sphere/torus algebra toolkit"};
  app.require_subcommand(1);

  // ---- nf ----------------------------------------------------------------
  std::string nf_algebra = "s3", nf_expr;
  int nf_m = 2;
  auto* nf = app.add_subcommand("nf", "print the canonical normal form of an expression");
  nf->add_option("--algebra", nf_algebra, "s3 | s4 | ball | torus")->capture_default_str();
  nf->add_option("--m", nf_m, "number of z/w/U generators")->capture_default_str();
  nf->add_option("expr", nf_expr, "expression")->required();

  // ---- verify ------------------------------------------------------------
  std::string verify_suite, verify_out;
  long long vp = 3, vq = 8;
  auto* verify = app.add_subcommand("verify", "run an exact verification suite");
  verify->add_option("suite", verify_suite, "instanton | pullback | retractions | semigroup")
      ->required();
  verify->add_option("--out", verify_out, "write a JSON report");
  verify->add_option("--p", vp, "torus parameter for the retraction suite")
      ->capture_default_str();
  verify->add_option("--q", vq, "torus parameter for the retraction suite")
      ->capture_default_str();

  // ---- numeric -----------------------------------------------------------
  auto* numeric = app.add_subcommand("numeric", "numeric experiments and artifacts");
  numeric->require_subcommand(1);

  ThetaFlags rie_theta;
  double rie_eps = 0.0, rie_tol_proj = 1e-8, rie_tol_trace = 1e-6;
  std::string rie_out, rie_emit;
  auto* rie = numeric->add_subcommand("rieffel", "build a Rieffel projection");
  rie_theta.attach(rie);
  rie->add_option("--eps", rie_eps, "ramp width (default 0.2*min(theta,1-theta))");
  rie->add_option("--tol-proj", rie_tol_proj, "residual tolerance")->capture_default_str();
  rie->add_option("--tol-trace", rie_tol_trace, "trace tolerance")->capture_default_str();
  rie->add_option("--out", rie_out, "write a JSON report");
  rie->add_option("--emit-matrix", rie_emit, "write the projection matrix as JSON");

  ThetaFlags w_theta;
  std::string w_loop = "X", w_out;
  int w_grid = 4096, w_blocks = 1;
  double w_tol = 0.0, w_drift_tol = 1e-4;
  auto* wind = numeric->add_subcommand("winding", "tau-winding of a loop of invertibles");
  w_theta.attach(wind);
  wind->add_option("--loop", w_loop, "W, X or X^k")->capture_default_str();
  wind->add_option("--grid", w_grid, "number of loop steps")->capture_default_str();
  wind->add_option("--n", w_blocks, "embed as diag(loop, 1_{n-1})")->capture_default_str();
  wind->add_option("--tol", w_tol, "tolerance (default 2e-3 * max(1,|k|))");
  wind->add_option("--drift-tol", w_drift_tol, "grid-doubling drift tolerance")
      ->capture_default_str();
  wind->add_option("--out", w_out, "write a JSON report");

  ThetaFlags c_theta;
  int c_n = 1, c_s = 0, c_cone = 128, c_loop_grid = 1024, c_equator = 8, c_stride = 32;
  bool c_rational = false;
  std::string c_out, c_emit;
  auto* clutch = numeric->add_subcommand("clutch", "build a clutching idempotent");
  c_theta.attach(clutch);
  clutch->add_option("--n", c_n, "module rank")->capture_default_str();
  clutch->add_option("--s", c_s, "X-power index")->capture_default_str();
  clutch->add_option("--cone-grid", c_cone, "cone steps")->capture_default_str();
  clutch->add_option("--loop-grid", c_loop_grid, "equator loop steps")->capture_default_str();
  clutch->add_option("--equator-grid", c_equator, "equator steps of the checked field")
      ->capture_default_str();
  clutch->add_option("--idem-stride", c_stride, "cone stride between direct P^2-P checks")
      ->capture_default_str();
  clutch->add_flag("--rational", c_rational,
                   "classify over rational theta (rank-1 indices collapse)");
  clutch->add_option("--out", c_out, "write a JSON report");
  clutch->add_option("--emit-field", c_emit, "write the (decimated) projection field as JSON");

  ThetaFlags sp_theta;
  int sp_grid = 64;
  double sp_cov_tol = 0.1, sp_b_tol = 1e-8;
  std::string sp_out, sp_emit;
  auto* spec = numeric->add_subcommand("spectrum-c", "sample the spectrum of the lifted loop");
  sp_theta.attach(spec);
  spec->add_option("--grid", sp_grid, "grid size per axis")->capture_default_str();
  spec->add_option("--coverage-tol", sp_cov_tol, "disk coverage tolerance")
      ->capture_default_str();
  spec->add_option("--boundary-tol", sp_b_tol, "boundary slice tolerance")
      ->capture_default_str();
  spec->add_option("--out", sp_out, "write a JSON report");
  spec->add_option("--emit-points", sp_emit, "write the sample point set as JSON");

  int ch_s = 1, ch_grid = 1024;
  std::string ch_out;
  auto* chern = numeric->add_subcommand("chern", "classical winding of z -> z^s");
  chern->add_option("--s", ch_s, "power")->capture_default_str();
  chern->add_option("--grid", ch_grid, "circle steps")->capture_default_str();
  chern->add_option("--out", ch_out, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*nf) return cmd_nf(nf_algebra, nf_m, nf_expr);

    if (*verify) {
      RunReport run;
      run.command = "verify " + verify_suite;
      if (verify_suite == "instanton") {
        run.report = verify_instanton();
      } else if (verify_suite == "pullback") {
        run.report = verify_pullback();
      } else if (verify_suite == "retractions") {
        run.params["p"] = vp;
        run.params["q"] = vq;
        run.report = verify_retractions(clock_shift(vp, vq));
      } else if (verify_suite == "semigroup") {
        run.report = verify_semigroup();
      } else {
        throw Error("unknown suite '" + verify_suite + "'");
      }
      return run.finish(verify_out);
    }

    if (*rie) {
      RunReport run;
      run.command = "numeric rieffel";
      Theta th = rie_theta.resolve(run.params);
      auto rep = clock_shift(th.p, th.q);
      RieffelParams params = rie_eps > 0.0 ? RieffelParams(rie_eps)
                                           : RieffelParams::standard(th);
      run.params["eps"] = params.eps;
      auto res = rieffel_projection(rep, params);
      run.report.title = "rieffel projection";
      run.report.add("||P^2 - P|| <= tol", res.idem_residual <= rie_tol_proj,
                     res.idem_residual);
      run.report.add("||P* - P|| <= tol", res.herm_residual <= rie_tol_proj,
                     res.herm_residual);
      double tdev = std::abs(res.trace_over_q - th.value());
      run.report.add("|trace/q - theta| <= tol", tdev <= rie_tol_trace, tdev);
      std::cout << "trace/q = " << res.trace_over_q << "\n";
      if (!rie_emit.empty()) write_json(rie_emit, to_json(res.P));
      return run.finish(rie_out);
    }

    if (*wind) {
      RunReport run;
      run.command = "numeric winding";
      Theta th = w_theta.resolve(run.params);
      auto rep = clock_shift(th.p, th.q);
      run.params["loop"] = w_loop;
      run.params["grid"] = w_grid;
      run.params["n"] = w_blocks;

      IntervalField loop;
      double expected;
      if (w_loop == "W") {
        loop.q = static_cast<int>(rep.q);
        loop.blocks = 1;
        loop.grid = uniform_grid(w_grid);
        long long q = rep.q;
        loop.fiber = [q](double t) {
          const double tau = 2.0 * 3.14159265358979323846;
          return CMatrix(Cplx(std::cos(tau * t), std::sin(tau * t)) *
                         CMatrix::Identity(q, q));
        };
        expected = 1.0;
      } else {
        int s = parse_loop_power(w_loop);
        auto d = make_x_datum(rep, th, 1, s, w_grid);
        loop = d.loop;
        expected = s * th.value();
        if (w_tol <= 0.0) w_tol = 2e-3 * std::max(1, std::abs(s));
      }
      if (w_tol <= 0.0) w_tol = 2e-3;
      if (w_blocks > 1) {
        auto base = loop.fiber;
        int q = loop.q, nl = loop.blocks, n = w_blocks;
        loop.blocks = n;
        loop.fiber = [base, q, nl, n](double t) {
          CMatrix m = CMatrix::Identity(n * q, n * q);
          m.block(0, 0, nl * q, nl * q) = base(t);
          return m;
        };
      }
      auto res = winding(loop);
      std::cout << "winding = " << res.value << "  (expected " << expected << ")\n"
                << "min sigma = " << res.min_sigma << ", max condition = " << res.max_condition
                << "\n";
      run.params["expected"] = expected;
      run.report.title = "tau-winding";
      run.report.add("|winding - expected| <= tol", std::abs(res.value - expected) <= w_tol,
                     std::abs(res.value - expected));
      if (w_grid % 2 == 0)
        run.report.add("grid-doubling drift <= tol", res.residual_estimate <= w_drift_tol,
                       res.residual_estimate);
      return run.finish(w_out);
    }

    if (*clutch) {
      RunReport run;
      run.command = "numeric clutch";
      Theta conv = c_theta.resolve(run.params);
      auto rep = clock_shift(conv.p, conv.q);
      // p/q is the computation's convergent; the declared kind decides how
      // classes normalize. Without --rational the value is treated as an
      // approximant of an irrational theta, which keeps rank-1 indices.
      Theta declared = c_rational ? conv : Theta::irrational(conv.value());
      run.params["n"] = c_n;
      run.params["s"] = c_s;
      run.params["cone_grid"] = c_cone;
      run.params["loop_grid"] = c_loop_grid;
      run.params["kind"] = c_rational ? "rational" : "irrational";

      auto d = make_x_datum(rep, declared, c_n, c_s, c_loop_grid);
      ClutchOptions opts;
      opts.equator_steps = c_equator;
      opts.idem_stride = c_stride;
      auto built = build_idempotent(d, c_cone, opts);
      run.report = built.report;
      auto inv = recover_invariants(built, d);
      auto expect = make_class(kind_of(declared), c_n, c_s);
      bool match = inv.n == expect.n && inv.s == expect.s;
      run.report.add("recovered invariants = " + to_string(expect), match,
                     match ? 0.0 : 1.0,
                     "got (" + std::to_string(inv.n) + "," + std::to_string(inv.s) + ")");
      std::cout << "recovered (n,s) = (" << inv.n << "," << inv.s << ")"
                << ", raw winding = " << inv.raw_winding << "\n";
      if (!c_emit.empty()) {
        Json jf = to_json(built.field);
        jf["n"] = c_n;
        jf["provenance"] = d.provenance;
        jf["theta"] = declared.value();
        write_json(c_emit, jf);
      }
      return run.finish(c_out);
    }

    if (*spec) {
      RunReport run;
      run.command = "numeric spectrum-c";
      Theta th = sp_theta.resolve(run.params);
      auto rep = clock_shift(th.p, th.q);
      run.params["grid"] = sp_grid;
      auto res = spectrum_c(rep, sp_grid, sp_cov_tol, sp_b_tol);
      run.report = res.report;
      std::cout << "coverage gap = " << res.coverage_gap
                << ", boundary gap = " << res.boundary_gap << "\n";
      if (!sp_emit.empty()) {
        Json pts = Json::array();
        for (const auto& z : res.samples) pts.push_back(Json::array({z.real(), z.imag()}));
        write_json(sp_emit, Json{{"points", std::move(pts)}});
      }
      return run.finish(sp_out);
    }

    if (*chern) {
      RunReport run;
      run.command = "numeric chern";
      run.params["s"] = ch_s;
      run.params["grid"] = ch_grid;
      long long got = classical_chern(ch_s, ch_grid);
      run.report.title = "classical winding";
      run.report.add("winding(z^s) = s", got == ch_s,
                     static_cast<double>(std::abs(got - ch_s)));
      std::cout << "winding = " << got << "\n";
      return run.finish(ch_out);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
