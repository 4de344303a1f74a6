// dslab: batch front end. Named check suites, parameterized geodesic and
// constrained-curve runs, Komar mass quadratures, Killing-determinant grids,
// and the exact algebra report. JSON lines for checks, plain CSV for grids
// and trajectories.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dslab/chart.hpp"
#include "dslab/desitter.hpp"
#include "dslab/dynamics.hpp"
#include "dslab/komar.hpp"
#include "dslab/report.hpp"
#include "dslab/so14.hpp"
#include "dslab/suites.hpp"

namespace {

using namespace dslab;

int run_verify(const suites::Options& opt, const std::vector<std::string>& names,
               bool timings) {
  SuiteRunner runner;
  for (const auto& n : names)
    runner.add(n, [n, opt]() { return suites::run_suite(n, opt); });
  auto reports = runner.run();
  bool any_fail = false;
  for (const auto& r : reports) {
    std::printf("%s\n", r.to_json(timings).c_str());
    if (r.status == CheckStatus::Fail) any_fail = true;
  }
  return any_fail ? 1 : 0;
}

int run_det_map(double ell, double tmin, double tmax, double xmin, double xmax, int nt,
                int nx, const std::string& out_path) {
  if (nt < 2 || nx < 2 || tmax <= tmin || xmax <= xmin) {
    std::fprintf(stderr, "det-map: empty or inverted grid bounds\n");
    return 2;
  }
  DeSitterModel ds(ell);
  std::ofstream out(out_path);
  if (!out) {
    std::fprintf(stderr, "det-map: cannot open %s\n", out_path.c_str());
    return 2;
  }
  out << "t,x1,det,closed\n";
  char buf[160];
  for (int i = 0; i < nt; ++i) {
    double t = tmin + (tmax - tmin) * i / (nt - 1);
    for (int j = 0; j < nx; ++j) {
      double x1 = xmin + (xmax - xmin) * j / (nx - 1);
      Vec4 x{t, x1, 0, 0};
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", t, x1,
                    ds.killing_det(x), ds.killing_det_closed(x));
      out << buf;
    }
  }
  return 0;
}

void write_trajectory_csv(const std::string& path, const Trajectory& tr,
                          const std::vector<double>* separation) {
  std::ofstream out(path);
  out << "s,x0,x1,x2,x3,u0,u1,u2,u3,norm,C_0,C_1,C_2,C_3,separation\n";
  char buf[512];
  for (size_t i = 0; i < tr.samples.size(); ++i) {
    const auto& s = tr.samples[i];
    double sep = (separation && i < separation->size()) ? (*separation)[i] : 0.0;
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g,%.17g\n",
                  s.s, s.x[0], s.x[1], s.x[2], s.x[3], s.u[0], s.u[1], s.u[2], s.u[3],
                  s.norm, s.charges[0], s.charges[1], s.charges[2], s.charges[3], sep);
    out << buf;
  }
}

int run_trajectory(const std::string& chart_name, double ell, bool interior, double mass,
                   const std::vector<double>& x0v, const std::vector<double>& u0v,
                   double h, double smax, int log_every, bool compare_constrained,
                   const std::string& out_prefix) {
  Vec4 x0{x0v[0], x0v[1], x0v[2], x0v[3]};
  Vec4 u0{u0v[0], u0v[1], u0v[2], u0v[3]};
  IntegratorConfig cfg;
  cfg.h = h;
  cfg.s_max = smax;
  cfg.log_every = log_every;
  DeSitterModel ds(ell, interior);
  Chart chart = chart_by_name(chart_name, ell, mass, interior);
  const DeSitterModel* dsp =
      (chart_name == "desitter" || chart_name == "desitter-conformal") ? &ds : nullptr;
  Trajectory tr;
  try {
    tr = geodesic_integrate(dsp ? ds.chart : chart, x0, u0, cfg, dsp);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "geodesic: %s\n", e.what());
    return 2;
  }
  write_trajectory_csv(out_prefix + "_geodesic.csv", tr, nullptr);
  double norm_drift = 0.0, charge_drift = 0.0;
  for (const auto& s : tr.samples) {
    norm_drift = std::max(norm_drift, std::fabs(s.norm - tr.samples.front().norm));
    for (int a = 0; a < 4; ++a)
      charge_drift = std::max(
          charge_drift, std::fabs(s.charges[a] - tr.samples.front().charges[a]));
  }
  double final_sep = 0.0;
  if (compare_constrained) {
    if (!dsp) {
      std::fprintf(stderr, "constrained comparison needs the de Sitter chart\n");
      return 2;
    }
    ConstrainedRun cr = constrained_curve_integrate(ds, x0, u0, cfg);
    write_trajectory_csv(out_prefix + "_constrained.csv", cr.trajectory,
                         &cr.separation);
    final_sep = cr.separation.back();
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"norm_drift\":%.17g,\"charge_drift\":%.17g,\"domain_exit\":%s,"
                "\"final_separation\":%.17g}",
                norm_drift, charge_drift, tr.domain_exit ? "true" : "false", final_sep);
  std::printf("%s\n", buf);
  if (tr.domain_exit)
    std::fprintf(stderr, "warn: trajectory left the chart domain at (%g, %g, %g, %g)\n",
                 tr.exit_point[0], tr.exit_point[1], tr.exit_point[2], tr.exit_point[3]);
  return 0;
}

int run_komar_mass(const std::string& metric, double mass, double radius, int grid) {
  if (metric != "schwarzschild") {
    std::fprintf(stderr, "komar-mass: only the schwarzschild metric is wired up\n");
    return 2;
  }
  Chart schw = make_schwarzschild(mass);
  SpacetimeModel model;
  model.chart = &schw;
  model.T.mixed = [](const Vec4&) { return Mat4{}; };
  model.T.symmetric = true;
  model.A_gen.comps = [](const Vec4&) { return Vec4{1, 0, 0, 0}; };
  model.A_gen.jacobian = [](const Vec4&) { return Mat4{}; };
  QuadratureResult q = komar_surface_energy(model, radius, grid);
  std::printf("{\"energy\":%.17g,\"refinement_error\":%.17g,\"orientation\":\"outward-future\"}\n",
              q.value, q.refinement_error);
  return 0;
}

int run_algebra_report() {
  std::string out = "{\"commutators\":[";
  bool first = true;
  for (const auto& r : commutator_table()) {
    if (!first) out += ",";
    first = false;
    out += "{\"left\":\"J" + std::to_string(r.left[0]) + std::to_string(r.left[1]) +
           "\",\"right\":\"J" + std::to_string(r.right[0]) +
           std::to_string(r.right[1]) + "\",\"exact_match\":" +
           (r.exact_match ? "true" : "false") + "}";
  }
  out += "],";
  CasimirReport c = casimir_check(Rational(1));
  out += std::string("\"casimirs\":{\"I1_central\":") + (c.I1_central ? "true" : "false") +
         ",\"I2_central\":" + (c.I2_central ? "true" : "false") +
         ",\"I1_diag\":\"" + c.I1_diag[0].str() + "\",\"I2_diag\":\"" +
         c.I2_diag[0].str() + "\",\"W4_matches\":" +
         (c.W4_matches_m7 ? "true" : "false") + "},";
  ContractionReport cr = contraction_scaling({1, 10, 100});
  out += std::string("\"contraction\":{\"bracket_law_exact\":") +
         (cr.bracket_law_exact ? "true" : "false") +
         ",\"ratios_exact\":" + (cr.ratios_exact ? "true" : "false") + "}}";
  std::printf("%s\n", out.c_str());
  bool ok = c.I1_central && c.I2_central && cr.bracket_law_exact && cr.ratios_exact;
  for (const auto& r : commutator_table())
    if (!r.exact_match) ok = false;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"de Sitter spacetime workbench"};
  app.set_config("--config", "", "flat key=value configuration file");
  app.require_subcommand(1);

  // shared parameters (file < command line)
  std::uint64_t seed = 1;
  double ell = 1.0, mass = 1.0, radius = 10.0;
  int grid = 64;
  bool timings = false, interior = false;
  app.add_option("--seed", seed, "random-sample seed")->capture_default_str();
  app.add_option("--ell", ell, "pseudo-sphere radius")->capture_default_str();
  app.add_flag("--interior", interior, "restrict the conformal chart to the inside of the absolute");
  app.add_option("--m", mass, "mass parameter")->capture_default_str();
  app.add_option("--radius", radius, "2-sphere radius")->capture_default_str();
  app.add_option("--grid", grid, "quadrature grid per dimension")->capture_default_str();
  app.add_flag("--timings", timings, "include runtime_ms in reports (non-deterministic)");

  auto* verify = app.add_subcommand("verify", "run named check suites");
  verify->fallthrough();
  std::vector<std::string> suite_sel;
  bool all = false;
  verify->add_option("--suite", suite_sel, "suite name (repeatable)");
  verify->add_flag("--all", all, "run every suite");

  auto* det = app.add_subcommand("det-map", "Killing-determinant CSV grid");
  det->fallthrough();
  double tmin = -3, tmax = 3, xmin = -3, xmax = 3;
  int nt = 121, nx = 121;
  std::string det_out = "detmap.csv";
  det->add_option("--tmin", tmin)->capture_default_str();
  det->add_option("--tmax", tmax)->capture_default_str();
  det->add_option("--xmin", xmin)->capture_default_str();
  det->add_option("--xmax", xmax)->capture_default_str();
  det->add_option("--nt", nt)->capture_default_str();
  det->add_option("--nx", nx)->capture_default_str();
  det->add_option("--out", det_out)->capture_default_str();

  auto* geo = app.add_subcommand("geodesic", "integrate a geodesic, write CSV");
  geo->fallthrough();
  std::string chart_name = "desitter";
  std::vector<double> x0{0, 0, 0, 0}, u0{1, 0, 0, 0};
  double h = 1e-3, smax = 2.0;
  int log_every = 10;
  bool compare_constrained = false;
  std::string out_prefix = "trajectory";
  geo->add_option("--chart", chart_name, "minkowski|desitter|schwarzschild")
      ->capture_default_str();
  geo->add_option("--x0", x0, "initial position")->expected(4);
  geo->add_option("--u0", u0, "initial velocity")->expected(4);
  geo->add_option("--step", h)->capture_default_str();
  geo->add_option("--smax", smax)->capture_default_str();
  geo->add_option("--log-every", log_every)->capture_default_str();
  geo->add_flag("--compare-constrained", compare_constrained,
                "also integrate the constrained-variation curve");
  geo->add_option("--out", out_prefix, "output file prefix")->capture_default_str();

  auto* con = app.add_subcommand("constrained",
                                 "integrate the constrained-variation curve, write CSV");
  con->fallthrough();
  std::vector<double> cx0{0, 0.5, 0, 0}, cu0{1, 0.2, 0, 0};
  double ch = 1e-3, csmax = 1.0;
  std::string cout_prefix = "constrained";
  con->add_option("--x0", cx0, "initial position")->expected(4);
  con->add_option("--u0", cu0, "initial velocity")->expected(4);
  con->add_option("--step", ch)->capture_default_str();
  con->add_option("--smax", csmax)->capture_default_str();
  con->add_option("--out", cout_prefix)->capture_default_str();

  auto* km = app.add_subcommand("komar-mass", "surface-flux mass, JSON record");
  km->fallthrough();
  std::string metric = "schwarzschild";
  km->add_option("--metric", metric)->capture_default_str();

  app.add_subcommand("algebra-report", "exact commutator table and Casimirs, JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      std::vector<std::string> names = suite_sel;
      if (all || names.empty()) names = suites::suite_names();
      suites::Options opt;
      opt.seed = seed;
      opt.ell = ell;
      opt.komar_mass = mass;
      opt.komar_radius = radius;
      opt.komar_grid = grid;
      return run_verify(opt, names, timings);
    }
    if (det->parsed()) return run_det_map(ell, tmin, tmax, xmin, xmax, nt, nx, det_out);
    if (geo->parsed())
      return run_trajectory(chart_name, ell, interior, mass, x0, u0, h, smax,
                            log_every, compare_constrained, out_prefix);
    if (con->parsed()) {
      DeSitterModel ds(ell);
      IntegratorConfig cfg;
      cfg.h = ch;
      cfg.s_max = csmax;
      cfg.log_every = 10;
      ConstrainedRun cr = constrained_curve_integrate(
          ds, Vec4{cx0[0], cx0[1], cx0[2], cx0[3]}, Vec4{cu0[0], cu0[1], cu0[2], cu0[3]},
          cfg);
      write_trajectory_csv(cout_prefix + ".csv", cr.trajectory, &cr.separation);
      std::printf("{\"final_separation\":%.17g,\"max_condition\":%.17g}\n",
                  cr.separation.back(), cr.max_condition);
      return 0;
    }
    if (km->parsed()) return run_komar_mass(metric, mass, radius, grid);
    if (app.get_subcommand("algebra-report")->parsed()) return run_algebra_report();
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
