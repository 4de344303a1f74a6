#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dslab/dynamics.hpp"

using namespace dslab;

TEST_CASE("flat chart geodesics are straight lines") {
  Chart mink = make_minkowski();
  IntegratorConfig cfg;
  cfg.h = 1e-2;
  cfg.s_max = 1.0;
  cfg.log_every = 5;
  Trajectory tr =
      geodesic_integrate(mink, Vec4{0, 0, 0, 0}, Vec4{1, 0, 0, 0}, cfg);
  for (const auto& s : tr.samples) {
    CHECK(s.x[0] == Catch::Approx(s.s).margin(1e-12));
    CHECK(std::fabs(s.x[1]) < 1e-12);
    CHECK(s.norm == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("benchmark run conserves the norm and the Killing charges") {
  DeSitterModel ds(1.0);
  IntegratorConfig cfg;
  cfg.h = 1e-3;
  cfg.s_max = 2.0;
  cfg.log_every = 50;
  Trajectory tr =
      geodesic_integrate(ds.chart, Vec4{0, 0, 0, 0}, Vec4{1, 0, 0, 0}, cfg, &ds);
  REQUIRE(tr.samples.size() > 10);
  for (const auto& s : tr.samples) {
    CHECK(std::fabs(s.norm - 1.0) < 1e-8);
    for (int a = 0; a < 4; ++a)
      CHECK(std::fabs(s.charges[a] - tr.samples.front().charges[a]) < 1e-8);
  }
}

TEST_CASE("integrator input validation") {
  DeSitterModel ds(1.0);
  IntegratorConfig cfg;
  CHECK_THROWS_AS(
      geodesic_integrate(ds.chart, Vec4{0, 0, 0, 0}, Vec4{0, 1, 0, 0}, cfg, &ds),
      std::invalid_argument);  // spacelike initial velocity
  IntegratorConfig bad;
  bad.h = -1;
  CHECK_THROWS_AS(
      geodesic_integrate(ds.chart, Vec4{0, 0, 0, 0}, Vec4{1, 0, 0, 0}, bad, &ds),
      std::invalid_argument);
}

TEST_CASE("domain exit is reported, not thrown") {
  DeSitterModel inside(1.0, true);
  IntegratorConfig cfg;
  cfg.h = 1e-2;
  cfg.s_max = 50.0;
  cfg.log_every = 10;
  Trajectory tr = geodesic_integrate(inside.chart, Vec4{0, 0, 0, 0},
                                     Vec4{1, 0, 0, 0}, cfg, &inside);
  CHECK(tr.domain_exit);
  CHECK(tr.exit_point[0] > 0.0);
}

TEST_CASE("hybrid form follows the geodesic") {
  DeSitterModel ds(1.0);
  IntegratorConfig cfg;
  cfg.h = 1e-3;
  cfg.s_max = 1.0;
  cfg.log_every = 10;
  Trajectory tr = geodesic_integrate(ds.chart, Vec4{0, 0.2, 0.1, 0},
                                     Vec4{1, 0.1, 0, 0}, cfg, &ds);
  HybridCheck hc = hybrid_geodesic_check(ds, tr);
  CHECK(hc.k12_residual < 1e-6);
  CHECK(hc.k13_residual < 1e-6);
  CHECK(hybrid_integrate_gap(ds, tr) < 1e-6);
}

TEST_CASE("constrained curve departs from the geodesic") {
  DeSitterModel ds(1.0);
  IntegratorConfig cfg;
  cfg.h = 1e-3;
  cfg.s_max = 1.0;
  cfg.log_every = 10;
  ConstrainedRun cr =
      constrained_curve_integrate(ds, Vec4{0, 0.5, 0, 0}, Vec4{1, 0.2, 0, 0}, cfg);
  double sep = cr.separation.back();
  CHECK(sep > 1e-3);          // measurable departure
  CHECK(sep > 100.0 * 1e-8);  // far above integrator drift
  CHECK(cr.max_condition < 1e8);
  // origin with purely timelike data: the two right-hand sides coincide
  CHECK(constrained_vs_hybrid_rhs_gap(ds, Vec4{0, 0, 0, 0}, Vec4{1, 0, 0, 0}) < 1e-12);
  // generic state: they differ
  CHECK(constrained_vs_hybrid_rhs_gap(ds, Vec4{0, 0.5, 0, 0}, Vec4{1.1, 0.2, 0, 0}) >
        1e-3);
  CHECK_THROWS_AS(
      constrained_curve_integrate(ds, Vec4{0, 0.5, 0, 0}, Vec4{0, 0, 0, 0}, cfg),
      std::invalid_argument);
}

TEST_CASE("large-radius limit straightens both curves") {
  DeSitterModel big(1e6);
  IntegratorConfig cfg;
  cfg.h = 1e-3;
  cfg.s_max = 1.0;
  cfg.log_every = 20;
  ConstrainedRun cr =
      constrained_curve_integrate(big, Vec4{0, 0.5, 0, 0}, Vec4{1, 0.2, 0, 0}, cfg);
  CHECK(cr.separation.back() < 1e-6);
}

TEST_CASE("papapetrou reduction") {
  Chart mink = make_minkowski();
  IntegratorConfig cfg;
  cfg.h = 1e-2;
  cfg.s_max = 1.0;
  cfg.log_every = 1;
  Trajectory flat =
      geodesic_integrate(mink, Vec4{0, 0, 0, 0}, Vec4{1.5, 0.5, 0.3, 0.1}, cfg);
  PapapetrouCheck pf = papapetrou_singlepole_check(mink, flat);
  CHECK(pf.m_drift < 1e-12);
  CHECK(pf.ode_coefficient_gap < 1e-12);

  DeSitterModel ds(1.0);
  IntegratorConfig cfg2;
  cfg2.h = 1e-3;
  cfg2.s_max = 2.0;
  cfg2.log_every = 10;
  Trajectory tr = geodesic_integrate(ds.chart, Vec4{0, 0.3, 0.1, 0},
                                     Vec4{1, 0.2, 0, 0.1}, cfg2, &ds);
  PapapetrouCheck pc = papapetrou_singlepole_check(ds.chart, tr);
  CHECK(pc.m_drift < 1e-8);
  CHECK(pc.geodesic_residual < 1e-6);
  CHECK(pc.ode_coefficient_gap < 1e-10);
}

TEST_CASE("schwarzschild circular orbit") {
  Chart schw = make_schwarzschild(1.0);
  double r = 10.0;
  double Om = std::sqrt(1.0 / (r * r * r));
  double f = 1.0 - 2.0 / r;
  double ut = 1.0 / std::sqrt(f - r * r * Om * Om);
  IntegratorConfig cfg;
  cfg.h = 1e-3;
  cfg.s_max = (2 * M_PI / Om) * std::sqrt(f - r * r * Om * Om);
  cfg.log_every = 200;
  cfg.normalize = false;
  Trajectory tr = geodesic_integrate(schw, Vec4{0, r, M_PI / 2, 0},
                                     Vec4{ut, 0, 0, ut * Om}, cfg);
  PapapetrouCheck pc = papapetrou_singlepole_check(schw, tr);
  CHECK(pc.m_drift < 1e-7);
  for (const auto& s : tr.samples) CHECK(std::fabs(s.x[1] - r) < 1e-6);
}

TEST_CASE("rk4 order and time reversal") {
  DeSitterModel ds(1.0);
  // order measurement in the truncation-dominated regime; at h = 1e-3 the
  // drift sits at the rounding floor where halving cannot improve it
  IntegratorConfig c1, c2;
  c1.h = 2e-2;
  c1.s_max = 2.0;
  c1.log_every = 10;
  c2 = c1;
  c2.h = 1e-2;
  auto drift = [&](const Trajectory& t) {
    double w = 0.0;
    for (const auto& s : t.samples) w = std::max(w, std::fabs(s.norm - 1.0));
    return w;
  };
  Trajectory t1 = geodesic_integrate(ds.chart, Vec4{0, 0.4, 0.2, 0.1},
                                     Vec4{1, 0.3, 0.1, 0}, c1, &ds);
  Trajectory t2 = geodesic_integrate(ds.chart, Vec4{0, 0.4, 0.2, 0.1},
                                     Vec4{1, 0.3, 0.1, 0}, c2, &ds);
  double d1 = drift(t1), d2 = drift(t2);
  CHECK(d1 > 1e-12);  // truncation visible at this step size
  CHECK(d1 >= 8.0 * d2);
  IntegratorConfig cr = c1;
  cr.h = 1e-3;
  CHECK(time_reversal_gap(ds.chart, Vec4{0, 0.4, 0.2, 0.1}, Vec4{1, 0.3, 0.1, 0}, cr,
                          &ds) < 1e-7);
}
