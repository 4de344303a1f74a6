#pragma once

// Curve integration on charts: Levi-Civita geodesics with conserved-quantity
// logs, the hybrid-basis form of the geodesic equation, the constrained-
// variation curve, and the Papapetrou single-pole reduction checks.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dslab/chart.hpp"
#include "dslab/desitter.hpp"
#include "dslab/linalg.hpp"

namespace dslab {

struct IntegratorConfig {
  double h = 1e-3;
  double s_max = 1.0;
  int log_every = 1;
  bool normalize = true;  // rescale u0 to g(u,u) = 1 before integrating
};

struct CurveSample {
  double s = 0.0;
  Vec4 x{};
  Vec4 u{};
  double norm = 0.0;                  // g(u,u)
  std::array<double, 4> charges{};    // C_a = g(u, Pi_a) on de Sitter charts
};

struct Trajectory {
  std::vector<CurveSample> samples;
  bool domain_exit = false;
  Vec4 exit_point{};
  double h = 0.0;
};

namespace detail {

template <int N>
std::array<double, N> rk4_step(const std::function<std::array<double, N>(
                                   const std::array<double, N>&)>& rhs,
                               const std::array<double, N>& y, double h) {
  auto add = [](const std::array<double, N>& a, const std::array<double, N>& b,
                double f) {
    std::array<double, N> out{};
    for (int i = 0; i < N; ++i) out[i] = a[i] + f * b[i];
    return out;
  };
  auto k1 = rhs(y);
  auto k2 = rhs(add(y, k1, h / 2));
  auto k3 = rhs(add(y, k2, h / 2));
  auto k4 = rhs(add(y, k3, h));
  std::array<double, N> out{};
  for (int i = 0; i < N; ++i)
    out[i] = y[i] + (h / 6) * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

}  // namespace detail

inline Vec4 geodesic_acceleration(const Christoffel& G, const Vec4& u) {
  Vec4 a{};
  for (int m = 0; m < 4; ++m) {
    double s = 0.0;
    for (int n = 0; n < 4; ++n)
      for (int r = 0; r < 4; ++r) s += G[m][n][r] * u[n] * u[r];
    a[m] = -s;
  }
  return a;
}

inline Trajectory geodesic_integrate(const Chart& chart, Vec4 x0, Vec4 u0,
                                     const IntegratorConfig& cfg,
                                     const DeSitterModel* ds = nullptr) {
  chart.require_domain(x0);
  if (cfg.h <= 0 || cfg.s_max <= 0)
    throw std::invalid_argument("integrator: h and s_max must be > 0");
  if (cfg.normalize) {
    double n = dot(u0, mat4_apply(chart.g(x0), u0));
    if (n <= 0) throw std::invalid_argument("integrator: u0 must be timelike");
    double f = 1.0 / std::sqrt(n);
    for (auto& c : u0) c *= f;
  }
  std::function<std::array<double, 8>(const std::array<double, 8>&)> rhs =
      [&chart](const std::array<double, 8>& y) {
        Vec4 x{y[0], y[1], y[2], y[3]}, u{y[4], y[5], y[6], y[7]};
        Christoffel G = chart.christoffel_at(x);
        Vec4 a = geodesic_acceleration(G, u);
        return std::array<double, 8>{u[0], u[1], u[2], u[3], a[0], a[1], a[2], a[3]};
      };
  Trajectory out;
  out.h = cfg.h;
  std::array<double, 8> y{x0[0], x0[1], x0[2], x0[3], u0[0], u0[1], u0[2], u0[3]};
  int nsteps = static_cast<int>(std::llround(cfg.s_max / cfg.h));
  auto log_state = [&](double s) {
    CurveSample cs;
    cs.s = s;
    cs.x = {y[0], y[1], y[2], y[3]};
    cs.u = {y[4], y[5], y[6], y[7]};
    Mat4 g = chart.g(cs.x);
    cs.norm = dot(cs.u, mat4_apply(g, cs.u));
    if (ds) {
      Mat4 xi = ds->killing_translations(cs.x);
      Vec4 low = mat4_apply(g, cs.u);
      for (int a = 0; a < 4; ++a) cs.charges[a] = dot(low, xi[a]);
    }
    out.samples.push_back(cs);
  };
  log_state(0.0);
  for (int i = 1; i <= nsteps; ++i) {
    std::array<double, 8> next;
    try {
      next = detail::rk4_step<8>(rhs, y, cfg.h);
      Vec4 xn{next[0], next[1], next[2], next[3]};
      chart.require_domain(xn);
    } catch (const ChartDomainError&) {
      out.domain_exit = true;
      out.exit_point = {y[0], y[1], y[2], y[3]};
      return out;
    } catch (const SingularMetricError&) {
      // step rejected against a chart singularity
      out.domain_exit = true;
      out.exit_point = {y[0], y[1], y[2], y[3]};
      return out;
    }
    y = next;
    if (i % cfg.log_every == 0 || i == nsteps) log_state(i * cfg.h);
  }
  return out;
}

// Max residual of the hybrid-basis form dU^b/ds + u^mu U^a HG^b_{mu a} = 0 and
// its lowered form along a logged geodesic; U is recovered by a linear solve
// at each sample, dU/ds by central differences on the sample grid.
struct HybridCheck {
  double k12_residual = 0.0;
  double k13_residual = 0.0;
};

inline HybridCheck hybrid_geodesic_check(const DeSitterModel& ds, const Trajectory& tr) {
  if (tr.samples.size() < 5)
    throw std::invalid_argument("hybrid check: trajectory too short");
  HybridCheck out;
  double h = tr.samples[1].s - tr.samples[0].s;
  std::vector<Vec4> U(tr.samples.size());
  std::vector<Vec4> Ulow(tr.samples.size());
  for (size_t i = 0; i < tr.samples.size(); ++i) {
    const auto& cs = tr.samples[i];
    Mat4 xi = ds.killing_translations(cs.x);
    if (std::fabs(ds.killing_det(cs.x)) < 1e-10)
      throw BasisDegeneracyError("hybrid check: Killing basis degenerate on path");
    U[i] = mat4_solve(mat4_transpose(xi), cs.u);
    Mat4 g = ds.chart.g(cs.x);
    Mat4 gram{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) gram[a][b] = dot(xi[a], mat4_apply(g, xi[b]));
    Ulow[i] = mat4_apply(gram, U[i]);
  }
  // five-point derivative on the sample grid keeps the stencil error below
  // the check tolerance even for coarse logging intervals
  auto d5 = [h](const std::vector<Vec4>& f, size_t i, int b) {
    return (-f[i + 2][b] + 8 * f[i + 1][b] - 8 * f[i - 1][b] + f[i - 2][b]) / (12 * h);
  };
  auto uniform_at = [&](size_t i) {
    // the final sample may sit off the uniform grid when the logging stride
    // does not divide the step count
    return std::fabs((tr.samples[i + 2].s - tr.samples[i + 1].s) - h) < 1e-12;
  };
  for (size_t i = 2; i + 2 < tr.samples.size(); ++i) {
    if (!uniform_at(i)) continue;
    const auto& cs = tr.samples[i];
    auto HG = ds.hybrid_connection(cs.x);
    for (int b = 0; b < 4; ++b) {
      double s = d5(U, i, b);
      for (int mu = 0; mu < 4; ++mu)
        for (int a = 0; a < 4; ++a) s += cs.u[mu] * U[i][a] * HG[b][mu][a];
      out.k12_residual = std::max(out.k12_residual, std::fabs(s));
      double sl = d5(Ulow, i, b);
      for (int mu = 0; mu < 4; ++mu)
        for (int k = 0; k < 4; ++k) sl -= HG[k][mu][b] * cs.u[mu] * Ulow[i][k];
      out.k13_residual = std::max(out.k13_residual, std::fabs(sl));
    }
  }
  return out;
}

// Integrate the hybrid system directly (dx = U^a Pi_a, dU^b = -u U HG) and
// return the largest coordinate gap against a reference geodesic on the same
// sample grid.
inline double hybrid_integrate_gap(const DeSitterModel& ds, const Trajectory& ref) {
  if (ref.samples.empty()) throw std::invalid_argument("empty reference trajectory");
  const Vec4& x0 = ref.samples.front().x;
  const Vec4& u0 = ref.samples.front().u;
  Mat4 xi0 = ds.killing_translations(x0);
  Vec4 U0 = mat4_solve(mat4_transpose(xi0), u0);
  std::function<std::array<double, 8>(const std::array<double, 8>&)> rhs =
      [&ds](const std::array<double, 8>& y) {
        Vec4 x{y[0], y[1], y[2], y[3]}, U{y[4], y[5], y[6], y[7]};
        Mat4 xi = ds.killing_translations(x);
        Vec4 u{};
        for (int mu = 0; mu < 4; ++mu)
          for (int a = 0; a < 4; ++a) u[mu] += U[a] * xi[a][mu];
        auto HG = ds.hybrid_connection(x);
        std::array<double, 8> out{u[0], u[1], u[2], u[3], 0, 0, 0, 0};
        for (int b = 0; b < 4; ++b) {
          double s = 0.0;
          for (int mu = 0; mu < 4; ++mu)
            for (int a = 0; a < 4; ++a) s += u[mu] * U[a] * HG[b][mu][a];
          out[4 + b] = -s;
        }
        return out;
      };
  std::array<double, 8> y{x0[0], x0[1], x0[2], x0[3], U0[0], U0[1], U0[2], U0[3]};
  double h = ref.h;
  double gap = 0.0;
  size_t next_log = 1;
  int steps_per_log = 1;
  if (ref.samples.size() > 1)
    steps_per_log = static_cast<int>(std::llround((ref.samples[1].s - ref.samples[0].s) / h));
  int step = 0;
  while (next_log < ref.samples.size()) {
    y = detail::rk4_step<8>(rhs, y, h);
    ++step;
    if (step == steps_per_log * static_cast<int>(next_log)) {
      const auto& cs = ref.samples[next_log];
      for (int m = 0; m < 4; ++m) gap = std::max(gap, std::fabs(y[m] - cs.x[m]));
      ++next_log;
    }
  }
  return gap;
}

// Constrained-variation curve: d pi_rho/ds = u^g pi_b Gamma^b_{g rho} with the
// Levi-Civita coefficients, u rebuilt from pi through the Killing basis.
struct ConstrainedRun {
  Trajectory trajectory;
  std::vector<double> separation;  // per sample, against the matched geodesic
  double max_condition = 0.0;
};

inline ConstrainedRun constrained_curve_integrate(const DeSitterModel& ds, Vec4 x0,
                                                  Vec4 u0, const IntegratorConfig& cfg) {
  const Chart& chart = ds.chart;
  chart.require_domain(x0);
  if (cfg.normalize) {
    double n = dot(u0, mat4_apply(chart.g(x0), u0));
    if (n <= 0) throw std::invalid_argument("constrained curve: u0 must be timelike");
    double f = 1.0 / std::sqrt(n);
    for (auto& c : u0) c *= f;
  }
  auto gram_at = [&](const Vec4& x, const Mat4& xi) {
    Mat4 g = chart.g(x);
    Mat4 out{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) out[a][b] = dot(xi[a], mat4_apply(g, xi[b]));
    return out;
  };
  ConstrainedRun run;
  auto inf_norm = [](const Mat4& m) {
    double w = 0.0;
    for (const auto& row : m) {
      double s = 0.0;
      for (double v : row) s += std::fabs(v);
      w = std::max(w, s);
    }
    return w;
  };
  auto reconstruct = [&](const Vec4& x, const Vec4& pi, Vec4& u) {
    Mat4 xi = ds.killing_translations(x);
    if (std::fabs(ds.killing_det(x)) < 1e-10)
      throw BasisDegeneracyError("constrained curve: Killing basis degenerate");
    Mat4 gram = gram_at(x, xi);
    double cond = inf_norm(gram) * inf_norm(mat4_inverse(gram));
    run.max_condition = std::max(run.max_condition, cond);
    if (cond > 1e8)
      throw BasisDegeneracyError("constrained curve: Gram matrix ill-conditioned");
    Vec4 piUp = mat4_solve(gram, pi);
    u = Vec4{};
    for (int mu = 0; mu < 4; ++mu)
      for (int a = 0; a < 4; ++a) u[mu] += piUp[a] * xi[a][mu];
  };
  // pi0 = m U_rho with m = 1
  Mat4 xi0 = ds.killing_translations(x0);
  Vec4 U0 = mat4_solve(mat4_transpose(xi0), u0);
  Vec4 pi0 = mat4_apply(gram_at(x0, xi0), U0);
  std::function<std::array<double, 8>(const std::array<double, 8>&)> rhs =
      [&](const std::array<double, 8>& y) {
        Vec4 x{y[0], y[1], y[2], y[3]}, pi{y[4], y[5], y[6], y[7]};
        Vec4 u;
        reconstruct(x, pi, u);
        Christoffel G = chart.christoffel_at(x);
        Vec4 dpi{};
        for (int r = 0; r < 4; ++r) {
          double s = 0.0;
          for (int g = 0; g < 4; ++g)
            for (int b = 0; b < 4; ++b) s += u[g] * pi[b] * G[b][g][r];
          dpi[r] = s;
        }
        return std::array<double, 8>{u[0],   u[1],   u[2],   u[3],
                                     dpi[0], dpi[1], dpi[2], dpi[3]};
      };
  Trajectory geo = geodesic_integrate(chart, x0, u0, cfg, &ds);
  std::array<double, 8> y{x0[0], x0[1], x0[2], x0[3], pi0[0], pi0[1], pi0[2], pi0[3]};
  int nsteps = static_cast<int>(std::llround(cfg.s_max / cfg.h));
  Trajectory& tr = run.trajectory;
  tr.h = cfg.h;
  size_t gi = 0;
  auto log_state = [&](double s) {
    CurveSample cs;
    cs.s = s;
    cs.x = {y[0], y[1], y[2], y[3]};
    Vec4 u;
    reconstruct(cs.x, {y[4], y[5], y[6], y[7]}, u);
    cs.u = u;
    cs.norm = dot(u, mat4_apply(chart.g(cs.x), u));
    tr.samples.push_back(cs);
    double sep = 0.0;
    if (gi < geo.samples.size()) {
      for (int m = 0; m < 4; ++m)
        sep = std::max(sep, std::fabs(cs.x[m] - geo.samples[gi].x[m]));
    }
    run.separation.push_back(sep);
    ++gi;
  };
  log_state(0.0);
  for (int i = 1; i <= nsteps; ++i) {
    y = detail::rk4_step<8>(rhs, y, cfg.h);
    Vec4 xn{y[0], y[1], y[2], y[3]};
    chart.require_domain(xn);
    if (i % cfg.log_every == 0 || i == nsteps) log_state(i * cfg.h);
  }
  return run;
}

// Pointwise gap between the constrained-variation RHS and the hybrid-geodesic
// RHS for the momentum covector at a single state.
inline double constrained_vs_hybrid_rhs_gap(const DeSitterModel& ds, const Vec4& x,
                                            const Vec4& u) {
  Mat4 xi = ds.killing_translations(x);
  Mat4 g = ds.chart.g(x);
  Mat4 gram{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) gram[a][b] = dot(xi[a], mat4_apply(g, xi[b]));
  Vec4 U = mat4_solve(mat4_transpose(xi), u);
  Vec4 pi = mat4_apply(gram, U);
  Christoffel G = ds.chart.christoffel_at(x);
  auto HG = ds.hybrid_connection(x);
  double gap = 0.0;
  for (int r = 0; r < 4; ++r) {
    double rhs_c = 0.0, rhs_h = 0.0;
    for (int gidx = 0; gidx < 4; ++gidx)
      for (int b = 0; b < 4; ++b) {
        rhs_c += u[gidx] * pi[b] * G[b][gidx][r];
        rhs_h += u[gidx] * pi[b] * HG[b][gidx][r];
      }
    gap = std::max(gap, std::fabs(rhs_c - rhs_h));
  }
  return gap;
}

// Papapetrou single-pole reduction along a logged geodesic: with
// M^{mu a} = m u^mu u^a the mass must stay constant (the g(u,u) log) and the
// reduced equation of motion must coincide with the geodesic equation
// coefficientwise at every sample.
struct PapapetrouCheck {
  double m_drift = 0.0;
  double geodesic_residual = 0.0;   // FD check of du/ds + Gamma u u on the log
  double ode_coefficient_gap = 0.0; // |(d(mu)/ds form) - (geodesic form)| with m = 1
};

inline PapapetrouCheck papapetrou_singlepole_check(const Chart& chart,
                                                   const Trajectory& tr) {
  if (tr.samples.size() < 5)
    throw std::invalid_argument("papapetrou check: trajectory too short");
  PapapetrouCheck out;
  double n0 = tr.samples.front().norm;
  double h = tr.samples[1].s - tr.samples[0].s;
  for (size_t i = 0; i < tr.samples.size(); ++i) {
    out.m_drift = std::max(out.m_drift, std::fabs(tr.samples[i].norm - n0));
    if (i < 2 || i + 2 >= tr.samples.size()) continue;
    if (std::fabs((tr.samples[i + 2].s - tr.samples[i + 1].s) - h) > 1e-12)
      continue;  // final sample may sit off the uniform grid
    const auto& cs = tr.samples[i];
    Christoffel G = chart.christoffel_at(cs.x);
    Vec4 acc = geodesic_acceleration(G, cs.u);
    const double m = 1.0;
    for (int mu = 0; mu < 4; ++mu) {
      double du = (-tr.samples[i + 2].u[mu] + 8 * tr.samples[i + 1].u[mu] -
                   8 * tr.samples[i - 1].u[mu] + tr.samples[i - 2].u[mu]) /
                  (12 * h);
      out.geodesic_residual =
          std::max(out.geodesic_residual, std::fabs(du - acc[mu]));
      // eq of motion with N^{mu a} = m u^mu u^a vs the bare geodesic form
      double lhs = m * du - m * acc[mu];
      double rhs = du - acc[mu];
      out.ode_coefficient_gap =
          std::max(out.ode_coefficient_gap, std::fabs(lhs - rhs));
    }
  }
  return out;
}

// Integrate forward, flip the velocity, integrate back; returns the gap to x0.
inline double time_reversal_gap(const Chart& chart, const Vec4& x0, const Vec4& u0,
                                const IntegratorConfig& cfg,
                                const DeSitterModel* ds = nullptr) {
  Trajectory fwd = geodesic_integrate(chart, x0, u0, cfg, ds);
  const auto& end = fwd.samples.back();
  IntegratorConfig back = cfg;
  back.normalize = false;
  Vec4 ru{-end.u[0], -end.u[1], -end.u[2], -end.u[3]};
  Trajectory bwd = geodesic_integrate(chart, end.x, ru, back, ds);
  const auto& home = bwd.samples.back();
  double gap = 0.0;
  for (int m = 0; m < 4; ++m) gap = std::max(gap, std::fabs(home.x[m] - x0[m]));
  return gap;
}

}  // namespace dslab
