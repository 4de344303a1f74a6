#pragma once

// Coordinate charts: a metric function plus domain predicate, with analytic
// partials where available and central finite differences otherwise. All
// connection and curvature data comes out of geometry_at.

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "dslab/linalg.hpp"
#include "dslab/multivector.hpp"

namespace dslab {

struct ChartDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Christoffel = std::array<Mat4, 4>;         // [rho][mu][nu] = Gamma^rho_{mu nu}
using ChristoffelPartials = std::array<Christoffel, 4>;  // [kappa][rho][mu][nu]

struct Chart {
  std::string name;
  std::function<Mat4(const Vec4&)> metric;
  std::function<bool(const Vec4&)> domain = [](const Vec4&) { return true; };
  // Optional analytic data; null members fall back to finite differences.
  std::function<std::array<Mat4, 4>(const Vec4&)> metric_partials;   // [mu] d_mu g
  std::function<Christoffel(const Vec4&)> christoffel;
  std::function<ChristoffelPartials(const Vec4&)> christoffel_partials;
  double fd_step = 1e-5;
  double fd_step2 = 2e-4;  // outer step for nested (second-derivative) stencils
  int fd_order = 2;        // 2: central; 4: five-point (Richardson) stencil

  void require_domain(const Vec4& x) const {
    if (!domain(x)) throw ChartDomainError(name + ": point outside chart domain");
  }

  Mat4 g(const Vec4& x) const {
    require_domain(x);
    return metric(x);
  }

  std::array<Mat4, 4> dg(const Vec4& x) const {
    if (metric_partials) {
      require_domain(x);
      return metric_partials(x);
    }
    std::array<Mat4, 4> out{};
    for (int mu = 0; mu < 4; ++mu) {
      Vec4 xp = x, xm = x;
      xp[mu] += fd_step;
      xm[mu] -= fd_step;
      Mat4 gp = g(xp), gm = g(xm);
      if (fd_order >= 4) {
        Vec4 xp2 = x, xm2 = x;
        xp2[mu] += 2 * fd_step;
        xm2[mu] -= 2 * fd_step;
        Mat4 gp2 = g(xp2), gm2 = g(xm2);
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            out[mu][a][b] = (-gp2[a][b] + 8 * gp[a][b] - 8 * gm[a][b] + gm2[a][b]) /
                            (12 * fd_step);
      } else {
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            out[mu][a][b] = (gp[a][b] - gm[a][b]) / (2 * fd_step);
      }
    }
    return out;
  }

  Christoffel christoffel_at(const Vec4& x) const {
    if (christoffel) {
      require_domain(x);
      return christoffel(x);
    }
    Mat4 gm = g(x);
    double det = mat4_det(gm);
    if (std::fabs(det) <= 1e-12) throw SingularMetricError(name + ": singular metric");
    Mat4 gi = mat4_inverse(gm);
    auto d = dg(x);
    Christoffel out{};
    for (int r = 0; r < 4; ++r)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          double s = 0.0;
          for (int sg = 0; sg < 4; ++sg)
            s += gi[r][sg] * (d[mu][sg][nu] + d[nu][sg][mu] - d[sg][mu][nu]);
          out[r][mu][nu] = 0.5 * s;
        }
    return out;
  }

  ChristoffelPartials christoffel_partials_at(const Vec4& x) const {
    if (christoffel_partials) {
      require_domain(x);
      return christoffel_partials(x);
    }
    ChristoffelPartials out{};
    for (int k = 0; k < 4; ++k) {
      Vec4 xp = x, xm = x;
      xp[k] += fd_step;
      xm[k] -= fd_step;
      Christoffel cp = christoffel_at(xp), cm = christoffel_at(xm);
      for (int r = 0; r < 4; ++r)
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu)
            out[k][r][mu][nu] = (cp[r][mu][nu] - cm[r][mu][nu]) / (2 * fd_step);
    }
    return out;
  }

  // Signature of the Clifford algebra of forms at x: the cotangent metric.
  SigPtr form_signature(const Vec4& x) const {
    Mat4 gm = g(x);
    if (std::fabs(mat4_det(gm)) <= 1e-12)
      throw SingularMetricError(name + ": singular metric");
    return Signature::from_mat4(mat4_inverse(gm));
  }
};

struct GeometryAtPoint {
  Vec4 point{};
  Mat4 g{};
  Mat4 g_inv{};
  double sqrt_neg_det = 0.0;
  Christoffel christoffel{};
  // Riemann R^m_{n s r}: R(d_s, d_r) d_n = R^m_{n s r} d_m.
  std::array<std::array<Mat4, 4>, 4> riemann{};
  Mat4 ricci{};       // R_{n s} = R^m_{n s m}
  Mat4 ricci_mixed{}; // R^m_n
  double scalar = 0.0;
};

inline GeometryAtPoint geometry_at(const Chart& chart, const Vec4& x,
                                   bool with_curvature = true) {
  GeometryAtPoint out;
  out.point = x;
  out.g = chart.g(x);
  double det = mat4_det(out.g);
  if (std::fabs(det) <= 1e-12)
    throw SingularMetricError(chart.name + ": singular metric");
  out.g_inv = mat4_inverse(out.g);
  out.sqrt_neg_det = std::sqrt(std::fabs(det));
  out.christoffel = chart.christoffel_at(x);
  if (!with_curvature) return out;
  auto dG = chart.christoffel_partials_at(x);
  const auto& G = out.christoffel;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r) {
          double v = dG[s][m][r][n] - dG[r][m][s][n];
          for (int l = 0; l < 4; ++l)
            v += G[m][s][l] * G[l][r][n] - G[m][r][l] * G[l][s][n];
          out.riemann[m][n][s][r] = v;
        }
  for (int n = 0; n < 4; ++n)
    for (int s = 0; s < 4; ++s) {
      double v = 0.0;
      for (int m = 0; m < 4; ++m) v += out.riemann[m][n][s][m];
      out.ricci[n][s] = v;
    }
  out.ricci_mixed = mat4_mul(out.g_inv, out.ricci);
  out.scalar = 0.0;
  for (int m = 0; m < 4; ++m) out.scalar += out.ricci_mixed[m][m];
  return out;
}

// ---------------------------------------------------------------------------
// Built-in charts
// ---------------------------------------------------------------------------

inline Chart make_minkowski() {
  Chart c;
  c.name = "minkowski";
  c.metric = [](const Vec4&) {
    Mat4 g{};
    g[0][0] = 1.0;
    g[1][1] = g[2][2] = g[3][3] = -1.0;
    return g;
  };
  c.metric_partials = [](const Vec4&) { return std::array<Mat4, 4>{}; };
  c.christoffel = [](const Vec4&) { return Christoffel{}; };
  c.christoffel_partials = [](const Vec4&) { return ChristoffelPartials{}; };
  return c;
}

namespace detail {
inline double ds_sigma2(const Vec4& x) {
  return x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
}
inline Vec4 ds_lower(const Vec4& x) { return {x[0], -x[1], -x[2], -x[3]}; }
}  // namespace detail

// Conformal de Sitter chart: g = Omega^2 eta with Omega = (1 - sigma^2/4l^2)^-1.
inline Chart make_desitter_conformal(double ell, bool interior = false) {
  if (ell <= 0) throw std::invalid_argument("de Sitter chart: ell must be > 0");
  Chart c;
  c.name = "desitter-conformal";
  double l2 = ell * ell;
  c.domain = [l2, interior](const Vec4& x) {
    double s2 = detail::ds_sigma2(x);
    if (std::fabs(s2 - 4 * l2) < 1e-9) return false;
    if (interior && s2 >= 4 * l2) return false;
    return true;
  };
  auto omega = [l2](const Vec4& x) { return 1.0 / (1.0 - detail::ds_sigma2(x) / (4 * l2)); };
  c.metric = [omega](const Vec4& x) {
    double om = omega(x);
    Mat4 g{};
    g[0][0] = om * om;
    g[1][1] = g[2][2] = g[3][3] = -om * om;
    return g;
  };
  c.metric_partials = [omega, l2](const Vec4& x) {
    double om = omega(x);
    Vec4 xl = detail::ds_lower(x);
    std::array<Mat4, 4> out{};
    for (int mu = 0; mu < 4; ++mu) {
      double domega = om * om * xl[mu] / (2 * l2);
      double f = 2 * om * domega;
      out[mu][0][0] = f;
      out[mu][1][1] = out[mu][2][2] = out[mu][3][3] = -f;
    }
    return out;
  };
  // Conformally flat connection: Gamma^r_{mn} = d_m w d^r_n + d_n w d^r_m - eta_{mn} w^r
  // with w = ln Omega, w_mu = Omega x_mu / (2 l^2).
  auto dlnom = [omega, l2](const Vec4& x) {
    double om = omega(x);
    Vec4 xl = detail::ds_lower(x);
    return Vec4{om * xl[0] / (2 * l2), om * xl[1] / (2 * l2), om * xl[2] / (2 * l2),
                om * xl[3] / (2 * l2)};
  };
  c.christoffel = [dlnom](const Vec4& x) {
    Vec4 w = dlnom(x);
    Vec4 eta{1.0, -1.0, -1.0, -1.0};
    Christoffel out{};
    for (int r = 0; r < 4; ++r)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double v = 0.0;
          if (r == n) v += w[m];
          if (r == m) v += w[n];
          double etamn = (m == n) ? eta[m] : 0.0;
          v -= etamn * eta[r] * w[r];
          out[r][m][n] = v;
        }
    return out;
  };
  c.christoffel_partials = [dlnom, omega, l2](const Vec4& x) {
    // d_k w_mu = Omega^2 x_k x_mu/(4 l^4) + Omega eta_{k mu}/(2 l^2)
    double om = omega(x);
    Vec4 xl = detail::ds_lower(x);
    Vec4 eta{1.0, -1.0, -1.0, -1.0};
    Mat4 dw{};
    for (int k = 0; k < 4; ++k)
      for (int mu = 0; mu < 4; ++mu) {
        double v = om * om * xl[k] * xl[mu] / (4 * l2 * l2);
        if (k == mu) v += om * eta[k] / (2 * l2);
        dw[k][mu] = v;
      }
    ChristoffelPartials out{};
    for (int k = 0; k < 4; ++k)
      for (int r = 0; r < 4; ++r)
        for (int m = 0; m < 4; ++m)
          for (int n = 0; n < 4; ++n) {
            double v = 0.0;
            if (r == n) v += dw[k][m];
            if (r == m) v += dw[k][n];
            double etamn = (m == n) ? eta[m] : 0.0;
            v -= etamn * eta[r] * dw[k][r];
            out[k][r][m][n] = v;
          }
    return out;
  };
  return c;
}

// Schwarzschild chart in (t, r, theta, phi), g = diag(f, -1/f, -r^2, -r^2 sin^2).
inline Chart make_schwarzschild(double m) {
  if (m <= 0) throw std::invalid_argument("Schwarzschild chart: m must be > 0");
  Chart c;
  c.name = "schwarzschild";
  c.domain = [m](const Vec4& x) {
    return x[1] > 2.0 * m * (1.0 + 1e-6) && x[2] > 1e-4 && x[2] < M_PI - 1e-4;
  };
  c.metric = [m](const Vec4& x) {
    double r = x[1], th = x[2];
    double f = 1.0 - 2.0 * m / r;
    Mat4 g{};
    g[0][0] = f;
    g[1][1] = -1.0 / f;
    g[2][2] = -r * r;
    double st = std::sin(th);
    g[3][3] = -r * r * st * st;
    return g;
  };
  c.metric_partials = [m](const Vec4& x) {
    double r = x[1], th = x[2];
    double f = 1.0 - 2.0 * m / r;
    double df = 2.0 * m / (r * r);
    std::array<Mat4, 4> out{};
    out[1][0][0] = df;
    out[1][1][1] = df / (f * f);
    out[1][2][2] = -2.0 * r;
    double st = std::sin(th), ct = std::cos(th);
    out[1][3][3] = -2.0 * r * st * st;
    out[2][3][3] = -r * r * 2.0 * st * ct;
    return out;
  };
  return c;
}

// Named chart registry used by the CLI; parameters per chart.
inline Chart chart_by_name(const std::string& name, double ell = 1.0, double mass = 1.0,
                           bool interior = false) {
  if (name == "minkowski") return make_minkowski();
  if (name == "desitter-conformal" || name == "desitter")
    return make_desitter_conformal(ell, interior);
  if (name == "schwarzschild") return make_schwarzschild(mass);
  throw std::invalid_argument("unknown chart: " + name);
}

}  // namespace dslab
