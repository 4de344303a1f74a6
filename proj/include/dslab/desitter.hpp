#pragma once

// The de Sitter spacetime in conformal coordinates: embedding into R^{1,4},
// the ten Killing vector fields, the linear-independence determinant with its
// closed forms, the hybrid connection, Killing tetrads, and the teleparallel
// frame machinery (torsion, contorsion, frame Levi-Civita coefficients).

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dslab/chart.hpp"
#include "dslab/fields.hpp"
#include "dslab/linalg.hpp"

namespace dslab {

struct BasisDegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DeSitterModel {
  double ell = 1.0;
  bool interior = false;
  Chart chart;

  explicit DeSitterModel(double ell_ = 1.0, bool interior_ = false)
      : ell(ell_), interior(interior_), chart(make_desitter_conformal(ell_, interior_)) {}

  double sigma2(const Vec4& x) const { return detail::ds_sigma2(x); }

  double omega(const Vec4& x) const {
    chart.require_domain(x);
    return 1.0 / (1.0 - sigma2(x) / (4 * ell * ell));
  }

  Mat4 metric(const Vec4& x) const { return chart.g(x); }

  // Embedding into the pseudo-sphere of R^{1,4}: X^mu = Omega x^mu,
  // X^4 = -ell Omega (1 + sigma^2 / 4 ell^2).
  Vec5 embed(const Vec4& x) const {
    double om = omega(x);
    double s2 = sigma2(x);
    return {om * x[0], om * x[1], om * x[2], om * x[3],
            -ell * om * (1.0 + s2 / (4 * ell * ell))};
  }

  double embedding_constraint(const Vec5& X) const {
    return X[0] * X[0] - X[1] * X[1] - X[2] * X[2] - X[3] * X[3] - X[4] * X[4] +
           ell * ell;
  }

  // dX^A/dx^mu: dX^k/dx^a = (Om^2/2l^2) x_a x^k + Om d^k_a; dX^4/dx^a = -(Om^2/l) x_a.
  std::array<Vec4, 5> embed_jacobian(const Vec4& x) const {
    double om = omega(x);
    Vec4 xl = detail::ds_lower(x);
    double l2 = ell * ell;
    std::array<Vec4, 5> J{};
    for (int k = 0; k < 4; ++k)
      for (int a = 0; a < 4; ++a)
        J[k][a] = om * om * xl[a] * x[k] / (2 * l2) + ((k == a) ? om : 0.0);
    for (int a = 0; a < 4; ++a) J[4][a] = -om * om * xl[a] / ell;
    return J;
  }

  // Translation Killing components: xi_a^mu = d_a^mu - (1/4l^2)(2 x_a x^mu - s^2 d_a^mu).
  Mat4 killing_translations(const Vec4& x) const {
    chart.require_domain(x);
    Vec4 xl = detail::ds_lower(x);
    double s2 = sigma2(x);
    double l2 = ell * ell;
    Mat4 xi{};
    for (int a = 0; a < 4; ++a)
      for (int mu = 0; mu < 4; ++mu)
        xi[a][mu] = ((a == mu) ? 1.0 : 0.0) -
                    (2 * xl[a] * x[mu] - s2 * ((a == mu) ? 1.0 : 0.0)) / (4 * l2);
    return xi;
  }

  // d_nu xi_a^mu, analytic.
  std::array<Mat4, 4> killing_translation_partials(const Vec4& x) const {
    Vec4 xl = detail::ds_lower(x);
    double l2 = ell * ell;
    Vec4 eta{1.0, -1.0, -1.0, -1.0};
    std::array<Mat4, 4> out{};  // [nu][a][mu]
    for (int nu = 0; nu < 4; ++nu)
      for (int a = 0; a < 4; ++a)
        for (int mu = 0; mu < 4; ++mu) {
          double v = 2 * ((a == nu) ? eta[a] : 0.0) * x[mu] +
                     2 * xl[a] * ((mu == nu) ? 1.0 : 0.0) -
                     2 * xl[nu] * ((a == mu) ? 1.0 : 0.0);
          out[nu][a][mu] = -v / (4 * l2);
        }
    return out;
  }

  VectorField killing_translation_field(int a) const {
    VectorField V;
    V.comps = [this, a](const Vec4& y) { return killing_translations(y)[a]; };
    V.jacobian = [this, a](const Vec4& y) {
      auto d = killing_translation_partials(y);
      Mat4 out{};
      for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu) out[nu][mu] = d[nu][a][mu];
      return out;
    };
    return V;
  }

  // Rotation/boost Killing fields J_{mu nu} = x_mu d_nu - x_nu d_mu (mu < nu).
  Vec4 killing_rotation(int mu, int nu, const Vec4& x) const {
    Vec4 xl = detail::ds_lower(x);
    Vec4 out{};
    out[nu] += xl[mu];
    out[mu] -= xl[nu];
    return out;
  }

  VectorField killing_rotation_field(int mu, int nu) const {
    VectorField V;
    V.comps = [this, mu, nu](const Vec4& y) { return killing_rotation(mu, nu, y); };
    V.jacobian = [mu, nu](const Vec4&) {
      Vec4 eta{1.0, -1.0, -1.0, -1.0};
      Mat4 out{};  // [k][lam] = d_k V^lam
      for (int k = 0; k < 4; ++k) {
        if (k == mu) out[k][nu] += eta[mu];
        if (k == nu) out[k][mu] -= eta[nu];
      }
      return out;
    };
    return V;
  }

  std::vector<VectorField> all_killing_fields() const {
    std::vector<VectorField> out;
    for (int a = 0; a < 4; ++a) out.push_back(killing_translation_field(a));
    for (int m = 0; m < 4; ++m)
      for (int n = m + 1; n < 4; ++n) out.push_back(killing_rotation_field(m, n));
    return out;
  }

  // ---- Killing determinant -----------------------------------------------
  // The linear-independence determinant is taken of the variant matrix
  //   (1+s) delta_a^mu - (s/2l^2) x_a x^mu,   s = sigma^2/4l^2,
  // whose closed form is (1+s)^3 (1+s-2s^2), reducing at l=1 to
  // (1/512)(s2+4)^3(-s2^2+2 s2+8) with zero loci s2 in {4, -2, -4}. The det
  // of killing_translations itself is (1-s)(1+s)^3, zeros only at s2 = +-4l^2;
  // the two matrices agree at the origin but not elsewhere.
  Mat4 killing_det_matrix(const Vec4& x) const {
    Vec4 xl = detail::ds_lower(x);
    double l2 = ell * ell;
    double s = sigma2(x) / (4 * l2);
    Mat4 out{};
    for (int a = 0; a < 4; ++a)
      for (int mu = 0; mu < 4; ++mu)
        out[a][mu] = ((a == mu) ? (1.0 + s) : 0.0) - s * xl[a] * x[mu] / (2 * l2);
    return out;
  }

  double killing_det(const Vec4& x) const { return mat4_det(killing_det_matrix(x)); }

  double killing_det_closed(const Vec4& x) const {
    double s = sigma2(x) / (4 * ell * ell);
    return (1 + s) * (1 + s) * (1 + s) * (1 + s - 2 * s * s);
  }

  // Reduced closed form on y = z = 0 at l = 1.
  static double killing_det_reduced(double t, double x1) {
    double s2 = t * t - x1 * x1;
    return (s2 + 4) * (s2 + 4) * (s2 + 4) * (-s2 * s2 + 2 * s2 + 8) / 512.0;
  }

  // det of the killing_translations matrix itself; closed form (1-s)(1+s)^3.
  double translation_det(const Vec4& x) const { return mat4_det(killing_translations(x)); }
  double translation_det_closed(const Vec4& x) const {
    double s = sigma2(x) / (4 * ell * ell);
    return (1 - s) * (1 + s) * (1 + s) * (1 + s);
  }

  // ---- hybrid connection -------------------------------------------------
  // D_{d_mu} Pi_a = HG^b_{mu a} Pi_b, solved against the Killing matrix.
  std::array<Mat4, 4> hybrid_connection(const Vec4& x) const {
    if (std::fabs(killing_det(x)) < 1e-10)
      throw BasisDegeneracyError("hybrid connection: Killing basis degenerate at point");
    Mat4 xi = killing_translations(x);
    auto dxi = killing_translation_partials(x);
    Christoffel G = chart.christoffel_at(x);
    Mat4 E = mat4_transpose(xi);  // E[nu][b] = xi_b^nu
    std::array<Mat4, 4> HG{};     // HG[b][mu][a]
    for (int mu = 0; mu < 4; ++mu)
      for (int a = 0; a < 4; ++a) {
        Vec4 rhs{};
        for (int n = 0; n < 4; ++n) {
          double v = dxi[mu][a][n];
          for (int r = 0; r < 4; ++r) v += G[n][mu][r] * xi[a][r];
          rhs[n] = v;
        }
        Vec4 sol = mat4_solve(E, rhs);
        for (int b = 0; b < 4; ++b) HG[b][mu][a] = sol[b];
      }
    return HG;
  }

  // ---- tetrads -----------------------------------------------------------
  enum class TetradMode { Literal, Unit };

  struct Tetrad {
    Mat4 frame{};            // frame[a][mu] = e_a^mu
    Mat4 gram{};             // g(e_a, e_b)
    double defect = 0.0;     // max |gram - eta|
    TetradMode mode = TetradMode::Literal;
  };

  // Literal mode divides by g(Pi_a, Pi_a) itself (so e_1 = -d_1 at the origin);
  // unit mode divides by sqrt|g(Pi_a, Pi_a)|, sign preserved.
  Tetrad tetrad_from_killing(const Vec4& x, TetradMode mode) const {
    Mat4 g = chart.g(x);
    Mat4 xi = killing_translations(x);
    Tetrad out;
    out.mode = mode;
    for (int a = 0; a < 4; ++a) {
      double n = dot(xi[a], mat4_apply(g, xi[a]));
      if (std::fabs(n) < 1e-14)
        throw BasisDegeneracyError("tetrad: null Killing direction at point");
      double div = (mode == TetradMode::Literal) ? n : std::sqrt(std::fabs(n));
      for (int mu = 0; mu < 4; ++mu) out.frame[a][mu] = xi[a][mu] / div;
    }
    Vec4 eta{1.0, -1.0, -1.0, -1.0};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        out.gram[a][b] = dot(out.frame[a], mat4_apply(g, out.frame[b]));
        double want = (a == b) ? eta[a] : 0.0;
        out.defect = std::max(out.defect, std::fabs(out.gram[a][b] - want));
      }
    return out;
  }

  // Orthonormal conformal tetrad e_a = Omega^-1 d_a (a rigid frame: constant
  // Gram). This realizes the orthonormal frame the teleparallel structure
  // needs; the Killing tetrads are not mutually orthogonal off the origin.
  Mat4 conformal_tetrad(const Vec4& x) const {
    double inv = 1.0 / omega(x);
    Mat4 out{};
    for (int a = 0; a < 4; ++a) out[a][a] = inv;
    return out;
  }

  struct KillingBasisSample {
    Vec4 point{};
    Mat4 xi{};                        // translation components xi_a^mu
    std::array<Vec4, 6> jmat{};       // rotation components, pairs (mu,nu), mu<nu
    double det_xi = 0.0;              // section-4 determinant at the point
  };

  KillingBasisSample killing_sample(const Vec4& x) const {
    KillingBasisSample s;
    s.point = x;
    s.xi = killing_translations(x);
    int w = 0;
    for (int m = 0; m < 4; ++m)
      for (int n = m + 1; n < 4; ++n) s.jmat[w++] = killing_rotation(m, n, x);
    s.det_xi = killing_det(x);
    return s;
  }
};

// ---------------------------------------------------------------------------
// Teleparallel frame machinery (chart-generic)
// ---------------------------------------------------------------------------

struct FrameField {
  std::function<Mat4(const Vec4&)> frame;                    // [a][mu] = e_a^mu
  std::function<std::array<Mat4, 4>(const Vec4&)> partials;  // [mu][a][nu], optional
};

struct FrameStructure {
  Mat4 gram{};                      // g(e_a, e_b)
  std::array<Mat4, 4> c{};          // [k][a][b]: [e_a, e_b] = c^k_{ab} e_k
  std::array<Mat4, 4> torsion{};    // T^k_{ab} = -c^k_{ab} (frame-parallel nabla)
  std::array<Mat4, 4> contorsion{}; // Delta^k_{ab}
  std::array<Mat4, 4> omega{};      // frame Levi-Civita: D_{e_a} e_b = omega^k_{ab} e_k
  double rel_residual = 0.0;        // max |omega + contorsion|
  double gram_derivative = 0.0;     // max |e_c(g(e_a,e_b))|, 0 for rigid frames
};

// Torsion from structure coefficients of the frame-parallel connection, the
// contorsion built from it, and the frame components of the Levi-Civita
// connection. With Gammabar = 0, REL reads omega = -Delta; that requires a
// rigid frame (constant Gram), which the machinery reports via gram_derivative.
inline FrameStructure frame_structure(const Chart& chart, const FrameField& ff,
                                      const Vec4& x) {
  double h = chart.fd_step;
  Mat4 e = ff.frame(x);
  Mat4 g = chart.g(x);
  std::array<Mat4, 4> de{};  // [mu][a][nu]
  if (ff.partials) {
    de = ff.partials(x);
  } else {
    for (int mu = 0; mu < 4; ++mu) {
      Vec4 xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      guard_stencil(chart, xp);
      guard_stencil(chart, xm);
      Mat4 ep = ff.frame(xp), em = ff.frame(xm);
      for (int a = 0; a < 4; ++a)
        for (int nu = 0; nu < 4; ++nu) de[mu][a][nu] = (ep[a][nu] - em[a][nu]) / (2 * h);
    }
  }
  FrameStructure out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out.gram[a][b] = dot(e[a], mat4_apply(g, e[b]));
  Mat4 E = mat4_transpose(e);
  if (std::fabs(mat4_det(E)) < 1e-12)
    throw BasisDegeneracyError("frame_structure: degenerate frame");
  Christoffel G = chart.christoffel_at(x);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Vec4 lie{}, dab{};
      for (int nu = 0; nu < 4; ++nu) {
        double l = 0.0, d = 0.0;
        for (int mu = 0; mu < 4; ++mu) {
          l += e[a][mu] * de[mu][b][nu] - e[b][mu] * de[mu][a][nu];
          d += e[a][mu] * de[mu][b][nu];
          for (int r = 0; r < 4; ++r) d += e[a][mu] * G[nu][mu][r] * e[b][r];
        }
        lie[nu] = l;
        dab[nu] = d;
      }
      Vec4 ck = mat4_solve(E, lie);
      Vec4 ok = mat4_solve(E, dab);
      for (int k = 0; k < 4; ++k) {
        out.c[k][a][b] = ck[k];
        out.torsion[k][a][b] = -ck[k];
        out.omega[k][a][b] = ok[k];
      }
    }
  // Gram derivative along the frame legs (rigidity diagnostic).
  {
    auto dg = chart.dg(x);
    for (int cidx = 0; cidx < 4; ++cidx)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          double v = 0.0;
          for (int mu = 0; mu < 4; ++mu)
            for (int m = 0; m < 4; ++m)
              for (int n = 0; n < 4; ++n)
                v += e[cidx][mu] * (de[mu][a][m] * g[m][n] * e[b][n] +
                                    e[a][m] * dg[mu][m][n] * e[b][n] +
                                    e[a][m] * g[m][n] * de[mu][b][n]);
          out.gram_derivative = std::max(out.gram_derivative, std::fabs(v));
        }
  }
  // Contorsion: Delta^k_{ab} = (1/2) Gi^{kl} (S_{alb} + S_{bla} + S_{lab}),
  // S_{lab} = Gram_{lm} T^m_{ab}.
  Mat4 Gi = mat4_inverse(out.gram);
  std::array<Mat4, 4> S{};
  for (int l = 0; l < 4; ++l)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int m = 0; m < 4; ++m) s += out.gram[l][m] * out.torsion[m][a][b];
        S[l][a][b] = s;
      }
  for (int k = 0; k < 4; ++k)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int l = 0; l < 4; ++l)
          s += Gi[k][l] * 0.5 * (S[a][l][b] + S[b][l][a] + S[l][a][b]);
        out.contorsion[k][a][b] = s;
        out.rel_residual =
            std::max(out.rel_residual, std::fabs(out.omega[k][a][b] + s));
      }
  return out;
}

// ---------------------------------------------------------------------------
// Generalized canonical energy-momentum tensor Theta = J_{Pi_a} (x) e^a
// ---------------------------------------------------------------------------

struct ThetaField {
  const Chart* chart = nullptr;
  // Per-label current components J^(a)_mu(x); the label a is the Killing index.
  std::function<Mat4(const Vec4&)> currents;  // [a][mu] = (J_{Pi_a})_mu
  // Coframe e^a used to glue the currents into a (1,1) tensor: [a][mu] = (e^a)_mu.
  std::function<Mat4(const Vec4&)> coframe;

  // Coordinate mixed components Theta^mu_nu = J^(a)mu (e^a)_nu.
  Mat4 mixed(const Vec4& x) const {
    Mat4 gi = mat4_inverse(chart->g(x));
    Mat4 J = currents(x), E = coframe(x);
    Mat4 out{};
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double s = 0.0;
        for (int a = 0; a < 4; ++a) {
          double jup = 0.0;
          for (int l = 0; l < 4; ++l) jup += gi[mu][l] * J[a][l];
          s += jup * E[a][nu];
        }
        out[mu][nu] = s;
      }
    return out;
  }
};

// Assemble Theta from four currents and the dual coframe of a frame field.
inline ThetaField assemble_theta(const Chart& chart,
                                 std::function<Mat4(const Vec4&)> currents,
                                 std::function<Mat4(const Vec4&)> frame) {
  ThetaField th;
  th.chart = &chart;
  th.currents = std::move(currents);
  th.coframe = [frame = std::move(frame)](const Vec4& x) {
    // dual coframe: (e^a)_mu solves e_b^mu (e^a)_mu = delta^a_b
    Mat4 e = frame(x);
    Mat4 inv = mat4_inverse(e);  // inv[mu][a]
    Mat4 out{};
    for (int a = 0; a < 4; ++a)
      for (int mu = 0; mu < 4; ++mu) out[a][mu] = inv[mu][a];
    return out;
  };
  return th;
}

struct TeleparallelDivergence {
  double frame_route = 0.0;   // max_b |e_a(Th^a_b) + D^a_{ai} Th^i_b - D^i_{ab} Th^a_i|
  double coord_route = 0.0;   // max_nu |(D_mu Theta^mu_nu) in frame components|
  double residual = 0.0;      // |frame_route - coord_route| entrywise max
};

// Both sides of the teleparallel divergence identity: the frame expansion of
// D.Theta using the contorsion of `ff` against the direct coordinate
// computation. Both vanish together when Theta is covariantly conserved.
inline TeleparallelDivergence teleparallel_divergence_check(const ThetaField& th,
                                                            const FrameField& ff,
                                                            const Vec4& x) {
  const Chart& chart = *th.chart;
  double h = chart.fd_step;
  FrameStructure fs = frame_structure(chart, ff, x);
  Mat4 e = ff.frame(x);
  // frame components Th^a_b = (e^a)_mu Theta^mu_nu e_b^nu
  auto theta_frame = [&](const Vec4& y) {
    Mat4 ey = ff.frame(y);
    Mat4 Ei = mat4_inverse(mat4_transpose(ey));
    Mat4 Tm = th.mixed(y);
    Mat4 out{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) s += Ei[a][mu] * Tm[mu][nu] * ey[b][nu];
        out[a][b] = s;
      }
    return out;
  };
  Mat4 Tf = theta_frame(x);
  // e_a(Th^a_b): directional derivatives along the frame legs
  std::array<Mat4, 4> dT{};
  for (int mu = 0; mu < 4; ++mu) {
    Vec4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    guard_stencil(chart, xp);
    guard_stencil(chart, xm);
    Mat4 Tp = theta_frame(xp), Tm2 = theta_frame(xm);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) dT[mu][a][b] = (Tp[a][b] - Tm2[a][b]) / (2 * h);
  }
  TeleparallelDivergence out;
  Vec4 frame_vals{}, coord_vals{};
  for (int b = 0; b < 4; ++b) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a) {
      double ea = 0.0;
      for (int mu = 0; mu < 4; ++mu) ea += e[a][mu] * dT[mu][a][b];
      s += ea;
      for (int i = 0; i < 4; ++i)
        s += fs.contorsion[a][a][i] * Tf[i][b] - fs.contorsion[i][a][b] * Tf[a][i];
    }
    frame_vals[b] = s;
    out.frame_route = std::max(out.frame_route, std::fabs(s));
  }
  // coordinate route: (D_mu Theta^mu_nu) converted to the frame leg b
  MixedTensorField asW{[&](const Vec4& y) { return th.mixed(y); }, false};
  Multivector div = divergence_mixed(asW, chart, x);
  for (int b = 0; b < 4; ++b) {
    double s = 0.0;
    for (int nu = 0; nu < 4; ++nu) s += div.coeff(1u << nu) * e[b][nu];
    coord_vals[b] = s;
    out.coord_route = std::max(out.coord_route, std::fabs(s));
  }
  for (int b = 0; b < 4; ++b)
    out.residual = std::max(out.residual, std::fabs(frame_vals[b] - coord_vals[b]));
  return out;
}

// Residual pair of (new4): per-label density conservation vs covariant
// conservation, which must vanish together.
struct DualFormResiduals {
  double density = 0.0;    // max_a |d_mu(sqrt(-g) J^(a)mu)|
  double covariant = 0.0;  // max_a |D_mu J^(a)mu|
};

inline DualFormResiduals theta_dual_form_check(const ThetaField& th, const Vec4& x) {
  const Chart& chart = *th.chart;
  double h = chart.fd_step;
  auto upper = [&](const Vec4& y) {
    Mat4 gi = mat4_inverse(chart.g(y));
    Mat4 J = th.currents(y);
    Mat4 out{};
    for (int a = 0; a < 4; ++a)
      for (int mu = 0; mu < 4; ++mu) {
        double s = 0.0;
        for (int l = 0; l < 4; ++l) s += gi[mu][l] * J[a][l];
        out[a][mu] = s;
      }
    return out;
  };
  DualFormResiduals out;
  Christoffel G = chart.christoffel_at(x);
  Mat4 U0 = upper(x);
  for (int a = 0; a < 4; ++a) {
    double dens = 0.0, cov = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      Vec4 xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      guard_stencil(chart, xp);
      guard_stencil(chart, xm);
      double sqp = std::sqrt(std::fabs(mat4_det(chart.g(xp))));
      double sqm = std::sqrt(std::fabs(mat4_det(chart.g(xm))));
      dens += (sqp * upper(xp)[a][mu] - sqm * upper(xm)[a][mu]) / (2 * h);
      cov += (upper(xp)[a][mu] - upper(xm)[a][mu]) / (2 * h);
      for (int l = 0; l < 4; ++l) cov += G[mu][mu][l] * U0[a][l];
    }
    double sq = std::sqrt(std::fabs(mat4_det(chart.g(x))));
    out.density = std::max(out.density, std::fabs(dens / sq));
    out.covariant = std::max(out.covariant, std::fabs(cov));
  }
  return out;
}

// The energy-momentum covector of the teleparallel structure: a pure data
// record, meaningful because all cotangent spaces are identified there.
struct MomentumCovector {
  std::array<double, 4> components{};
  std::array<std::string, 4> basis_labels{"E^0", "E^1", "E^2", "E^3"};
};

inline MomentumCovector covector_assemble(const std::array<double, 4>& charges) {
  MomentumCovector out;
  out.components = charges;
  return out;
}

}  // namespace dslab
