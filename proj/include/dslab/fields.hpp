#pragma once

// Field calculus on charts: exterior derivative, codifferential (both the
// star route and the Dirac contraction route), Lie derivatives, divergences
// of mixed tensors, the conserved-current identities, Ricci operator,
// covariant D'Alembertian, and relative-tensor covariant derivatives.
// All work happens in coordinate cobases.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "dslab/chart.hpp"
#include "dslab/linalg.hpp"
#include "dslab/multivector.hpp"

namespace dslab {

struct FormField {
  const Chart* chart = nullptr;
  int grade = 0;
  std::function<Multivector(const Vec4&)> value;
};

struct VectorField {
  std::function<Vec4(const Vec4&)> comps;                   // V^mu(x)
  std::function<Mat4(const Vec4&)> jacobian;                // [mu][lam] = d_mu V^lam, optional
  Mat4 jacobian_at(const Vec4& x, double h) const {
    if (jacobian) return jacobian(x);
    Mat4 out{};
    for (int mu = 0; mu < 4; ++mu) {
      Vec4 xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      Vec4 vp = comps(xp), vm = comps(xm);
      for (int l = 0; l < 4; ++l) out[mu][l] = (vp[l] - vm[l]) / (2 * h);
    }
    return out;
  }
};

struct MixedTensorField {
  std::function<Mat4(const Vec4&)> mixed;  // W^a_b(x), first index up
  bool symmetric = false;                  // fully raised components symmetric
};

inline void guard_stencil(const Chart& chart, const Vec4& x) {
  if (!chart.domain(x))
    throw ChartDomainError(chart.name + ": stencil point outside chart domain");
}

// Lower a vector field at a point: A_mu = g_{mu nu} V^nu, returned as grade-1.
inline Multivector lower_vector(const Chart& chart, const VectorField& V, const Vec4& x) {
  Mat4 g = chart.g(x);
  Vec4 low = mat4_apply(g, V.comps(x));
  return Multivector::covector(chart.form_signature(x), low);
}

inline FormField lowered_form(const Chart& chart, const VectorField& V) {
  return FormField{&chart, 1,
                   [&chart, V](const Vec4& y) { return lower_vector(chart, V, y); }};
}

// d f at x by central differences of the blade coefficients. A nonzero
// step_override selects the stencil width; compositions of differential
// operators pass the wider outer step so the inner stencil noise does not
// get amplified by a second division.
inline Multivector exterior_derivative(const FormField& f, const Vec4& x,
                                       double step_override = 0.0) {
  const Chart& chart = *f.chart;
  double h = step_override > 0.0 ? step_override : chart.fd_step;
  SigPtr sig = chart.form_signature(x);
  Multivector out(sig);
  int nb = sig->n_blades();
  for (int mu = 0; mu < 4; ++mu) {
    Vec4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    guard_stencil(chart, xp);
    guard_stencil(chart, xm);
    Multivector fp = f.value(xp), fm = f.value(xm);
    std::uint32_t bit = 1u << mu;
    for (int m = 0; m < nb; ++m) {
      double dc = (fp.coeff(m) - fm.coeff(m)) / (2 * h);
      if (dc == 0.0) continue;
      std::uint32_t um = static_cast<std::uint32_t>(m);
      if (um & bit) continue;
      out.coeff_ref(um | bit) += reorder_sign(bit, um) * dc;
    }
  }
  return out;
}

// Codifferential via (-1)^p star^-1 d star, Hodge stars evaluated pointwise.
inline Multivector codifferential(const FormField& f, const Vec4& x,
                                  double step_override = 0.0) {
  const Chart& chart = *f.chart;
  FormField starred{&chart, 4 - f.grade,
                    [f](const Vec4& y) { return hodge_star(f.value(y)); }};
  Multivector ds = exterior_derivative(starred, x, step_override);
  Multivector out = hodge_star_inverse(ds);
  return (f.grade & 1) ? -out : out;
}

namespace detail {

// Antisymmetric component A_{i0 i1 ...} of a p-form multivector (indices need
// not be sorted; repeated indices give zero).
inline double antisym_component(const Multivector& mv, const int* idx, int p) {
  std::uint32_t mask = 0;
  for (int t = 0; t < p; ++t) {
    if (mask >> idx[t] & 1) return 0.0;
    mask |= 1u << idx[t];
  }
  int inv = 0;
  for (int s = 0; s < p; ++s)
    for (int t = s + 1; t < p; ++t)
      if (idx[s] > idx[t]) ++inv;
  double sign = (inv & 1) ? -1.0 : 1.0;
  return sign * mv.coeff(mask);
}

// Covariant derivative of a p-form: returns (D_mu f) for each mu as p-forms
// over the signature at x.
inline std::array<Multivector, 4> covd_form(const FormField& f, const Vec4& x) {
  const Chart& chart = *f.chart;
  double h = chart.fd_step;
  SigPtr sig = chart.form_signature(x);
  Christoffel G = chart.christoffel_at(x);
  Multivector f0 = f.value(x);
  int p = f.grade;
  std::array<Multivector, 4> out{Multivector(sig), Multivector(sig), Multivector(sig),
                                 Multivector(sig)};
  int nb = sig->n_blades();
  for (int mu = 0; mu < 4; ++mu) {
    Vec4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    guard_stencil(chart, xp);
    guard_stencil(chart, xm);
    Multivector fp = f.value(xp), fm = f.value(xm);
    for (int m = 0; m < nb; ++m) {
      if (blade_grade(m) != p) continue;
      double v = (fp.coeff(m) - fm.coeff(m)) / (2 * h);
      int idx[5], k = 0;
      for (int t = 0; t < 4; ++t)
        if (m >> t & 1) idx[k++] = t;
      for (int slot = 0; slot < p; ++slot) {
        int orig = idx[slot];
        for (int lam = 0; lam < 4; ++lam) {
          int jdx[5];
          for (int t = 0; t < p; ++t) jdx[t] = idx[t];
          jdx[slot] = lam;
          v -= G[lam][mu][orig] * antisym_component(f0, jdx, p);
        }
      }
      out[mu].coeff_ref(m) = v;
    }
  }
  return out;
}

}  // namespace detail

// Dirac contraction route: partial lcont f = dx^mu lcont D_mu f; equals -delta f.
inline Multivector codifferential_contraction(const FormField& f, const Vec4& x) {
  SigPtr sig = f.chart->form_signature(x);
  auto covd = detail::covd_form(f, x);
  Multivector acc(sig);
  for (int mu = 0; mu < 4; ++mu)
    acc = acc + left_contraction(Multivector::basis_vector(sig, mu), covd[mu]);
  return -acc;
}

struct DiracResult {
  Multivector d_part;      // d f
  Multivector delta_part;  // delta f
  Multivector total;       // d f - delta f
};

inline DiracResult dirac_apply(const FormField& f, const Vec4& x) {
  DiracResult r;
  SigPtr sig = f.chart->form_signature(x);
  r.d_part = (f.grade < 4) ? exterior_derivative(f, x) : Multivector(sig);
  r.delta_part = (f.grade > 0) ? codifferential(f, x) : Multivector(sig);
  r.total = r.d_part - r.delta_part;
  return r;
}

// Cartan formula: L_xi f = xi lcont df + d(xi lcont f).
inline Multivector lie_derivative(const VectorField& xi, const FormField& f,
                                  const Vec4& x) {
  const Chart& chart = *f.chart;
  Multivector t1 = (f.grade < 4)
                       ? interior_vector(xi.comps(x).data(), exterior_derivative(f, x))
                       : Multivector(chart.form_signature(x));
  FormField inner{&chart, f.grade - 1, [&xi, &f](const Vec4& y) {
                    return interior_vector(xi.comps(y).data(), f.value(y));
                  }};
  Multivector t2 = (f.grade > 0) ? exterior_derivative(inner, x)
                                 : Multivector(chart.form_signature(x));
  return t1 + t2;
}

// (L_xi g)_{mn} by the component formula.
inline Mat4 lie_derivative_metric(const VectorField& xi, const Chart& chart,
                                  const Vec4& x) {
  Mat4 g = chart.g(x);
  auto dg = chart.dg(x);
  Vec4 v = xi.comps(x);
  Mat4 dv = xi.jacobian_at(x, chart.fd_step);
  Mat4 out{};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l)
        s += v[l] * dg[l][m][n] + g[l][n] * dv[m][l] + g[m][l] * dv[n][l];
      out[m][n] = s;
    }
  return out;
}

// (L_xi g)_{mn} = D_m xi_n + D_n xi_m, the covariant route.
inline Mat4 lie_derivative_metric_covariant(const VectorField& xi, const Chart& chart,
                                            const Vec4& x) {
  Mat4 g = chart.g(x);
  Christoffel G = chart.christoffel_at(x);
  double h = chart.fd_step;
  Vec4 v = xi.comps(x);
  Mat4 dv = xi.jacobian_at(x, h);
  auto dg = chart.dg(x);
  // xi_n = g_{nl} v^l ; d_m xi_n = dg[m][n][l] v^l + g_{nl} dv[m][l]
  Mat4 dxl{};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double s = 0.0;
      for (int l = 0; l < 4; ++l) s += dg[m][n][l] * v[l] + g[n][l] * dv[m][l];
      dxl[m][n] = s;
    }
  Vec4 xl = mat4_apply(g, v);
  Mat4 out{};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double dm = dxl[m][n], dn = dxl[n][m];
      for (int l = 0; l < 4; ++l) {
        dm -= G[l][m][n] * xl[l];
        dn -= G[l][n][m] * xl[l];
      }
      out[m][n] = dm + dn;
    }
  return out;
}

inline double killing_residual(const VectorField& xi, const Chart& chart, const Vec4& x) {
  Mat4 L = lie_derivative_metric(xi, chart, x);
  double w = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) w = std::max(w, std::fabs(L[m][n]));
  return w;
}

// (D_a W^a_b) theta^b in coordinate components.
inline Multivector divergence_mixed(const MixedTensorField& W, const Chart& chart,
                                    const Vec4& x) {
  double h = chart.fd_step;
  Christoffel G = chart.christoffel_at(x);
  Mat4 W0 = W.mixed(x);
  std::array<Mat4, 4> dW{};
  for (int m = 0; m < 4; ++m) {
    Vec4 xp = x, xm = x;
    xp[m] += h;
    xm[m] -= h;
    guard_stencil(chart, xp);
    guard_stencil(chart, xm);
    Mat4 Wp = W.mixed(xp), Wm = W.mixed(xm);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) dW[m][a][b] = (Wp[a][b] - Wm[a][b]) / (2 * h);
  }
  Vec4 div{};
  for (int b = 0; b < 4; ++b) {
    double s = 0.0;
    for (int a = 0; a < 4; ++a) {
      s += dW[a][a][b];
      for (int l = 0; l < 4; ++l) s += G[a][a][l] * W0[l][b] - G[l][a][b] * W0[a][l];
    }
    div[b] = s;
  }
  return Multivector::covector(chart.form_signature(x), div);
}

// J_V with components J_b = V^a W_{ab} = V^a g_{al} W^l_b.
inline Multivector current_from_tensor(const VectorField& V, const MixedTensorField& W,
                                       const Chart& chart, const Vec4& x) {
  Mat4 g = chart.g(x);
  Mat4 Wm = W.mixed(x);
  Vec4 v = V.comps(x);
  Vec4 low = mat4_apply(g, v);  // V^a g_{al}
  Vec4 j{};
  for (int b = 0; b < 4; ++b) {
    double s = 0.0;
    for (int l = 0; l < 4; ++l) s += low[l] * Wm[l][b];
    j[b] = s;
  }
  return Multivector::covector(chart.form_signature(x), j);
}

struct DivergenceRelation {
  double lhs = 0.0;        // (L_V g)_{mn} W^{mn} * vol coefficient
  double rhs = 0.0;        // 2 d(star J_V) - 2 star[(D.W)(V)] on the volume blade
  double residual = 0.0;
};

// The scalar identity (L_V g)(e_a,e_b) W^{ab} tau = 2 d star J_V - 2 star[(D.W)(V)].
inline DivergenceRelation divergence_relation_check(const VectorField& V,
                                                    const MixedTensorField& W,
                                                    const Chart& chart, const Vec4& x) {
  Mat4 g = chart.g(x);
  Mat4 gi = mat4_inverse(g);
  SigPtr sig = Signature::from_mat4(gi);
  double volc = sig->volume_coeff();
  Mat4 Lg = lie_derivative_metric(V, chart, x);
  Mat4 Wm = W.mixed(x);
  // W^{mn} = W^m_l g^{ln}
  double lhs = 0.0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double Wup = 0.0;
      for (int l = 0; l < 4; ++l) Wup += Wm[m][l] * gi[l][n];
      lhs += Lg[m][n] * Wup;
    }
  FormField sJ{&chart, 3, [&](const Vec4& y) {
                 return hodge_star(current_from_tensor(V, W, chart, y));
               }};
  Multivector dsJ = exterior_derivative(sJ, x);
  double c_dsJ = dsJ.coeff(0xF);
  Multivector divW = divergence_mixed(W, chart, x);
  double scal = 0.0;
  Vec4 v = V.comps(x);
  for (int b = 0; b < 4; ++b) scal += divW.coeff(1u << b) * v[b];
  DivergenceRelation out;
  out.lhs = lhs * volc;
  out.rhs = 2.0 * c_dsJ - 2.0 * scal * volc;
  out.residual = std::fabs(out.lhs - out.rhs);
  return out;
}

// Conformal-Killing variant: star(lambda tr W) = d star J_V - star[(D.W)(V)].
inline double conformal_relation_residual(const VectorField& V, const MixedTensorField& W,
                                          double lambda, const Chart& chart,
                                          const Vec4& x) {
  SigPtr sig = chart.form_signature(x);
  double volc = sig->volume_coeff();
  Mat4 Wm = W.mixed(x);
  double tr = Wm[0][0] + Wm[1][1] + Wm[2][2] + Wm[3][3];
  FormField sJ{&chart, 3, [&](const Vec4& y) {
                 return hodge_star(current_from_tensor(V, W, chart, y));
               }};
  double c_dsJ = exterior_derivative(sJ, x).coeff(0xF);
  Multivector divW = divergence_mixed(W, chart, x);
  double scal = 0.0;
  Vec4 v = V.comps(x);
  for (int b = 0; b < 4; ++b) scal += divW.coeff(1u << b) * v[b];
  return std::fabs(lambda * tr * volc - (c_dsJ - scal * volc));
}

// Ricci operator via the commutator form: (1/2) dx^a dx^b [D_a, D_b] dx^mu,
// assembled with Clifford products. Matches R^mu_nu dx^nu from geometry_at.
inline Multivector ricci_operator_apply(const Chart& chart, int mu, const Vec4& x) {
  SigPtr sig = chart.form_signature(x);
  Christoffel G = chart.christoffel_at(x);
  ChristoffelPartials dG = chart.christoffel_partials_at(x);
  Multivector total(sig);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      Vec4 comm{};
      for (int n = 0; n < 4; ++n) {
        double t = -dG[a][mu][b][n] + dG[b][mu][a][n];
        for (int l = 0; l < 4; ++l) {
          t += -G[l][a][b] * (-G[mu][l][n]) - G[l][a][n] * (-G[mu][b][l]);
          t -= -G[l][b][a] * (-G[mu][l][n]) - G[l][b][n] * (-G[mu][a][l]);
        }
        comm[n] = t;
      }
      std::uint32_t mask = (1u << a) | (1u << b);
      // dx^a ^ dx^b; for a > b the reorder sign carries the swap
      Multivector biv = Multivector::blade(sig, mask, reorder_sign(1u << a, 1u << b));
      total = total + geometric_product(biv, Multivector::covector(sig, comm)).scaled(0.5);
    }
  return total;
}

// Covariant D'Alembertian, component route: g^{ab} D_a D_b on the form components.
inline Multivector dalembertian_form(const FormField& f, const Vec4& x) {
  const Chart& chart = *f.chart;
  double h = chart.fd_step2;  // outer layer of a nested stencil
  SigPtr sig = chart.form_signature(x);
  Mat4 gi = mat4_inverse(chart.g(x));
  Christoffel G = chart.christoffel_at(x);
  auto B0 = detail::covd_form(f, x);  // (D_b f) at x
  int p = f.grade;
  // dB[a][b] = d_a (D_b f), p-form coefficients by finite differences
  std::array<std::array<Multivector, 4>, 4> dB;
  for (int a = 0; a < 4; ++a) {
    Vec4 xp = x, xm = x;
    xp[a] += h;
    xm[a] -= h;
    guard_stencil(chart, xp);
    guard_stencil(chart, xm);
    auto Bp = detail::covd_form(f, xp);
    auto Bm = detail::covd_form(f, xm);
    for (int b = 0; b < 4; ++b) {
      Multivector d(sig);
      for (int m = 0; m < sig->n_blades(); ++m)
        d.coeff_ref(m) = (Bp[b].coeff(m) - Bm[b].coeff(m)) / (2 * h);
      dB[a][b] = d;
    }
  }
  Multivector out(sig);
  int nb = sig->n_blades();
  for (int m = 0; m < nb; ++m) {
    if (blade_grade(m) != p) continue;
    int idx[5], k = 0;
    for (int t = 0; t < 4; ++t)
      if (m >> t & 1) idx[k++] = t;
    double acc = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (gi[a][b] == 0.0) continue;
        double cov = dB[a][b].coeff(m);
        for (int l = 0; l < 4; ++l) cov -= G[l][a][b] * B0[l].coeff(m);
        for (int slot = 0; slot < p; ++slot) {
          int orig = idx[slot];
          for (int l = 0; l < 4; ++l) {
            int jdx[5];
            for (int t = 0; t < p; ++t) jdx[t] = idx[t];
            jdx[slot] = l;
            cov -= G[l][a][orig] * detail::antisym_component(B0[b], jdx, p);
          }
        }
        acc += gi[a][b] * cov;
      }
    out.coeff_ref(m) = acc;
  }
  return out;
}

// partial^2 f = -(d delta + delta d) f, via the exterior machinery.
inline Multivector dirac_square(const FormField& f, const Vec4& x) {
  const Chart& chart = *f.chart;
  SigPtr sig = chart.form_signature(x);
  Multivector ddel(sig), deld(sig);
  if (f.grade > 0) {
    FormField delf{&chart, f.grade - 1,
                   [f](const Vec4& y) { return codifferential(f, y); }};
    ddel = exterior_derivative(delf, x, chart.fd_step2);
  }
  if (f.grade < 4) {
    FormField df{&chart, f.grade + 1,
                 [f](const Vec4& y) { return exterior_derivative(f, y); }};
    deld = codifferential(df, x, chart.fd_step2);
  }
  return -(ddel + deld);
}

// ---------------------------------------------------------------------------
// Relative tensors (weight-carrying densities)
// ---------------------------------------------------------------------------

// D_k of a weight-w relative scalar.
inline Vec4 relative_scalar_covderiv(const Chart& chart,
                                     const std::function<double(const Vec4&)>& a,
                                     int weight, const Vec4& x) {
  double h = chart.fd_step;
  Christoffel G = chart.christoffel_at(x);
  double a0 = a(x);
  Vec4 out{};
  for (int k = 0; k < 4; ++k) {
    Vec4 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    guard_stencil(chart, xp);
    guard_stencil(chart, xm);
    double d = (a(xp) - a(xm)) / (2 * h);
    double tr = 0.0;
    for (int s = 0; s < 4; ++s) tr += G[s][k][s];
    out[k] = d - weight * tr * a0;
  }
  return out;
}

// D_k of a weight-w relative (2,0) tensor; returns [k][mu][nu].
inline std::array<Mat4, 4> relative_tensor20_covderiv(
    const Chart& chart, const std::function<Mat4(const Vec4&)>& A, int weight,
    const Vec4& x) {
  double h = chart.fd_step;
  Christoffel G = chart.christoffel_at(x);
  Mat4 A0 = A(x);
  std::array<Mat4, 4> out{};
  double trG[4];
  for (int k = 0; k < 4; ++k) {
    trG[k] = 0.0;
    for (int s = 0; s < 4; ++s) trG[k] += G[s][k][s];
  }
  for (int k = 0; k < 4; ++k) {
    Vec4 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    guard_stencil(chart, xp);
    guard_stencil(chart, xm);
    Mat4 Ap = A(xp), Am = A(xm);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double v = (Ap[mu][nu] - Am[mu][nu]) / (2 * h);
        for (int i = 0; i < 4; ++i)
          v += G[mu][i][k] * A0[i][nu] + G[nu][i][k] * A0[mu][i];
        v -= weight * trG[k] * A0[mu][nu];
        out[k][mu][nu] = v;
      }
  }
  return out;
}

// Residual of d_nu (sqrt(-g) T^{mu nu}) + Gamma^mu_{nu a} sqrt(-g) T^{a nu} = 0,
// the density form of D.T = 0 used in the single-pole reduction.
inline double density_conservation_residual(const Chart& chart,
                                            const MixedTensorField& T, const Vec4& x) {
  double h = chart.fd_step;
  Christoffel G = chart.christoffel_at(x);
  auto density = [&](const Vec4& y) {
    Mat4 g = chart.g(y);
    Mat4 gi = mat4_inverse(g);
    Mat4 Tm = T.mixed(y);
    double sq = std::sqrt(std::fabs(mat4_det(g)));
    Mat4 out{};
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double up = 0.0;
        for (int l = 0; l < 4; ++l) up += Tm[mu][l] * gi[l][nu];
        out[mu][nu] = sq * up;
      }
    return out;
  };
  Mat4 D0 = density(x);
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    double s = 0.0;
    for (int nu = 0; nu < 4; ++nu) {
      Vec4 xp = x, xm = x;
      xp[nu] += h;
      xm[nu] -= h;
      guard_stencil(chart, xp);
      guard_stencil(chart, xm);
      s += (density(xp)[mu][nu] - density(xm)[mu][nu]) / (2 * h);
      for (int a = 0; a < 4; ++a) s += G[mu][nu][a] * D0[a][nu];
    }
    worst = std::max(worst, std::fabs(s));
  }
  return worst;
}

}  // namespace dslab
