#pragma once

// Komar currents: F = dA for A = g(A, .), the explicit current
// J_A = -T(A) + (1/2) tr T A + d delta A + box A, the Maxwell-like equation
// residual, the Killing simplification, and the surface/volume quadratures
// including the Schwarzschild mass.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "dslab/chart.hpp"
#include "dslab/fields.hpp"
#include "dslab/linalg.hpp"

namespace dslab {

struct SpacetimeModel {
  const Chart* chart = nullptr;
  MixedTensorField T;   // matter energy-momentum, may be identically zero
  VectorField A_gen;    // diffeomorphism generator

  FormField lowered_A() const { return lowered_form(*chart, A_gen); }
  FormField field_strength() const {
    FormField A = lowered_A();
    return FormField{chart, 2, [this, A](const Vec4& y) {
                       return exterior_derivative(A, y);
                     }};
  }
};

// Einstein tensor of a chart as a mixed tensor field (covariantly conserved).
inline MixedTensorField einstein_tensor(const Chart& chart) {
  MixedTensorField G;
  G.symmetric = true;
  G.mixed = [&chart](const Vec4& x) {
    GeometryAtPoint geo = geometry_at(chart, x);
    Mat4 out{};
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        out[m][n] = geo.ricci_mixed[m][n] - 0.5 * ((m == n) ? geo.scalar : 0.0);
    return out;
  };
  return G;
}

// The de Sitter test matter: T := -G built from chart curvature (G = -T).
inline MixedTensorField einstein_matter(const Chart& chart) {
  MixedTensorField T;
  T.symmetric = true;
  MixedTensorField G = einstein_tensor(chart);
  T.mixed = [G](const Vec4& x) {
    Mat4 out = G.mixed(x);
    for (auto& row : out)
      for (auto& v : row) v = -v;
    return out;
  };
  return T;
}

// J_A assembled per the explicit energy-momentum form.
inline Multivector komar_current(const SpacetimeModel& model, const Vec4& x) {
  const Chart& chart = *model.chart;
  FormField A = model.lowered_A();
  Mat4 Tm = model.T.mixed(x);
  double trT = Tm[0][0] + Tm[1][1] + Tm[2][2] + Tm[3][3];
  Multivector Av = A.value(x);
  // (T(A))_n = A_m T^m_n
  Vec4 TA{};
  for (int n = 0; n < 4; ++n) {
    double s = 0.0;
    for (int m = 0; m < 4; ++m) s += Av.coeff(1u << m) * Tm[m][n];
    TA[n] = s;
  }
  SigPtr sig = chart.form_signature(x);
  Multivector TAv = Multivector::covector(sig, TA);
  FormField deltaA{&chart, 0, [A](const Vec4& y) { return codifferential(A, y); }};
  Multivector ddeltaA = exterior_derivative(deltaA, x, chart.fd_step2);
  Multivector box = dalembertian_form(A, x);
  return -TAv + Av.scaled(0.5 * trT) + ddeltaA + box;
}

// J_A = -delta F, the defining route.
inline Multivector komar_current_from_F(const SpacetimeModel& model, const Vec4& x) {
  FormField F = model.field_strength();
  return -codifferential(F, x, model.chart->fd_step2);
}

struct MaxwellResidual {
  double closedness = 0.0;  // |dF| (must vanish: F is exact)
  double residual = 0.0;    // |partial F - J_A|
};

inline MaxwellResidual maxwell_residual(const SpacetimeModel& model, const Vec4& x) {
  FormField F = model.field_strength();
  double h2 = model.chart->fd_step2;
  Multivector dF = exterior_derivative(F, x, h2);
  Multivector delF = codifferential(F, x, h2);
  Multivector J = komar_current(model, x);
  MaxwellResidual out;
  out.closedness = dF.max_abs_coeff();
  out.residual = (dF - delF - J).max_abs_coeff();
  return out;
}

struct KillingKomarForm {
  Multivector value;          // T(A) - (1/2) A tr T
  double killing_residual = 0.0;
  double delta_A = 0.0;       // |delta A| (vanishes for Killing A)
  double box_identity = 0.0;  // |box A - (-T(A) + (1/2) tr T A)|
};

inline KillingKomarForm killing_komar_form(const SpacetimeModel& model, const Vec4& x,
                                           double killing_tol = 1e-8) {
  const Chart& chart = *model.chart;
  KillingKomarForm out;
  out.killing_residual = killing_residual(model.A_gen, chart, x);
  if (out.killing_residual > killing_tol)
    throw std::runtime_error("killing_komar_form: generator is not Killing (residual " +
                             std::to_string(out.killing_residual) + ")");
  FormField A = model.lowered_A();
  Mat4 Tm = model.T.mixed(x);
  double trT = Tm[0][0] + Tm[1][1] + Tm[2][2] + Tm[3][3];
  Multivector Av = A.value(x);
  Vec4 TA{};
  for (int n = 0; n < 4; ++n) {
    double s = 0.0;
    for (int m = 0; m < 4; ++m) s += Av.coeff(1u << m) * Tm[m][n];
    TA[n] = s;
  }
  SigPtr sig = chart.form_signature(x);
  Multivector TAv = Multivector::covector(sig, TA);
  out.value = TAv - Av.scaled(0.5 * trT);
  out.delta_A = codifferential(A, x).max_abs_coeff();
  Multivector box = dalembertian_form(A, x);
  out.box_identity = (box - (-TAv + Av.scaled(0.5 * trT))).max_abs_coeff();
  return out;
}

// ---------------------------------------------------------------------------
// Quadratures
// ---------------------------------------------------------------------------

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;             // Richardson-extrapolated on the finest pair
  double refinement_error = 0.0;  // change of the extrapolated value per doubling
  double convergence_ratio = 0.0; // midpoint-correction shrink factor per doubling
};

namespace detail {

// Tensor-product midpoint rule at three nested grids with Richardson
// extrapolation (h^2 error model). The refinement test demands the midpoint
// correction shrink by at least ~4x per doubling once above rounding noise.
template <typename MidFn>
QuadratureResult richardson_levels(MidFn&& mid, int n) {
  double c0 = mid(n / 2), c1 = mid(n), c2 = mid(2 * n);
  double r1 = (4.0 * c1 - c0) / 3.0;
  double r2 = (4.0 * c2 - c1) / 3.0;
  QuadratureResult out;
  out.value = r2;
  out.refinement_error = std::fabs(r2 - r1);
  double d1 = std::fabs(c1 - c0), d2 = std::fabs(c2 - c1);
  double floor = 1e-13 * (1.0 + std::fabs(c2));
  out.convergence_ratio = (d2 > floor) ? d1 / d2 : 16.0;
  if (d2 > floor && out.convergence_ratio < 3.0)
    throw QuadratureError("quadrature refinement ratio test failed");
  return out;
}

template <typename F>
QuadratureResult midpoint_richardson_2d(F&& f, double a0, double a1, double b0,
                                        double b1, int n) {
  auto mid = [&](int nn) {
    double ha = (a1 - a0) / nn, hb = (b1 - b0) / nn;
    double s = 0.0;
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        s += f(a0 + (i + 0.5) * ha, b0 + (j + 0.5) * hb);
    return s * ha * hb;
  };
  return richardson_levels(mid, n);
}

template <typename F>
QuadratureResult midpoint_richardson_3d(F&& f, const std::array<double, 3>& lo,
                                        const std::array<double, 3>& hi, int n) {
  auto mid = [&](int nn) {
    double h0 = (hi[0] - lo[0]) / nn, h1 = (hi[1] - lo[1]) / nn, h2 = (hi[2] - lo[2]) / nn;
    double s = 0.0;
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j)
        for (int k = 0; k < nn; ++k)
          s += f(lo[0] + (i + 0.5) * h0, lo[1] + (j + 0.5) * h1, lo[2] + (k + 0.5) * h2);
    return s * h0 * h1 * h2;
  };
  return richardson_levels(mid, n);
}

}  // namespace detail

// (1/8 pi) of the flux of star F through the coordinate sphere r = R at t = t0
// on the Schwarzschild-style chart (coords t, r, theta, phi). Orientation is
// fixed outward-future so the Schwarzschild benchmark returns +m.
inline QuadratureResult komar_surface_energy(const SpacetimeModel& model, double radius,
                                             int n, double t0 = 0.0) {
  FormField F = model.field_strength();
  auto integrand = [&](double th, double ph) {
    Vec4 x{t0, radius, th, ph};
    Multivector sF = hodge_star(F.value(x));
    return sF.coeff((1u << 2) | (1u << 3));  // pull-back: dtheta^dphi coefficient
  };
  QuadratureResult q =
      detail::midpoint_richardson_2d(integrand, 0.0, M_PI, 0.0, 2.0 * M_PI, n);
  q.value /= 8.0 * M_PI;
  q.refinement_error /= 8.0 * M_PI;
  return q;
}

// (1/8 pi) Int_V star(T(A) - (1/2) A tr T - d delta A - box A) over a t = t0
// coordinate box; the integrand equals -star J_A.
inline QuadratureResult komar_volume_energy(const SpacetimeModel& model,
                                            const std::array<double, 3>& lo,
                                            const std::array<double, 3>& hi, int n,
                                            double t0 = 0.0) {
  auto integrand = [&](double x1, double x2, double x3) {
    Vec4 x{t0, x1, x2, x3};
    Multivector J = komar_current(model, x);
    Multivector s = hodge_star(-J);
    return s.coeff(0b1110);  // dx^1 ^ dx^2 ^ dx^3 coefficient
  };
  QuadratureResult q = detail::midpoint_richardson_3d(integrand, lo, hi, n);
  q.value /= 8.0 * M_PI;
  q.refinement_error /= 8.0 * M_PI;
  return q;
}

// Same box, Killing-case integrand (1/4 pi) star(T(A) - (1/2) A tr T).
inline QuadratureResult komar_volume_energy_killing(const SpacetimeModel& model,
                                                    const std::array<double, 3>& lo,
                                                    const std::array<double, 3>& hi,
                                                    int n, double t0 = 0.0) {
  const Chart& chart = *model.chart;
  FormField A = model.lowered_A();
  auto integrand = [&](double x1, double x2, double x3) {
    Vec4 x{t0, x1, x2, x3};
    Mat4 Tm = model.T.mixed(x);
    double trT = Tm[0][0] + Tm[1][1] + Tm[2][2] + Tm[3][3];
    Multivector Av = A.value(x);
    Vec4 TA{};
    for (int nn = 0; nn < 4; ++nn) {
      double s = 0.0;
      for (int m = 0; m < 4; ++m) s += Av.coeff(1u << m) * Tm[m][nn];
      TA[nn] = s;
    }
    Multivector v = Multivector::covector(chart.form_signature(x), TA) - Av.scaled(0.5 * trT);
    return hodge_star(v).coeff(0b1110);
  };
  QuadratureResult q = detail::midpoint_richardson_3d(integrand, lo, hi, n);
  q.value /= 4.0 * M_PI;
  q.refinement_error /= 4.0 * M_PI;
  return q;
}

// Boundary flux of star F over the six faces of the same coordinate box,
// (1/8 pi) normalization, for the Stokes consistency check.
inline double komar_box_boundary_flux(const SpacetimeModel& model,
                                      const std::array<double, 3>& lo,
                                      const std::array<double, 3>& hi, int n,
                                      double t0 = 0.0) {
  FormField F = model.field_strength();
  auto sF = [&](const Vec4& x) { return hodge_star(F.value(x)); };
  double total = 0.0;
  // d(star F)_{123} = d1 (sF)_{23} - d2 (sF)_{13} + d3 (sF)_{12}
  for (int axis = 1; axis <= 3; ++axis) {
    int j = (axis == 1) ? 2 : 1;
    int k = (axis == 3) ? 2 : 3;
    std::uint32_t face_mask = (1u << j) | (1u << k);
    double sign = (axis == 2) ? -1.0 : 1.0;
    for (int side = 0; side < 2; ++side) {
      double val = side ? hi[axis - 1] : lo[axis - 1];
      double ssign = side ? 1.0 : -1.0;
      auto f2 = [&](double aj, double ak) {
        Vec4 x{t0, 0, 0, 0};
        x[axis] = val;
        x[j] = aj;
        x[k] = ak;
        return sF(x).coeff(face_mask);
      };
      QuadratureResult q = detail::midpoint_richardson_2d(
          f2, lo[j - 1], hi[j - 1], lo[k - 1], hi[k - 1], n);
      total += sign * ssign * q.value;
    }
  }
  return total / (8.0 * M_PI);
}

// ---------------------------------------------------------------------------
// Conserved charges over t = const slice regions
// ---------------------------------------------------------------------------

struct SliceQuadrature {
  std::array<double, 3> lo{-1.0, -1.0, -1.0};
  std::array<double, 3> hi{1.0, 1.0, 1.0};
  int n = 16;  // per-dimension grid
};

// E(K) = (1/8 pi) Int_Sigma star J_K over a t = const coordinate box. The
// integrand restricted to the slice is sqrt(-g) J^0 d^3x.
inline QuadratureResult conserved_charge(const Chart& chart, const MixedTensorField& W,
                                         const VectorField& K,
                                         const SliceQuadrature& quad, double t0 = 0.0,
                                         double conservation_tol = 1e-6,
                                         bool validate = true) {
  if (validate) {
    Vec4 probe{t0, 0.37 * quad.hi[0], -0.21 * quad.hi[1], 0.11 * quad.hi[2]};
    double divres = divergence_mixed(W, chart, probe).max_abs_coeff();
    if (divres > conservation_tol)
      throw std::runtime_error("conserved_charge: tensor is not conserved (residual " +
                               std::to_string(divres) + ")");
    double kres = killing_residual(K, chart, probe);
    if (kres > 1e-6)
      throw std::runtime_error("conserved_charge: generator is not Killing (residual " +
                               std::to_string(kres) + ")");
  }
  auto density = [&](const Vec4& x) {
    Mat4 g = chart.g(x);
    Mat4 gi = mat4_inverse(g);
    Multivector J = current_from_tensor(K, W, chart, x);
    double j0 = 0.0;
    for (int m = 0; m < 4; ++m) j0 += gi[0][m] * J.coeff(1u << m);
    return std::sqrt(std::fabs(mat4_det(g))) * j0;
  };
  QuadratureResult q = detail::midpoint_richardson_3d(
      [&](double a, double b, double c) { return density({t0, a, b, c}); }, quad.lo,
      quad.hi, quad.n);
  q.value /= 8.0 * M_PI;
  q.refinement_error /= 8.0 * M_PI;
  return q;
}

struct ChargeConservation {
  double charge_before = 0.0;
  double charge_after = 0.0;
  double slice_shift = 0.0;  // |after - before|, includes genuine side flux
  double side_flux = 0.0;    // flux of star J through the timelike box sides
  double residual = 0.0;     // |shift + flux|: the Stokes statement of delta J = 0
};

// Conservation over the 4-box [t0, t0+dt] x box: the change of the slice
// charge balances the flux of star J_K through the timelike sides exactly
// when delta J_K = 0 (Stokes); the residual measures that balance.
inline ChargeConservation charge_conservation_check(const Chart& chart,
                                                    const MixedTensorField& W,
                                                    const VectorField& K,
                                                    const SliceQuadrature& quad,
                                                    double t0, double dt) {
  ChargeConservation out;
  out.charge_before = conserved_charge(chart, W, K, quad, t0).value;
  out.charge_after = conserved_charge(chart, W, K, quad, t0 + dt).value;
  out.slice_shift = std::fabs(out.charge_after - out.charge_before);
  auto starJ = [&](const Vec4& x) {
    return hodge_star(current_from_tensor(K, W, chart, x));
  };
  // d(star J)_{0123} = d_0 W_{123} - d_1 W_{023} + d_2 W_{013} - d_3 W_{012}
  double flux = 0.0;
  for (int axis = 1; axis <= 3; ++axis) {
    int j = (axis == 1) ? 2 : 1;
    int k = (axis == 3) ? 2 : 3;
    std::uint32_t mask = (1u << 0) | (1u << j) | (1u << k);  // dt ^ dx^j ^ dx^k
    double sign = (axis == 2) ? 1.0 : -1.0;  // alternating boundary orientation
    for (int side = 0; side < 2; ++side) {
      double val = side ? quad.hi[axis - 1] : quad.lo[axis - 1];
      double ssign = side ? 1.0 : -1.0;
      auto f = [&](double tt, double aj, double ak) {
        Vec4 x{tt, 0, 0, 0};
        x[axis] = val;
        x[j] = aj;
        x[k] = ak;
        return starJ(x).coeff(mask);
      };
      std::array<double, 3> lo{t0, quad.lo[j - 1], quad.lo[k - 1]};
      std::array<double, 3> hi{t0 + dt, quad.hi[j - 1], quad.hi[k - 1]};
      QuadratureResult q =
          detail::midpoint_richardson_3d(f, lo, hi, std::max(4, quad.n / 2));
      flux += sign * ssign * q.value;
    }
  }
  out.side_flux = flux / (8.0 * M_PI);
  out.residual = std::fabs(out.charge_after - out.charge_before + out.side_flux);
  return out;
}

}  // namespace dslab
