#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dslab/desitter.hpp"
#include "dslab/fields.hpp"
#include "dslab/komar.hpp"

using namespace dslab;

TEST_CASE("conformal factor and metric") {
  DeSitterModel ds(1.0);
  CHECK(ds.omega(Vec4{0, 0, 0, 0}) == 1.0);
  CHECK(ds.omega(Vec4{1, 0, 0, 0}) == Catch::Approx(4.0 / 3.0));
  Mat4 g0 = ds.metric(Vec4{0, 0, 0, 0});
  CHECK(g0[0][0] == 1.0);
  CHECK(g0[1][1] == -1.0);
  CHECK_THROWS_AS(ds.omega(Vec4{2, 0, 0, 0}), ChartDomainError);
  // interior restriction
  DeSitterModel inside(1.0, true);
  CHECK(inside.chart.domain(Vec4{0, 5, 0, 0}));     // sigma^2 = -25 < 4
  CHECK_FALSE(inside.chart.domain(Vec4{3, 0, 0, 0}));  // sigma^2 = 9 > 4
}

TEST_CASE("embedding") {
  DeSitterModel ds(1.0);
  Vec5 X = ds.embed(Vec4{0, 0, 0, 0});
  CHECK(X[0] == 0.0);
  CHECK(X[4] == -1.0);
  DeSitterModel ds2(2.0);
  CHECK(ds2.embed(Vec4{0, 0, 0, 0})[4] == -2.0);
  CHECK(std::fabs(ds.embedding_constraint(ds.embed(Vec4{0.7, -0.3, 0.2, 0.4}))) <
        1e-12);
  // analytic Jacobian against finite differences
  Vec4 x{0.3, 0.1, -0.2, 0.4};
  auto J = ds.embed_jacobian(x);
  double h = 1e-6;
  for (int mu = 0; mu < 4; ++mu) {
    Vec4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    Vec5 Xp = ds.embed(xp), Xm = ds.embed(xm);
    for (int A = 0; A < 5; ++A)
      CHECK(J[A][mu] == Catch::Approx((Xp[A] - Xm[A]) / (2 * h)).margin(1e-8));
  }
}

TEST_CASE("killing translations") {
  DeSitterModel ds(1.0);
  Mat4 xi0 = ds.killing_translations(Vec4{0, 0, 0, 0});
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m) CHECK(xi0[a][m] == (a == m ? 1.0 : 0.0));
  CHECK(ds.killing_translations(Vec4{1, 0, 0, 0})[0][0] == Catch::Approx(0.75));
  // analytic partials against finite differences
  Vec4 x{0.2, -0.4, 0.3, 0.1};
  auto dxi = ds.killing_translation_partials(x);
  double h = 1e-6;
  for (int nu = 0; nu < 4; ++nu) {
    Vec4 xp = x, xm = x;
    xp[nu] += h;
    xm[nu] -= h;
    Mat4 xp_m = ds.killing_translations(xp), xm_m = ds.killing_translations(xm);
    for (int a = 0; a < 4; ++a)
      for (int mu = 0; mu < 4; ++mu)
        CHECK(dxi[nu][a][mu] ==
              Catch::Approx((xp_m[a][mu] - xm_m[a][mu]) / (2 * h)).margin(1e-9));
  }
  // Killing residuals for all ten fields
  for (const VectorField& K : ds.all_killing_fields())
    CHECK(killing_residual(K, ds.chart, x) < 1e-8);
}

TEST_CASE("killing rotations") {
  DeSitterModel ds(1.0);
  for (int m = 0; m < 4; ++m)
    for (int n = m + 1; n < 4; ++n)
      for (double c : ds.killing_rotation(m, n, Vec4{0, 0, 0, 0}))
        CHECK(c == 0.0);
  // J_{01} at (0,1,0,0): x_0 = 0, x_1 = -1 -> components -x_1 d_0 = +d_0
  Vec4 v = ds.killing_rotation(0, 1, Vec4{0, 1, 0, 0});
  CHECK(v[0] == 1.0);
  CHECK(v[1] == 0.0);
}

TEST_CASE("killing determinant") {
  DeSitterModel ds(1.0);
  CHECK(ds.killing_det(Vec4{0, 0, 0, 0}) == Catch::Approx(1.0).margin(1e-14));
  CHECK(std::fabs(ds.killing_det(Vec4{2, 0, 0, 0})) < 1e-12);
  CHECK(std::fabs(ds.killing_det(Vec4{0, std::sqrt(2.0), 0, 0})) < 1e-12);
  // closed forms agree with the numeric determinants everywhere
  Vec4 x{1.1, 0.4, -0.6, 0.2};
  CHECK(ds.killing_det(x) == Catch::Approx(ds.killing_det_closed(x)).margin(1e-13));
  CHECK(ds.translation_det(x) ==
        Catch::Approx(ds.translation_det_closed(x)).margin(1e-13));
  // reduced polynomial on y = z = 0
  CHECK(ds.killing_det(Vec4{1.3, 0.5, 0, 0}) ==
        Catch::Approx(DeSitterModel::killing_det_reduced(1.3, 0.5)).margin(1e-13));
  // the det of the Killing-component matrix itself has zeros only at
  // sigma^2 = +-4 l^2; at sigma^2 = -2 it stays finite
  CHECK(ds.translation_det(Vec4{0, std::sqrt(2.0), 0, 0}) ==
        Catch::Approx(3.0 / 16.0).margin(1e-13));
}

TEST_CASE("hybrid connection") {
  DeSitterModel ds(1.0);
  CHECK_THROWS_AS(ds.hybrid_connection(Vec4{0, std::sqrt(2.0), 0, 0}),
                  BasisDegeneracyError);
  auto HG = ds.hybrid_connection(Vec4{0.5, 0.1, 0, 0});
  Christoffel G = ds.chart.christoffel_at(Vec4{0.5, 0.1, 0, 0});
  double diff = 0.0;
  for (int b = 0; b < 4; ++b)
    for (int mu = 0; mu < 4; ++mu)
      for (int a = 0; a < 4; ++a)
        diff = std::max(diff, std::fabs(HG[b][mu][a] - G[b][mu][a]));
  CHECK(diff > 1e-3);
  // defining relation: D_mu Pi_a = HG^b_{mu a} Pi_b, re-expanded
  Vec4 x{0.3, 0.2, -0.1, 0.15};
  auto HG2 = ds.hybrid_connection(x);
  Mat4 xi = ds.killing_translations(x);
  auto dxi = ds.killing_translation_partials(x);
  Christoffel G2 = ds.chart.christoffel_at(x);
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a)
      for (int n = 0; n < 4; ++n) {
        double lhs = dxi[mu][a][n];
        for (int r = 0; r < 4; ++r) lhs += G2[n][mu][r] * xi[a][r];
        double rhs = 0.0;
        for (int b = 0; b < 4; ++b) rhs += HG2[b][mu][a] * xi[b][n];
        CHECK(lhs == Catch::Approx(rhs).margin(1e-12));
      }
}

TEST_CASE("tetrads") {
  DeSitterModel ds(1.0);
  auto unit = ds.tetrad_from_killing(Vec4{0, 0, 0, 0}, DeSitterModel::TetradMode::Unit);
  auto lit = ds.tetrad_from_killing(Vec4{0, 0, 0, 0}, DeSitterModel::TetradMode::Literal);
  for (int m = 0; m < 4; ++m) {
    CHECK(unit.frame[0][m] == (m == 0 ? 1.0 : 0.0));
    CHECK(unit.frame[1][m] == (m == 1 ? 1.0 : 0.0));
    CHECK(lit.frame[0][m] == (m == 0 ? 1.0 : 0.0));
    CHECK(lit.frame[1][m] == (m == 1 ? -1.0 : 0.0));  // divided by g(Pi,Pi) = -1
  }
  CHECK(unit.defect < 1e-14);
  auto off =
      ds.tetrad_from_killing(Vec4{0.3, 0.2, 0.1, 0.05}, DeSitterModel::TetradMode::Unit);
  CHECK(off.defect > 1e-3);  // the Killing directions are not orthogonal here
}

TEST_CASE("teleparallel frame machinery") {
  Chart mink = make_minkowski();
  DeSitterModel ds(1.0);
  // coordinate frame on the flat chart: no torsion, no contorsion
  FrameField coord{[](const Vec4&) { return mat4_identity(); }, nullptr};
  FrameStructure fs = frame_structure(mink, coord, Vec4{0.2, 0.1, 0.4, 0.3});
  for (int k = 0; k < 4; ++k)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        CHECK(std::fabs(fs.torsion[k][a][b]) < 1e-12);
        CHECK(std::fabs(fs.contorsion[k][a][b]) < 1e-12);
      }
  // orthonormal conformal tetrad: rigid, contorsion relation closes
  FrameField conf{[&ds](const Vec4& x) { return ds.conformal_tetrad(x); }, nullptr};
  FrameStructure fc = frame_structure(ds.chart, conf, Vec4{0.3, 0.2, 0.1, 0.05});
  CHECK(fc.gram_derivative < 1e-8);
  CHECK(fc.rel_residual < 1e-8);
  for (int k = 0; k < 4; ++k)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        CHECK(fc.torsion[k][a][b] == Catch::Approx(-fc.torsion[k][b][a]).margin(1e-14));
  // the Killing tetrad is not rigid; the relation cannot close there
  FrameField kil{[&ds](const Vec4& x) {
                   return ds.tetrad_from_killing(x, DeSitterModel::TetradMode::Unit)
                       .frame;
                 },
                 nullptr};
  FrameStructure fk = frame_structure(ds.chart, kil, Vec4{0.3, 0.2, 0.1, 0.05});
  CHECK(fk.gram_derivative > 1e-2);
  CHECK(fk.rel_residual > 1e-3);
  FrameField degenerate{[](const Vec4&) {
                          Mat4 e{};
                          e[0] = {1, 0, 0, 0};
                          e[1] = {1, 0, 0, 0};
                          e[2] = {0, 0, 1, 0};
                          e[3] = {0, 0, 0, 1};
                          return e;
                        },
                        nullptr};
  CHECK_THROWS_AS(frame_structure(mink, degenerate, Vec4{0, 0, 0, 0}),
                  BasisDegeneracyError);
}

TEST_CASE("theta assembly and its conservation checks") {
  DeSitterModel ds(1.0);
  MixedTensorField Tein = einstein_tensor(ds.chart);
  auto currents = [&ds, Tein](const Vec4& x) {
    Mat4 out{};
    for (int a = 0; a < 4; ++a) {
      Multivector J =
          current_from_tensor(ds.killing_translation_field(a), Tein, ds.chart, x);
      for (int mu = 0; mu < 4; ++mu) out[a][mu] = J.coeff(1u << mu);
    }
    return out;
  };
  ThetaField th = assemble_theta(ds.chart, currents, [&ds](const Vec4& x) {
    return ds.killing_translations(x);
  });
  // with the constant-multiple Einstein tensor the assembled Theta is a
  // constant multiple of the identity
  Mat4 m = th.mixed(Vec4{0.4, -0.2, 0.1, 0.3});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(m[i][j] == Catch::Approx(i == j ? -3.0 : 0.0).margin(1e-8));
  FrameField conf{[&ds](const Vec4& x) { return ds.conformal_tetrad(x); }, nullptr};
  TeleparallelDivergence td =
      teleparallel_divergence_check(th, conf, Vec4{0.25, 0.1, -0.2, 0.15});
  CHECK(td.residual < 1e-6);
  DualFormResiduals dr = theta_dual_form_check(th, Vec4{0.25, 0.1, -0.2, 0.15});
  CHECK(dr.density < 1e-6);
  CHECK(dr.covariant < 1e-6);
}

TEST_CASE("killing basis sample") {
  DeSitterModel ds(1.0);
  auto s0 = ds.killing_sample(Vec4{0, 0, 0, 0});
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m) CHECK(s0.xi[a][m] == (a == m ? 1.0 : 0.0));
  CHECK(s0.det_xi == Catch::Approx(1.0).margin(1e-14));
  Vec4 x{0.7, -0.2, 0.4, 0.1};
  auto s = ds.killing_sample(x);
  CHECK(s.det_xi == Catch::Approx(ds.killing_det_closed(x)).margin(1e-10));
  CHECK(s.jmat[0][1] == Catch::Approx(x[0]));  // J_01 has x_0 on the d_1 slot
}

TEST_CASE("higher-order finite differences on demand") {
  DeSitterModel ds(1.0);
  Chart fd = ds.chart;
  fd.metric_partials = nullptr;
  fd.christoffel = nullptr;
  fd.christoffel_partials = nullptr;
  fd.fd_order = 4;
  fd.fd_step = 1e-3;
  Vec4 x{0.3, 0.1, -0.2, 0.15};
  auto a = ds.chart.dg(x);
  auto b = fd.dg(x);
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        worst = std::max(worst, std::fabs(a[mu][i][j] - b[mu][i][j]));
  CHECK(worst < 1e-10);
}

TEST_CASE("momentum covector record") {
  MomentumCovector c = covector_assemble({1.5, 0, -2, 0.25});
  CHECK(c.components[0] == 1.5);
  CHECK(c.components[2] == -2.0);
  CHECK(c.basis_labels[3] == "E^3");
}
