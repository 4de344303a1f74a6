#include <catch2/catch_amalgamated.hpp>

#include "dslab/so14.hpp"

using namespace dslab;

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(7, 2).str() == "7/2");
}

TEST_CASE("generators") {
  auto gens = build_generators();
  REQUIRE(gens.size() == 10);
  for (const auto& g : gens) CHECK(eta_antisymmetric(g.matrix));
  // pinned action: J_01 applied to (1,0,0,0,0) gives (0,1,0,0,0)
  Mat5r M = so14_generator_matrix(0, 1);
  CHECK(M[1][0] == Rational(1));
  for (int d = 0; d < 5; ++d)
    if (d != 1) CHECK(M[d][0] == Rational(0));
  // label antisymmetry
  CHECK(mat5r_equal(so14_J(1, 0), mat5r_scale(so14_J(0, 1), Rational(-1))));
}

TEST_CASE("commutator table is exact") {
  auto table = commutator_table();
  REQUIRE(table.size() == 45);
  for (const auto& r : table) {
    INFO("pair J" << r.left[0] << r.left[1] << ", J" << r.right[0] << r.right[1]);
    CHECK(r.exact_match);
  }
  // pinned brackets
  CHECK(mat5r_equal(vf_bracket(so14_J(0, 4), so14_J(1, 4)), so14_J(0, 1)));
  CHECK(mat5r_is_zero(vf_bracket(so14_J(1, 2), so14_J(3, 4))));
  Mat5r P0 = mat5r_scale(so14_J(0, 4), Rational(1, 2));
  Mat5r P1 = mat5r_scale(so14_J(1, 4), Rational(1, 2));
  CHECK(mat5r_equal(vf_bracket(P0, P1), mat5r_scale(so14_J(0, 1), Rational(1, 4))));
}

TEST_CASE("casimirs commute with every generator") {
  for (long long l : {1, 2}) {
    CasimirReport c = casimir_check(Rational(l));
    CHECK(c.I1_central);
    CHECK(c.I2_central);
    CHECK(c.W4_matches_m7);
    // in the defining representation I1 is a multiple of the identity and
    // the quartic invariant vanishes
    for (int i = 0; i < 5; ++i) {
      CHECK(c.I1_diag[i] == c.I1_diag[0]);
      CHECK(c.I2_diag[i] == Rational(0));
    }
  }
  CasimirReport c1 = casimir_check(Rational(1));
  CasimirReport c2 = casimir_check(Rational(2));
  CHECK(mat5r_equal(c2.I1, mat5r_scale(c1.I1, Rational(1, 4))));
  CHECK(c1.I1_diag[0] == Rational(-4));
}

TEST_CASE("contraction scaling") {
  ContractionReport r = contraction_scaling({1, 10, 100});
  CHECK(r.bracket_law_exact);
  CHECK(r.ratios_exact);
  CHECK(r.rotations_l_independent);
}

TEST_CASE("pushforward identities") {
  DeSitterModel ds(1.0);
  CHECK(ambient_pushforward_residual(ds, Vec4{0, 0, 0, 0}) < 1e-14);
  CHECK(ambient_pushforward_residual(ds, Vec4{0.4, -0.3, 0.2, 0.1}) < 1e-12);
  DeSitterModel ds3(3.0);
  CHECK(ambient_pushforward_residual(ds3, Vec4{1.1, 0.4, -0.8, 0.3}) < 1e-12);
  CHECK(pushforward_tangency_residual(ds, Vec4{0.4, -0.3, 0.2, 0.1}) < 1e-10);
}

TEST_CASE("chart-field brackets match the exact table") {
  DeSitterModel ds(1.0);
  CHECK(field_bracket_residual(ds, Vec4{0.3, 0.2, -0.1, 0.15}) < 1e-7);
  DeSitterModel ds2(2.0);
  CHECK(field_bracket_residual(ds2, Vec4{0.5, -0.4, 0.2, 0.3}) < 1e-7);
}
