#include <catch2/catch_amalgamated.hpp>

#include "dslab/multivector.hpp"

using namespace dslab;

namespace {
SigPtr sig13() { return Signature::minkowski(4); }

Multivector g(const SigPtr& s, int i) { return Multivector::basis_vector(s, i); }
}  // namespace

TEST_CASE("signature construction and validation") {
  std::array<std::array<double, 5>, 5> m{};
  m[0][0] = 1;
  m[1][1] = -1;
  m[2][2] = -1;
  m[3][3] = -1;
  CHECK_NOTHROW(Signature::create(4, m));
  CHECK_THROWS_AS(Signature::create(3, m), KernelError);

  auto bad = m;
  bad[0][1] = 0.5;  // not symmetric
  CHECK_THROWS_AS(Signature::create(4, bad), KernelError);

  auto dege = m;
  dege[3][3] = 0.0;
  CHECK_THROWS_AS(Signature::create(4, dege), KernelError);

  SigPtr s = Signature::create(4, m);
  CHECK(s->orthonormal_fast_path());
  CHECK(s->volume_coeff() == 1.0);
}

TEST_CASE("generator products") {
  SigPtr s = sig13();
  CHECK((g(s, 0) * g(s, 0)).approx_equal(Multivector::scalar(s, 1.0), 0.0));
  CHECK((g(s, 1) * g(s, 1)).approx_equal(Multivector::scalar(s, -1.0), 0.0));
  // orthogonal generators anticommute: g0 g1 is the grade-2 blade
  Multivector p = g(s, 0) * g(s, 1);
  CHECK(p.coeff(0b0011) == 1.0);
  CHECK(p.is_homogeneous(2));
}

TEST_CASE("outer product") {
  SigPtr s = sig13();
  CHECK((g(s, 0) ^ g(s, 0)).max_abs_coeff() == 0.0);
  CHECK(((g(s, 0) ^ g(s, 1)) + (g(s, 1) ^ g(s, 0))).max_abs_coeff() == 0.0);
  Multivector one_plus = Multivector::scalar(s, 1.0) + g(s, 0);
  Multivector w = one_plus ^ g(s, 1);
  CHECK(w.coeff(0b0010) == 1.0);
  CHECK(w.coeff(0b0011) == 1.0);
}

TEST_CASE("left contraction") {
  SigPtr s = sig13();
  Multivector b01 = g(s, 0) ^ g(s, 1);
  CHECK(left_contraction(g(s, 0), b01).approx_equal(g(s, 1), 0.0));
  CHECK(left_contraction(g(s, 0), g(s, 0)).approx_equal(Multivector::scalar(s, 1.0), 0.0));
  // higher grade into lower vanishes
  CHECK(left_contraction(b01, g(s, 0)).max_abs_coeff() == 0.0);
}

TEST_CASE("scalar product") {
  SigPtr s = sig13();
  Multivector b01 = g(s, 0) ^ g(s, 1);
  CHECK(scalar_product(b01, b01) == -1.0);  // det [[1,0],[0,-1]]
  CHECK(scalar_product(g(s, 0), g(s, 1)) == 0.0);
  CHECK(scalar_product(Multivector::scalar(s, 2.0), Multivector::scalar(s, 3.0)) == 6.0);
  // cross-grade pairs contribute nothing
  CHECK(scalar_product(g(s, 0), b01) == 0.0);
}

TEST_CASE("reversion") {
  SigPtr s = sig13();
  Multivector b01 = g(s, 0) ^ g(s, 1);
  CHECK(b01.reversion().approx_equal(-b01, 0.0));
  CHECK(Multivector::scalar(s, 5.0).reversion().coeff(0) == 5.0);
  Multivector g5 = Multivector::blade(s, 0b1111, 1.0);
  CHECK(g5.reversion().approx_equal(g5, 0.0));  // (-1)^{4*3/2} = +1
}

TEST_CASE("hodge star") {
  SigPtr s = sig13();
  Multivector tau = Multivector::volume_element(s);
  CHECK(hodge_star(Multivector::scalar(s, 1.0)).approx_equal(tau, 0.0));
  CHECK(hodge_star(tau).approx_equal(Multivector::scalar(s, -1.0), 0.0));
  Multivector want = (g(s, 1) ^ g(s, 2)) ^ g(s, 3);
  CHECK(hodge_star(g(s, 0)).approx_equal(want, 0.0));
  for (int m = 0; m < 16; ++m) {
    Multivector b = Multivector::blade(s, m, 1.0);
    CHECK(hodge_star_inverse(hodge_star(b)).approx_equal(b, 0.0));
  }
}

TEST_CASE("grade projections reconstruct the element") {
  SigPtr s = sig13();
  Multivector a(s);
  for (int m = 0; m < 16; ++m) a.coeff_ref(m) = 0.1 * m - 0.7;
  Multivector sum(s);
  for (int k = 0; k <= 4; ++k) sum = sum + a.grade(k);
  CHECK(sum.approx_equal(a, 0.0));
  CHECK(a.grade(5).max_abs_coeff() == 0.0);
}

TEST_CASE("signature mismatch is rejected") {
  SigPtr a = Signature::minkowski(4);
  SigPtr b = Signature::minkowski(5);
  CHECK_THROWS_AS(geometric_product(Multivector::scalar(a, 1.0),
                                    Multivector::scalar(b, 1.0)),
                  KernelError);
  // equal-valued signatures from different allocations are compatible
  SigPtr c = Signature::minkowski(4);
  CHECK_NOTHROW(geometric_product(g(a, 0), g(c, 0)));
}

TEST_CASE("debug rendering") {
  SigPtr s = sig13();
  Multivector m = (g(s, 0) ^ g(s, 1)).scaled(1.0) + Multivector::scalar(s, 0.0);
  CHECK(m.to_string() == "1 g0^g1");
  CHECK(Multivector(s).to_string() == "0");
  Multivector mix = Multivector::scalar(s, 2.5) + g(s, 2);
  CHECK(mix.to_string() == "2.5 + 1 g2");
}

TEST_CASE("non-orthonormal metric round trip") {
  // a sheared Lorentzian metric; products must still satisfy the algebra
  std::array<std::array<double, 5>, 5> m{};
  m[0][0] = 2.0;
  m[0][1] = m[1][0] = 0.3;
  m[1][1] = -1.5;
  m[2][2] = -1.0;
  m[3][3] = -2.5;
  SigPtr s = Signature::create(4, m);
  CHECK_FALSE(s->orthonormal_fast_path());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Multivector anti = g(s, a) * g(s, b) + g(s, b) * g(s, a) -
                         Multivector::scalar(s, 2.0 * m[a][b]);
      CHECK(anti.max_abs_coeff() < 1e-13);
    }
  // scalar product agrees with the direct Gram determinant
  Multivector b01 = g(s, 0) ^ g(s, 1);
  double want = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  CHECK(scalar_product(b01, b01) == Catch::Approx(want).margin(1e-13));
  // hodge routes agree
  Multivector a(s);
  for (int k = 0; k < 16; ++k) a.coeff_ref(k) = 0.05 * k - 0.4;
  CHECK((hodge_star(a) - hodge_star_components(a)).max_abs_coeff() < 1e-12);
}

TEST_CASE("dim-5 algebra") {
  SigPtr s = Signature::minkowski(5);
  // tau^2 in Cl(1,4): grade-5 volume element squares to +1
  Multivector tau = Multivector::volume_element(s);
  Multivector sq = tau * tau;
  CHECK(sq.is_homogeneous(0));
  for (int m = 0; m < 32; ++m) {
    Multivector b = Multivector::blade(s, m, 1.0);
    CHECK(hodge_star_inverse(hodge_star(b)).approx_equal(b, 0.0));
  }
}
