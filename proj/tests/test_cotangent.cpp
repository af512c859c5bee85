#include <doctest.h>

#include "zetaforms/cotangent.hpp"

using namespace zetaforms;

TEST_CASE("cot_poly small cases") {
  RatPoly v1 = cot_poly(1);
  CHECK(v1.degree() == 1);
  CHECK(v1.c[1] == 1);
  CHECK(v1.c[0] == 0);

  // sin^3 z cot_3(z) = cos z
  RatPoly v3 = cot_poly(3);
  CHECK(v3.degree() == 1);
  CHECK(v3.c[1] == 1);

  RatPoly v5 = cot_poly(5);
  CHECK(v5.degree() == 3);
  CHECK(v5.eval(Rat(1)) == 1);
  CHECK(v5.odd_part_only());

  CHECK_THROWS_AS(cot_poly(2), InvalidInput);
  CHECK_THROWS_AS(cot_poly(0), InvalidInput);
}

TEST_CASE("V_beta structure for odd beta <= 15") {
  for (int beta = 3; beta <= 15; beta += 2) {
    RatPoly v = cot_poly(beta);
    CHECK(v.degree() == beta - 2);
    CHECK(v.eval(Rat(1)) == 1);
    CHECK(v.odd_part_only());  // V(-X) = -V(X)
  }
}

TEST_CASE("expand_symmetric") {
  RatPoly x = RatPoly::monomial(Rat(1), 1);
  auto c1 = expand_symmetric(x, 1);
  CHECK(c1[1] == Rat(1, 2));

  RatPoly w;  // X - X^3
  w.c = {Rat(0), Rat(1), Rat(0), Rat(-1)};
  auto c3 = expand_symmetric(w, 3);
  CHECK(c3[1] == Rat(1, 8));
  CHECK(c3[3] == Rat(-1, 8));

  auto z = expand_symmetric(RatPoly(), 3);
  CHECK(z[1] == 0);
  CHECK(z[3] == 0);

  RatPoly even;  // 1 + X^2 has an even part
  even.c = {Rat(1), Rat(0), Rat(1)};
  CHECK_THROWS_AS(expand_symmetric(even, 3), InvalidInput);

  RatPoly big = RatPoly::monomial(Rat(1), 5);
  CHECK_THROWS_AS(expand_symmetric(big, 3), InvalidInput);
}

TEST_CASE("Chebyshev and Laurent expansions agree for b <= 9") {
  RatPoly one_minus_x2;
  one_minus_x2.c = {Rat(1), Rat(0), Rat(-1)};
  for (int b = 1; b <= 9; b += 2) {
    for (int beta = 1; beta <= b; beta += 2) {
      RatPoly w = one_minus_x2.pow((b - beta) / 2) * cot_poly(beta);
      auto a = expand_symmetric(w, b);
      auto l = expand_symmetric_laurent(w, b);
      for (int lambda = 1; lambda <= b; lambda += 2) CHECK(a[lambda] == l[lambda]);
    }
  }
}

TEST_CASE("build_basis small and structural facts") {
  CotangentBasis b1 = build_basis(1);
  CHECK(b1.c[0][0] == Rat(1, 2));
  CHECK(b1.d[0][0] == Rat(2));

  CotangentBasis b3 = build_basis(3);
  CHECK(b3.c[0][0] == Rat(1, 8));
  CHECK(b3.c[0][1] == Rat(1, 2));
  CHECK(b3.c[1][0] == Rat(-1, 8));
  CHECK(b3.c[1][1] == Rat(0));

  for (int b = 1; b <= 13; b += 2) {
    CotangentBasis basis = build_basis(b);
    int k = basis.k();
    // exact inverse
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Rat s(0);
        for (int l = 0; l < k; ++l) s += basis.c[i][l] * basis.d[l][j];
        CHECK(s == Rat(i == j ? 1 : 0));
      }
    // top-row structure
    CHECK(basis.c_at(b, 1) != 0);
    for (int beta = 3; beta <= b; beta += 2) {
      CHECK(basis.c_at(b, beta) == 0);
      if (b >= 3) CHECK(basis.c_at(b - 2, beta) != 0);
    }
  }

  CHECK_THROWS_AS(build_basis(2), InvalidInput);
}

TEST_CASE("trigonometric identity spot check at 128 bits") {
  const mpfr_prec_t prec = 128;
  for (int b : {1, 3, 5}) {
    CotangentBasis basis = build_basis(b);
    for (int i = 0; i < 20; ++i) {
      Real z(0.11 + 0.07 * i, prec);
      Real s = sin(z), co = cos(z);
      for (int beta : basis.members) {
        RatPoly q = cot_derivative_poly(beta - 1);
        Real lhs = pow(s, b) * q.eval_real(co / s) / Real(factorial(beta - 1), prec);
        Real rhs(0, prec);
        for (int lambda : basis.members)
          rhs += Real(basis.c_at(lambda, beta), prec) * Real(2, prec) * cos(Real(lambda, prec) * z);
        CHECK(abs(lhs - rhs) < Real(1e-25, 64));
      }
    }
  }
}
