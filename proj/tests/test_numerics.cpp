#include <doctest.h>

#include "zetaforms/roots.hpp"
#include "zetaforms/special.hpp"

using namespace zetaforms;

TEST_CASE("lcm_d basics and divisibility") {
  CHECK(lcm_d(1) == 1);
  CHECK(lcm_d(4) == 12);
  // independent oracle: fold lcm over 1..10
  Int fold = 1;
  for (unsigned long j = 1; j <= 10; ++j) mpz_lcm_ui(fold.get_mpz_t(), fold.get_mpz_t(), j);
  CHECK(fold == 2520);
  CHECK(lcm_d(10) == fold);
  CHECK_THROWS_AS(lcm_d(0), InvalidInput);

  for (unsigned long k = 2; k <= 40; ++k) {
    Int dk = lcm_d(k);
    for (unsigned long j = 1; j <= k; ++j) CHECK(dk % j == 0);
    // the ratio d_k / d_{k-1} is 1 or a prime power
    Int ratio = dk / lcm_d(k - 1);
    if (ratio != 1) {
      Int p = 0;
      for (Int q = 2; q * q <= ratio; ++q)
        if (ratio % q == 0) { p = q; break; }
      if (p == 0) p = ratio;  // ratio itself prime
      Int rem = ratio;
      while (rem % p == 0) rem /= p;
      CHECK(rem == 1);
    }
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rat(1));
  CHECK(bernoulli(1) == Rat(-1, 2));
  CHECK(bernoulli(12) == Rat(-691, 2730));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(5) == 0);
  // recurrence identity sum_{j<=m} C(m+1,j) B_j = 0 re-checked directly
  for (unsigned long m = 1; m <= 24; ++m) {
    Rat s(0);
    for (unsigned long j = 0; j <= m; ++j) s += Rat(binomial(m + 1, j)) * bernoulli(j);
    CHECK(s == 0);
  }
}

TEST_CASE("zeta_int against closed forms and the direct series") {
  mpfr_prec_t prec = 256;
  Real pi = Real::pi(prec);
  CHECK(abs(zeta_int(2, prec) - pi * pi / Real(6, prec)) < Real::pow2(-240, 64));

  // zeta(3) to 20 digits
  Real z3 = zeta_int(3, 128);
  Real want = Real(0L, 128);
  mpfr_set_str(want.raw(), "1.2020569031595942854", 10, MPFR_RNDN);
  CHECK(abs(z3 - want) < Real(1e-19, 64));

  // direct series partial sum with integral tail bracket as oracle
  {
    long s = 3, L = 4000;
    Rat head(0);
    for (long v = 1; v <= L; ++v) head += Rat(Int(1), pow_int(Int(v), s));
    Real lo = Real(head, 256);
    Real hi = lo + Real(Rat(1, 2 * (L) * (L)), 256) + Real(Rat(1, 1), 256) / Real(L * L * L, 256);
    Real integral_lo = Real(Rat(1), 256) / (Real(2, 256) * Real(L + 1, 256) * Real(L + 1, 256));
    CHECK(zeta_int(3, 256) > lo + integral_lo);
    CHECK(zeta_int(3, 256) < hi);
  }

  CHECK_THROWS_AS(zeta_int(1, prec), InvalidInput);
  CHECK_THROWS_AS(zeta_int(0, prec), InvalidInput);

  // even values match |B_2m| (2 pi)^{2m} / (2 (2m)!)
  for (long m = 1; m <= 10; ++m) {
    Real closed = Real(abs(bernoulli(2 * m)), prec) * pow(Real(2, prec) * pi, 2 * m) /
                  (Real(2, prec) * Real(factorial(2 * m), prec));
    CHECK(abs(zeta_int(2 * m, prec) - closed) / closed < Real::pow2(-240, 64));
  }
}

TEST_CASE("zeta_tail consistency") {
  // zeta(s) = sum_{v<=L} v^{-s} + zeta_tail(s, L)
  for (long s : {2L, 5L, 17L}) {
    for (long L : {1L, 7L, 40L}) {
      Rat head(0);
      for (long v = 1; v <= L; ++v) head += Rat(Int(1), pow_int(Int(v), s));
      Real whole = Real(head, 256) + zeta_tail(s, L, 256);
      CHECK(abs(whole - zeta_int(s, 256)) < Real::pow2(-236, 64));
    }
  }
}

TEST_CASE("power_partial_sum") {
  CHECK(power_partial_sum(0, 3) == 0);
  CHECK(power_partial_sum(3, 1) == Rat(11, 6));
  CHECK(power_partial_sum(2, 2) == Rat(5, 4));
}

TEST_CASE("real_root_refine") {
  RatPoly p;  // X^2 - 2
  p.c = {Rat(-2), Rat(0), Rat(1)};
  Real root = real_root_refine(p, Rat(1), Rat(2), 256);
  Real two(2, 300);
  CHECK(abs(root * root - two) < Real::pow2(-250, 64));

  // exact rational sign-change certificate at relative radius 2^{4-prec}
  Rat xr = root.to_rational();
  Rat rad = xr * Rat(Int(1), pow_int(Int(2), 252));
  CHECK(sgn(p.eval(xr - rad)) * sgn(p.eval(xr + rad)) < 0);

  RatPoly q;  // X^2 + 1 has no real roots
  q.c = {Rat(1), Rat(0), Rat(1)};
  CHECK_THROWS_AS(real_root_refine(q, Rat(0), Rat(1), 128), InvalidInput);

  // multiple roots in the bracket are detected by the scan
  RatPoly m;  // (X-1/4)(X-1/2)(X-3/4) over (0,1)
  RatPoly f1, f2, f3;
  f1.c = {Rat(-1, 4), Rat(1)};
  f2.c = {Rat(-1, 2), Rat(1)};
  f3.c = {Rat(-3, 4), Rat(1)};
  m = f1 * f2 * f3;
  CHECK_THROWS_AS(real_root_refine(m, Rat(0), Rat(1), 128), InvalidInput);
}

TEST_CASE("real_root_refine reproduces the degree-150 resolvent root") {
  RatPoly xp, xm, x1p, x1m;
  xp.c = {Rat(23), Rat(1)};
  xm.c = {Rat(-23), Rat(1)};
  x1m.c = {Rat(-1), Rat(1)};
  x1p.c = {Rat(1), Rat(1)};
  RatPoly q = xp * x1m.pow(150) - xm * x1p.pow(150);
  Real root = real_root_refine(q, Rat(23), Rat(24), 128);
  Real want = Real(0L, 128);
  mpfr_set_str(want.raw(), "23.000098741335222328", 10, MPFR_RNDN);
  CHECK(abs(root - want) / want < Real(1e-19, 64));
}

TEST_CASE("complex_roots") {
  RatPoly p;  // X^2 + 1
  p.c = {Rat(1), Rat(0), Rat(1)};
  RootSet rs = complex_roots(p, 128);
  REQUIRE(rs.roots.size() == 2);
  CHECK(abs(rs.roots[0].im + Real(1, 128)) < Real::pow2(-120, 64));
  CHECK(abs(rs.roots[1].im - Real(1, 128)) < Real::pow2(-120, 64));

  RatPoly c = RatPoly::constant(Rat(7));
  CHECK_THROWS_AS(complex_roots(c, 128), InvalidInput);

  // root sum = -c_{d-1}/c_d, and residuals stay small
  RatPoly w;  // (X-1)(X-2)(X-3)(X+5) expanded via poly ops
  RatPoly l1, l2, l3, l4;
  l1.c = {Rat(-1), Rat(1)};
  l2.c = {Rat(-2), Rat(1)};
  l3.c = {Rat(-3), Rat(1)};
  l4.c = {Rat(5), Rat(1)};
  w = l1 * l2 * l3 * l4;
  RootSet ws = complex_roots(w, 192);
  Complex sum(192);
  for (const auto& z : ws.roots) sum += z;
  Real expect = Real(-w.c[3] / w.c[4], 192);
  CHECK(abs(sum.re - expect) < Real::pow2(-180, 64));
  CHECK(abs(sum.im) < Real::pow2(-180, 64));
  for (const auto& st : ws.newton_steps) CHECK(st < Real(1e-12, 64));
}
