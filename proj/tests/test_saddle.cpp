#include <doctest.h>

#include "zetaforms/bounds.hpp"
#include "zetaforms/saddle.hpp"

using namespace zetaforms;

TEST_CASE("build_Q small case") {
  SaddleParams p{3, 1, Rat(1)};
  RatPoly q = build_Q(p);
  CHECK(q.degree() == 4);
  // (X+3)(X-1)^4 - (X-3)(X+1)^4 expanded by hand: -2X^4 + 12X^3 - 20X^2 + 12X - 6
  RatPoly xp, xm, p1, m1;
  xp.c = {Rat(3), Rat(1)};
  xm.c = {Rat(-3), Rat(1)};
  m1.c = {Rat(-1), Rat(1)};
  p1.c = {Rat(1), Rat(1)};
  RatPoly direct = xp * m1.pow(4) - xm * p1.pow(4);
  CHECK(q.c == direct.c);

  // Q(2r+1) = (4r+2)^b (2r)^{a+b}
  for (auto [a, b, r] : {std::tuple{3, 1, Rat(1)}, std::tuple{9, 1, Rat(1)},
                         std::tuple{45, 5, Rat(2)}, std::tuple{15, 3, Rat(3, 2)}}) {
    SaddleParams sp{a, b, r};
    Rat expect = pow_rat(Rat(4) * r + 2, b) * pow_rat(Rat(2) * r, a + b);
    CHECK(build_Q(sp).eval(Rat(2) * r + 1) == expect);
  }

  // direct expansion: Q = -2X^4 + 28X^2 + 6, an even polynomial
  CHECK(q.c[4] == -2);
  CHECK(q.c[2] == 28);
  CHECK(q.c[0] == 6);
}

TEST_CASE("build_Q parity: Q(-X) = Q(X) for odd a, b") {
  for (auto [a, b, r] : {std::tuple{3, 1, Rat(1)}, std::tuple{9, 3, Rat(1)},
                         std::tuple{15, 3, Rat(3, 2)}}) {
    RatPoly q = build_Q(SaddleParams{a, b, r});
    for (size_t i = 1; i < q.c.size(); i += 2) CHECK(q.c[i] == 0);
  }
}

TEST_CASE("build_G properties") {
  SaddleParams p{9, 3, Rat(1)};
  // lambda = b gives a real-coefficient factor
  CPoly gb = build_G(p, 3, 160);
  for (const auto& c : gb.c) CHECK(c.im.is_zero());

  // the product over odd lambda in (-b, b] reproduces Q coefficientwise
  CPoly prod;
  prod.c = {Complex(Real(1, 160), Real(0, 160))};
  for (int lambda : {-1, 1, 3}) prod = prod * build_G(p, lambda, 160);
  RatPoly q = build_Q(p);
  REQUIRE(prod.c.size() >= q.c.size());
  for (size_t i = 0; i < prod.c.size(); ++i) {
    Rat qc = i < q.c.size() ? q.c[i] : Rat(0);
    CHECK(abs(prod.c[i].re - Real(qc, 160)) < Real(1e-20, 64));
    CHECK(abs(prod.c[i].im) < Real(1e-20, 64));
  }

  SaddleParams bad{9, 5, Rat(1)};  // 5 does not divide 9
  CHECK_THROWS_AS(build_G(bad, 1, 128), InvalidInput);
  CHECK_THROWS_AS(build_G(p, 2, 128), InvalidInput);
}

TEST_CASE("complex roots of Q for (9,1,1)") {
  SaddleParams p{9, 1, Rat(1)};
  RatPoly q = build_Q(p);
  CHECK(q.degree() == 10);  // a + 2b with the top power cancelled
  RootSet rs = complex_roots(q, 128);
  CHECK(rs.roots.size() == 10);
  for (const auto& st : rs.newton_steps) CHECK(st < Real(1e-12, 64));
}

TEST_CASE("mu1 residual certificate |Q(mu1)| < 2^{8-prec} |Q'(mu1) mu1|") {
  for (auto [a, b, r] : {std::tuple{9, 1, Rat(1)}, std::tuple{149, 1, Rat(11)}}) {
    SaddleParams p{a, b, r};
    const mpfr_prec_t prec = 192;
    Real mu = locate_mu1(p, prec);
    RatPoly q = build_Q(p);
    Real qv = q.eval_real(mu.round_to(prec + 64));
    Real dqv = q.derivative().eval_real(mu.round_to(prec + 64));
    CHECK(abs(qv) < Real::pow2(8 - static_cast<long>(prec), 64) * abs(dqv * mu));
  }
}

TEST_CASE("locate_mu1") {
  SaddleParams p1{149, 1, Rat(11)};
  Real mu = locate_mu1(p1, 192);
  Real want = parse_decimal("23.000098741335222328", 192);
  CHECK(abs(mu - want) / want < Real(1e-19, 64));

  // same ratio a/b = 149 gives the same root
  SaddleParams p3{447, 3, Rat(11)};
  Real mu3 = locate_mu1(p3, 192);
  CHECK(abs(mu3 - mu) < Real::pow2(-180, 64));

  for (auto [a, b, r] : {std::tuple{3, 1, Rat(1)}, std::tuple{9, 1, Rat(1)},
                         std::tuple{45, 5, Rat(2)}}) {
    SaddleParams sp{a, b, r};
    CHECK(locate_mu1(sp, 128) > Real(Rat(2) * r + 1, 128));
  }
}

TEST_CASE("locate_rho and residuals for (45,5,2)") {
  SaddleParams p{45, 5, Rat(2)};
  CutPlane F(p, 192);
  Real pi = Real::pi(192);
  Complex prev(192);
  bool have_prev = false;
  for (int lambda : {1, 3}) {
    Complex rho = locate_rho(p, lambda, 160);
    CHECK(rho.re.sign() > 0);
    CHECK(rho.im.sign() > 0);
    // f'(rho) = i lambda pi
    Complex fp = F.f_prime(rho);
    CHECK(abs(fp - Complex(Real(0, 192), Real(lambda, 192) * pi)) < Real(1e-20, 64));
    // |rho - (2r+1)| < 2r
    CHECK(abs(rho - Complex(Real(5, 192), Real(0, 192))) < Real(4, 64));
    if (have_prev) CHECK(prev.re < rho.re);
    prev = rho;
    have_prev = true;
  }
  CHECK(prev.re < locate_mu1(p, 160));
  CHECK_THROWS_AS(locate_rho(p, 5, 128), InvalidInput);   // lambda = b
  CHECK_THROWS_AS(locate_rho(p, 2, 128), InvalidInput);
}

TEST_CASE("cut plane evaluation") {
  SaddleParams p{9, 1, Rat(1)};
  CutPlane F(p, 192);
  // real on (1, 2r+1)
  Complex mid = Complex::from_real(Real(2, 192));
  CHECK(F.f(mid).im.is_zero());
  CHECK(F.g(mid).im.is_zero());
  // on the cuts without the flag
  CHECK_THROWS_AS(F.f(Complex::from_real(Real(0.5, 192))), InvalidInput);
  CHECK_THROWS_AS(F.f(Complex::from_real(Real(4, 192))), InvalidInput);
  CHECK_THROWS_AS(F.f_upper(Real(2, 192)), InvalidInput);

  // increasing to mu1, then decreasing
  Real mu = locate_mu1(p, 192);
  Real lo = Real(Rat(3), 192);
  Real x1 = lo + (mu - lo) / Real(3, 192);
  Real x2 = lo + (mu - lo) * Real(2, 192) / Real(3, 192);
  CHECK(F.f_upper(x1).re < F.f_upper(x2).re);
  CHECK(F.f_upper(x2).re < F.f_upper(mu).re);
  CHECK(F.f_upper(mu + Real(1, 192)).re < F.f_upper(mu).re);

  // upper-bank structure at mu1
  CHECK(abs(F.f_prime_upper(mu).re) < Real::pow2(-150, 64));
  CHECK(F.f_second_upper(mu).sign() < 0);
  CHECK(F.arg_g_upper() == -Real(p.b, 192) * Real::pi(192) / Real(2, 192));

  // continuity walk from the midpoint reaches interior points without jumps
  CHECK_NOTHROW(F.continuity_walk_check(Complex(Real(2.5, 192), Real(1.5, 192))));
}

TEST_CASE("check_hypotheses") {
  // r = 1: the growth inequality holds for all a >= 3b tested
  for (auto [a, b] : {std::pair{3, 1}, std::pair{9, 1}, std::pair{9, 3}, std::pair{45, 5}}) {
    HypothesisReport rep = check_hypotheses(SaddleParams{a, b, Rat(1)}, 128);
    CHECK(rep.growth_ratio_ok);
    CHECK(rep.three_br_ok);
  }
  // 5b <= a with r <= a/(3b)
  HypothesisReport r5 = check_hypotheses(SaddleParams{45, 5, Rat(3)}, 128);
  CHECK(r5.growth_ratio_ok);

  // (149,1,11): r not in I_{a,b}, but the saddle hypotheses hold
  HypothesisReport rep = check_hypotheses(SaddleParams{149, 1, Rat(11)}, 128);
  CHECK(rep.growth_ratio_ok);
  CHECK(rep.mu1_window_ok);
  CHECK(!rep.r_in_interval);
  CHECK(rep.interval_margin.sign() < 0);
}

TEST_CASE("asymptotics invariants for (45,5,2)") {
  SaddleParams p{45, 5, Rat(2)};
  SaddleData d = asymptotics(p, 192);
  CHECK(d.rho.at(1).re < d.rho.at(3).re);
  CHECK(d.rho.at(3).re < d.mu1);
  CHECK(d.eps.at(1) > 0);
  CHECK(d.eps.at(1) < d.eps.at(3));
  CHECK(d.eps.at(3) < d.eps.at(5));
  CHECK(!d.exceptional_candidate);
  CHECK(d.fpp.at(5).re.sign() < 0);
  CHECK(d.fpp.at(5).im.is_zero());
  // phi_b is a multiple of pi
  Real pi = Real::pi(224);
  Real ratio = d.phi.at(5) / pi;
  CHECK(abs(ratio - Real(ratio.floor_to_int(), 224)) * pi < Real(1e-20, 64));
}

TEST_CASE("psi domain and scan") {
  CHECK_THROWS_AS(psi(45, 5, 5, Rat(1), 128), InvalidInput);       // lambda = b
  CHECK_THROWS_AS(psi(45, 5, 1, Rat(4), 128), InvalidInput);       // r >= a/(3b)
  CHECK_THROWS_AS(psi(45, 5, 1, Rat(0), 128), InvalidInput);
  Complex v = psi(45, 5, 1, Rat(2), 128);
  CHECK(abs(abs(v) - Real(1, 128)) < Real::pow2(-100, 64));        // unit modulus
  auto hits = scan_exceptional(45, 5, 1, 7, Real(1e-6, 64), 96);
  CHECK(hits.empty());
}
