#include "zetaforms/saddle.hpp"

#include <algorithm>

namespace zetaforms {

void SaddleParams::validate() const {
  if (a < 3 || a % 2 == 0) throw InvalidInput("SaddleParams: a must be odd and >= 3");
  if (b < 1 || b % 2 == 0) throw InvalidInput("SaddleParams: b must be odd and >= 1");
  if (!(r > 0)) throw InvalidInput("SaddleParams: r must be positive");
  if (Rat(3 * b) * r > Rat(a)) throw InvalidInput("SaddleParams: requires 3br <= a");
}

RatPoly build_Q(const SaddleParams& p) {
  p.validate();
  Rat tr1 = Rat(2) * p.r + 1;
  RatPoly xp, xm, x1p, x1m;
  xp.c = {tr1, Rat(1)};    // X + 2r+1
  xm.c = {-tr1, Rat(1)};   // X - 2r-1
  x1p.c = {Rat(1), Rat(1)};
  x1m.c = {Rat(-1), Rat(1)};
  RatPoly q = xp.pow(p.b) * x1m.pow(p.a + p.b) - xm.pow(p.b) * x1p.pow(p.a + p.b);
  if (q.degree() >= p.a + 2 * p.b) throw InternalError("build_Q: leading terms failed to cancel");
  return q;
}

CPoly build_G(const SaddleParams& p, int lambda, mpfr_prec_t prec) {
  p.validate();
  if (!p.b_divides_a()) throw InvalidInput("build_G: requires b | a");
  if (lambda % 2 == 0 || lambda <= -p.b || lambda > p.b)
    throw InvalidInput("build_G: lambda must be odd with -b < lambda <= b");
  int q = p.a / p.b;
  Rat tr1 = Rat(2) * p.r + 1;
  RatPoly xp, neg, x1p, x1m;
  xp.c = {tr1, Rat(1)};   // X + 2r+1
  neg.c = {tr1, Rat(-1)}; // 2r+1 - X
  x1p.c = {Rat(1), Rat(1)};
  x1m.c = {Rat(-1), Rat(1)};
  RatPoly p1 = xp * x1m.pow(q + 1);
  RatPoly p2 = neg * x1p.pow(q + 1);
  Complex phase = (lambda == p.b) ? Complex(Real(-1L, prec), Real(0L, prec))
                                  : unit_phase(lambda, p.b, prec);
  CPoly g1 = CPoly::from_rational(p1, prec);
  CPoly g2 = CPoly::from_rational(p2, prec);
  CPoly out;
  out.c.resize(std::max(g1.c.size(), g2.c.size()), Complex(prec));
  for (size_t i = 0; i < g1.c.size(); ++i) out.c[i] += g1.c[i];
  for (size_t i = 0; i < g2.c.size(); ++i) out.c[i] -= phase * g2.c[i];
  return out;
}

Real locate_mu1(const SaddleParams& p, mpfr_prec_t prec) {
  RatPoly q = build_Q(p);
  Rat lo = Rat(2) * p.r + 1;
  Rat width = Rat(p.b) * p.r / Rat(p.a + p.b);
  Rat hi = lo + width;
  RatPoly qi = q.primitive_integer();
  int slo = sgn(qi.eval(lo));
  if (slo <= 0) throw InternalError("locate_mu1: Q(2r+1) must be positive");
  int tries = 0;
  while (sgn(qi.eval(hi)) >= 0) {
    width *= 2;
    hi = lo + width;
    if (++tries > 64) throw CheckFailure("locate_mu1: bracketing failure right of 2r+1");
  }
  return real_root_refine(q, lo, hi, prec);
}

Complex locate_rho(const SaddleParams& p, int lambda, mpfr_prec_t prec) {
  p.validate();
  if (!p.b_divides_a()) throw InvalidInput("locate_rho: requires b | a");
  if (lambda == p.b) throw InvalidInput("locate_rho: lambda = b is the real saddle mu1");
  if (lambda % 2 == 0 || lambda < 1 || lambda > p.b)
    throw InvalidInput("locate_rho: lambda must be odd in [1, b)");
  mpfr_prec_t wp = prec + 32;
  CPoly G = build_G(p, lambda, wp + 32);
  RootSet rs = complex_roots(G, wp);
  // the non-saddle roots sit exactly on the imaginary axis, where the
  // computed real part is rounding noise; the saddle root has Re > 1
  Real noise = Real::pow2(-static_cast<long>(wp) / 4, wp);
  const Complex* found = nullptr;
  for (const auto& z : rs.roots) {
    if (z.re > noise * max(Real(1, wp), abs(z))) {
      if (found) throw CheckFailure("locate_rho: several roots with positive real part");
      found = &z;
    }
  }
  if (!found) throw CheckFailure("locate_rho: no root with positive real part");
  if (found->im.sign() <= 0) throw InternalError("locate_rho: expected the root in the upper half-plane");
  Complex z = newton_polish(G, *found, wp);
  // residual certificate against G
  Complex gv = G.eval(z);
  Complex dgv = G.derivative().eval(z);
  if (!dgv.is_zero()) {
    Real step = abs(gv / dgv);
    if (!(step < max(Real(1, wp), abs(z)) * Real::pow2(-static_cast<long>(prec) + 8, wp)))
      throw InternalError("locate_rho: residual certificate failed");
  }
  return {z.re.round_to(prec), z.im.round_to(prec)};
}

// ---------------------------------------------------------------------------

CutPlane::CutPlane(const SaddleParams& p, mpfr_prec_t prec)
    : p_(p), prec_(prec), two_r_plus_1_(Rat(2) * p.r + 1, prec),
      coef_log2_(Rat(2) * (Rat(p.a) - Rat(2 * p.b) * p.r)) {
  p_.validate();
}

void CutPlane::check_domain(const Complex& tau) const {
  if (!tau.im.is_zero()) return;
  if (tau.re <= 1 || tau.re >= two_r_plus_1_)
    throw InvalidInput("CutPlane: tau lies on a cut; use the *_upper accessors for tau > 2r+1");
}

Complex CutPlane::f(const Complex& tau) const {
  check_domain(tau);
  Complex one = Complex::from_real(Real(1, prec_));
  Complex c1 = tau + Complex::from_real(two_r_plus_1_);
  Complex c2 = Complex::from_real(two_r_plus_1_) - tau;
  Complex c3 = tau - one;
  Complex c4 = tau + one;
  Real ab(p_.a + p_.b, prec_);
  Real b(p_.b, prec_);
  Complex out = b * (c1 * log(c1)) + b * (c2 * log(c2)) + ab * (c3 * log(c3)) - ab * (c4 * log(c4));
  out.re += Real(coef_log2_, prec_) * Real::log2_const(prec_);
  return out;
}

Complex CutPlane::f_prime(const Complex& tau) const {
  check_domain(tau);
  Complex one = Complex::from_real(Real(1, prec_));
  Real ab(p_.a + p_.b, prec_);
  Real b(p_.b, prec_);
  return b * log(tau + Complex::from_real(two_r_plus_1_)) -
         b * log(Complex::from_real(two_r_plus_1_) - tau) + ab * log(tau - one) -
         ab * log(tau + one);
}

Complex CutPlane::f0(const Complex& tau) const { return f(tau) - tau * f_prime(tau); }

Complex CutPlane::f_second(const Complex& tau) const {
  check_domain(tau);
  Complex one = Complex::from_real(Real(1, prec_));
  Real ab(p_.a + p_.b, prec_);
  Real b(p_.b, prec_);
  return b * inv(tau + Complex::from_real(two_r_plus_1_)) +
         b * inv(Complex::from_real(two_r_plus_1_) - tau) + ab * inv(tau - one) -
         ab * inv(tau + one);
}

Complex CutPlane::g(const Complex& tau) const {
  check_domain(tau);
  Complex one = Complex::from_real(Real(1, prec_));
  Real ab(p_.a + p_.b, prec_);
  Real b(p_.b, prec_);
  Complex h = b * log(tau + Complex::from_real(two_r_plus_1_)) +
              b * log(Complex::from_real(two_r_plus_1_) - tau) - ab * log(tau - one) -
              ab * log(tau + one);
  return exp(h / Real(2, prec_));
}

Complex CutPlane::f_upper(const Real& tau) const {
  if (!(tau > two_r_plus_1_)) throw InvalidInput("f_upper: requires tau > 2r+1");
  Real b(p_.b, prec_);
  Real ab(p_.a + p_.b, prec_);
  Real re = b * (tau + two_r_plus_1_) * log(tau + two_r_plus_1_) +
            b * (two_r_plus_1_ - tau) * log(tau - two_r_plus_1_) +
            ab * (tau - 1L) * log(tau - 1L) - ab * (tau + 1L) * log(tau + 1L) +
            Real(coef_log2_, prec_) * Real::log2_const(prec_);
  Real im = -b * (two_r_plus_1_ - tau) * Real::pi(prec_);
  return {re, im};
}

Complex CutPlane::f_prime_upper(const Real& tau) const {
  if (!(tau > two_r_plus_1_)) throw InvalidInput("f_prime_upper: requires tau > 2r+1");
  Real b(p_.b, prec_);
  Real ab(p_.a + p_.b, prec_);
  Real re = b * log(tau + two_r_plus_1_) - b * log(tau - two_r_plus_1_) +
            ab * log(tau - 1L) - ab * log(tau + 1L);
  return {re, b * Real::pi(prec_)};
}

Complex CutPlane::f0_upper(const Real& tau) const {
  Complex fu = f_upper(tau);
  Complex fpu = f_prime_upper(tau);
  return fu - Complex::from_real(tau) * fpu;
}

Real CutPlane::f_second_upper(const Real& tau) const {
  if (!(tau > two_r_plus_1_)) throw InvalidInput("f_second_upper: requires tau > 2r+1");
  Real b(p_.b, prec_);
  Real ab(p_.a + p_.b, prec_);
  return b / (tau + two_r_plus_1_) + b / (two_r_plus_1_ - tau) + ab / (tau - 1L) -
         ab / (tau + 1L);
}

Real CutPlane::log_abs_g_upper(const Real& tau) const {
  if (!(tau > two_r_plus_1_)) throw InvalidInput("log_abs_g_upper: requires tau > 2r+1");
  Real b(p_.b, prec_);
  Real ab(p_.a + p_.b, prec_);
  return (b * log(tau + two_r_plus_1_) + b * log(tau - two_r_plus_1_) -
          ab * log(tau - 1L) - ab * log(tau + 1L)) / Real(2, prec_);
}

Real CutPlane::arg_g_upper() const { return -Real(p_.b, prec_) * Real::pi(prec_) / Real(2, prec_); }

void CutPlane::continuity_walk_check(const Complex& tau, int steps) const {
  check_domain(tau);
  Complex start = Complex::from_real(Real(p_.r + 1, prec_));
  auto args_at = [&](const Complex& z) {
    return std::vector<Complex>{z + Complex::from_real(two_r_plus_1_),
                                Complex::from_real(two_r_plus_1_) - z,
                                z - Complex::from_real(Real(1, prec_)),
                                z + Complex::from_real(Real(1, prec_))};
  };
  std::vector<Complex> prev = args_at(start);
  for (int s = 1; s <= steps; ++s) {
    Real t = Real(s, prec_) / Real(steps, prec_);
    Complex z(start.re + t * (tau.re - start.re), start.im + t * (tau.im - start.im));
    std::vector<Complex> cur = args_at(z);
    for (size_t i = 0; i < cur.size(); ++i) {
      if (prev[i].im.sign() * cur[i].im.sign() < 0) {
        // interpolated real-axis crossing; the branch jumps when it is negative
        Real w = prev[i].im / (prev[i].im - cur[i].im);
        Real re_cross = prev[i].re + w * (cur[i].re - prev[i].re);
        if (re_cross.sign() < 0)
          throw CheckFailure("continuity_walk_check: branch cut crossed on the way to tau");
      }
      prev[i] = cur[i];
    }
  }
}

// ---------------------------------------------------------------------------

HypothesisReport check_hypotheses(const SaddleParams& p, mpfr_prec_t prec) {
  p.validate();
  mpfr_prec_t wp = prec + 16;
  HypothesisReport rep;
  Real r(p.r, wp);
  rep.three_br_ok = !(Rat(3 * p.b) * p.r > Rat(p.a));
  rep.growth_margin = Real(p.a + p.b, wp) * log1p(1L / (2L * r)) -
                      Real(p.b, wp) * log(Real(3, wp) + 1L / r);
  rep.growth_ratio_ok = rep.growth_margin.sign() > 0;
  Real mu1 = locate_mu1(p, wp);
  Real w1 = Real(Rat(p.b) * p.r * (p.r + 1) / Rat(2 * (p.a + p.b)), wp);
  Real w2 = Real(p.r * (p.r + 1) / (Rat(3) * (Rat(2) * p.r + 1)), wp);
  rep.mu1_margin = Real(Rat(2) * p.r + 1, wp) + min(w1, w2) - mu1;
  rep.mu1_window_ok = rep.mu1_margin.sign() >= 0;
  rep.interval_margin = Real(p.a, wp) -
                        Real(Rat(9, 2) * Rat(p.b) * p.r, wp) * log(Real(4, wp) * r + 3L);
  rep.r_in_interval = p.r >= 1 && rep.interval_margin.sign() >= 0;
  return rep;
}

Real re_f_upper_at_mu1(const SaddleParams& p, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 32;
  Real mu1 = locate_mu1(p, wp);
  CutPlane F(p, wp);
  return F.f_upper(mu1).re.round_to(prec);
}

Real dist_to_half_pi_mod_pi(const Real& x) {
  mpfr_prec_t wp = x.prec();
  Real pi = Real::pi(wp);
  Real y = (x - pi / Real(2, wp)) / pi;
  Real frac = y - Real(y.floor_to_int(), wp);
  return min(frac, Real(1, wp) - frac) * pi;
}

SaddleData asymptotics(const SaddleParams& p, mpfr_prec_t prec) {
  p.validate();
  HypothesisReport hyp = check_hypotheses(p, std::min<mpfr_prec_t>(prec, 192));
  if (!hyp.three_br_ok || !hyp.growth_ratio_ok)
    throw CheckFailure("asymptotics: growth hypothesis fails");
  if (!hyp.mu1_window_ok) throw CheckFailure("asymptotics: mu1 localization hypothesis fails");

  mpfr_prec_t wp = prec + 32;
  SaddleData data;
  data.params = p;
  data.prec = prec;
  data.mu1 = locate_mu1(p, wp);
  CutPlane F(p, wp);
  Real pi = Real::pi(wp);

  // lambda = b on the upper bank of the cut
  {
    int b = p.b;
    Complex f0v = F.f0_upper(data.mu1);
    Complex fpv = F.f_prime_upper(data.mu1);
    if (!(abs(fpv.re) < Real::pow2(-static_cast<long>(prec) + 48, wp) * max(Real(1, wp), abs(fpv.im))))
      throw InternalError("asymptotics: Re f'(mu1+i0) does not vanish");
    data.fprime_residual[b] = abs(fpv - Complex(Real(0L, wp), Real(b, wp) * pi)).round_to(64);
    data.rho[b] = Complex(data.mu1, Real(0L, wp));
    data.eps[b] = exp(f0v.re).round_to(prec);
    data.omega[b] = f0v.im.round_to(prec);
    Real fppv = F.f_second_upper(data.mu1);
    if (fppv.sign() >= 0) throw InternalError("asymptotics: f''(mu1+i0) must be negative");
    data.fpp[b] = Complex(fppv.round_to(prec), Real(0L, prec));
    Real g_abs = exp(F.log_abs_g_upper(data.mu1));
    Real g_arg = F.arg_g_upper();
    data.g_at_rho[b] = Complex((g_abs * cos(g_arg)).round_to(prec), (g_abs * sin(g_arg)).round_to(prec));
    // arg f'' = pi exactly; phi_b = -pi/2 - b pi/2, a multiple of pi for odd b
    data.phi[b] = (-(pi / Real(2, wp)) + g_arg).round_to(prec);
  }

  for (int lambda : p.members()) {
    if (lambda == p.b) continue;
    Complex rho = locate_rho(p, lambda, wp);
    F.continuity_walk_check(rho);
    Complex fpv = F.f_prime(rho);
    Real residual = abs(fpv - Complex(Real(0L, wp), Real(lambda, wp) * pi));
    Real rtol = max(Real(1e-20, wp), Real::pow2(-static_cast<long>(prec) + 48, wp));
    if (!(residual < rtol * max(Real(1, wp), Real(lambda, wp) * pi)))
      throw InternalError("asymptotics: f'(rho_lambda) != i lambda pi beyond tolerance");
    data.fprime_residual[lambda] = residual.round_to(64);
    Complex f0v = F.f0(rho);
    Complex fppv = F.f_second(rho);
    Complex gv = F.g(rho);
    data.rho[lambda] = rho;
    data.eps[lambda] = exp(f0v.re).round_to(prec);
    data.omega[lambda] = f0v.im.round_to(prec);
    data.fpp[lambda] = fppv;
    data.g_at_rho[lambda] = gv;
    data.phi[lambda] = (-(arg(fppv) / Real(2, wp)) + arg(gv)).round_to(prec);
  }

  // structural invariants
  const auto& e = data.params.members();
  for (size_t i = 0; i + 1 < e.size(); ++i) {
    int l1 = e[i], l2 = e[i + 1];
    if (!(data.rho[l1].re < data.rho[l2].re))
      throw InternalError("asymptotics: Re rho ordering violated");
    if (!(data.eps[l1] < data.eps[l2]))
      throw InternalError("asymptotics: eps ordering violated");
  }
  {  // eps_b <= 2^{2b(r+1)} / r^{2(a-2br)}
    Real logbound = Real(Rat(2 * p.b) * (p.r + 1), wp) * Real::log2_const(wp) -
                    Real(Rat(2) * (Rat(p.a) - Rat(2 * p.b) * p.r), wp) * log(Real(p.r, wp));
    if (!(log(data.eps[p.b]) <= logbound))
      throw InternalError("asymptotics: eps_b exceeds its closed-form bound");
  }
  for (int lambda : e) {
    if (!(dist_to_half_pi_mod_pi(data.phi[lambda]) > Real(1e-8, wp)))
      data.exceptional_candidate = true;
  }
  return data;
}

Complex psi(int a, int b, int lambda, const Rat& r, mpfr_prec_t prec) {
  if (b < 1 || b % 2 == 0 || a < 3 || a % 2 == 0) throw InvalidInput("psi: a, b must be odd");
  if (lambda == b) throw InvalidInput("psi: lambda = b excluded");
  if (!(r > 0) || !(r < Rat(a) / Rat(3 * b))) throw InvalidInput("psi: requires 0 < r < a/(3b)");
  SaddleParams p{a, b, r};
  mpfr_prec_t wp = prec + 32;
  Complex rho = locate_rho(p, lambda, wp);
  CutPlane F(p, wp);
  Complex fppv = F.f_second(rho);
  Complex gv = F.g(rho);
  Complex g2 = gv * gv;
  return (g2 / norm2(gv)) * (conj(fppv) / abs(fppv));
}

std::vector<Rat> scan_exceptional(int a, int b, int lambda, int grid, const Real& tol,
                                  mpfr_prec_t prec) {
  if (grid < 2) throw InvalidInput("scan_exceptional: grid must have >= 2 points");
  Rat lo(1);
  Rat hi = Rat(a - 1) / Rat(3 * b);
  if (!(hi > lo)) throw InvalidInput("scan_exceptional: empty range [1, (a-1)/(3b)]");
  std::vector<Rat> hits;
  Complex minus_one(Real(-1L, prec), Real(0L, prec));
  for (int i = 0; i < grid; ++i) {
    Rat r = lo + (hi - lo) * rat_of(i, grid - 1);
    Complex v = psi(a, b, lambda, r, prec);
    if (abs(v - minus_one) < tol) hits.push_back(r);
  }
  return hits;
}

}  // namespace zetaforms
