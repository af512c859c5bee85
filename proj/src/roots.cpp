#include "zetaforms/roots.hpp"

#include <algorithm>

namespace zetaforms {

namespace {

int sign_rat(const Rat& q) { return sgn(q); }

// Exact sign of p at a rational point.
int poly_sign_at(const RatPoly& p, const Rat& x) { return sign_rat(p.eval(x)); }

}  // namespace

Real real_root_refine(const RatPoly& p_in, const Rat& lo_in, const Rat& hi_in, mpfr_prec_t prec) {
  if (p_in.degree() < 1) throw InvalidInput("real_root_refine: degree must be >= 1");
  if (!(lo_in < hi_in)) throw InvalidInput("real_root_refine: empty bracket");
  RatPoly p = p_in.primitive_integer();
  RatPoly dp = p.derivative();

  Rat lo = lo_in, hi = hi_in;
  int slo = poly_sign_at(p, lo);
  int shi = poly_sign_at(p, hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw InvalidInput("real_root_refine: no sign change across bracket");

  // cheap scan for extra sign alternations
  {
    int changes = 0;
    int prev = slo;
    for (int i = 1; i <= 8; ++i) {
      Rat x = lo + (hi - lo) * rat_of(i, 9);
      int s = poly_sign_at(p, x);
      if (s == 0) continue;
      if (s != prev) { ++changes; prev = s; }
    }
    if (prev != shi) ++changes;
    if (changes > 1) throw InvalidInput("real_root_refine: multiple sign changes detected in bracket");
  }

  for (int attempt = 0; attempt < 4; ++attempt) {
    mpfr_prec_t wp = prec + 64 + attempt * prec;
    // exact bisection into the Newton basin
    Rat a = lo, b = hi;
    int sa = slo;
    for (int i = 0; i < 64; ++i) {
      Rat mid = (a + b) / 2;
      int sm = poly_sign_at(p, mid);
      if (sm == 0) { a = mid; b = mid; break; }
      if (sm == sa) a = mid; else b = mid;
    }
    Real x((a + b) / 2, wp);
    Real scale = max(Real(1, wp), abs(x));
    Real tol = scale * Real::pow2(-static_cast<long>(prec) - 16, wp);
    for (int i = 0; i < prec + 64; ++i) {
      Real fx = p.eval_real(x);
      Real dfx = dp.eval_real(x);
      if (dfx.is_zero()) break;
      Real step = fx / dfx;
      x -= step;
      if (abs(step) < tol) break;
    }
    // exact sign-change certificate at relative radius 2^{4-prec}
    Rat xr = x.to_rational();
    Rat rad = abs(xr) * Rat(Int(1), pow_int(Int(2), static_cast<unsigned long>(prec - 4)));
    if (rad == 0) rad = Rat(Int(1), pow_int(Int(2), static_cast<unsigned long>(prec - 4)));
    int s1 = poly_sign_at(p, xr - rad);
    int s2 = poly_sign_at(p, xr + rad);
    if (s1 != 0 && s2 != 0 && s1 != s2) return x.round_to(prec);
  }
  throw InternalError("real_root_refine: certificate failed after precision escalation");
}

Complex newton_polish(const CPoly& p, const Complex& z0, mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 64;
  CPoly dp = p.derivative();
  Complex z(Real(z0.re).round_to(wp), Real(z0.im).round_to(wp));
  Real tol = max(Real(1, wp), abs(z)) * Real::pow2(-static_cast<long>(prec) - 16, wp);
  for (int i = 0; i < 2 * prec; ++i) {
    Complex fz = p.eval(z);
    Complex dfz = dp.eval(z);
    if (dfz.is_zero()) break;
    Complex step = fz / dfz;
    z = z - step;
    if (abs(step) < tol) break;
  }
  return {z.re.round_to(prec), z.im.round_to(prec)};
}

RootSet complex_roots(const CPoly& p_in, mpfr_prec_t prec) {
  CPoly p = p_in;
  p.trim_exact_zeros();
  long deg = p.degree();
  if (deg < 1) throw InvalidInput("complex_roots: degree must be >= 1");

  mpfr_prec_t wp = std::max<mpfr_prec_t>(prec, 64) + 64;
  // monic normalization
  Complex lead = p.c.back();
  CPoly m;
  m.c.reserve(deg + 1);
  for (long i = 0; i <= deg; ++i) {
    Complex q = p.c[i] / lead;
    m.c.emplace_back(q.re.round_to(wp), q.im.round_to(wp));
  }
  CPoly dm = m.derivative();

  // Cauchy bound and a symmetry-breaking start circle
  Real radius(1, wp);
  for (long i = 0; i < deg; ++i) radius = max(radius, abs(m.c[i]));
  radius = radius + Real(1, wp);
  std::vector<Complex> z;
  z.reserve(deg);
  Real two_pi = Real::pi(wp) * 2L;
  for (long k = 0; k < deg; ++k) {
    Real theta = two_pi * Real(4 * k + 1, wp) / Real(4 * deg, wp) + Real(0.1234567, wp);
    z.emplace_back(radius * cos(theta), radius * sin(theta));
  }

  Real conv = Real::pow2(-static_cast<long>(prec) - 16, wp);
  bool done = false;
  for (int iter = 0; iter < 1200 && !done; ++iter) {
    done = true;
    for (long k = 0; k < deg; ++k) {
      Complex fz = m.eval(z[k]);
      if (fz.is_zero()) continue;
      Complex dfz = dm.eval(z[k]);
      if (dfz.is_zero()) {  // nudge off a critical point
        z[k].re += Real::pow2(-8, wp);
        done = false;
        continue;
      }
      Complex newton = fz / dfz;
      Complex s(wp);
      for (long j = 0; j < deg; ++j) {
        if (j == k) continue;
        s += inv(z[k] - z[j]);
      }
      Complex denom = Complex(Real(1, wp), Real(0L, wp)) - newton * s;
      Complex w = denom.is_zero() ? newton : newton / denom;
      z[k] = z[k] - w;
      if (abs(w) > conv * max(Real(1, wp), abs(z[k]))) done = false;
    }
  }
  if (!done)
    throw InternalError("complex_roots: Aberth iteration did not converge (degree " +
                        std::to_string(deg) + ")");

  std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  });

  RootSet out;
  out.roots.reserve(deg);
  out.newton_steps.reserve(deg);
  for (long k = 0; k < deg; ++k) {
    Complex fz = m.eval(z[k]);
    Complex dfz = dm.eval(z[k]);
    Real step = dfz.is_zero() ? abs(fz) : abs(fz / dfz);
    // simple-root separation: Newton step far below pairwise distance
    Real sep(wp);
    bool have_sep = false;
    for (long j = 0; j < deg; ++j) {
      if (j == k) continue;
      Real d = abs(z[k] - z[j]);
      if (!have_sep || d < sep) { sep = d; have_sep = true; }
    }
    if (have_sep && !(step * Real(8, wp) < sep))
      throw InternalError("complex_roots: simple-root certificate failed at root " + std::to_string(k));
    out.roots.emplace_back(z[k].re.round_to(prec), z[k].im.round_to(prec));
    out.newton_steps.push_back(step.round_to(64));
  }
  return out;
}

RootSet complex_roots(const RatPoly& p, mpfr_prec_t prec) {
  if (p.degree() < 1) throw InvalidInput("complex_roots: degree must be >= 1");
  return complex_roots(CPoly::from_rational(p, std::max<mpfr_prec_t>(prec, 64) + 64), prec);
}

}  // namespace zetaforms
