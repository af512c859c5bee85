#include "zetaforms/forms.hpp"

#include <algorithm>

#include "zetaforms/special.hpp"

namespace zetaforms {

void FormParams::validate() const {
  if (a < 3 || a % 2 == 0) throw InvalidInput("FormParams: a must be odd and >= 3");
  if (b < 1 || b % 2 == 0) throw InvalidInput("FormParams: b must be odd and >= 1");
  if (r < 0) throw InvalidInput("FormParams: r must be >= 0");
  if (n < 1) throw InvalidInput("FormParams: n must be >= 1");
  if (!is_integer(r * Rat(n))) throw InvalidInput("FormParams: r*n must be an integer");
  if (!(Rat(2 * b) * r < Rat(a))) throw InvalidInput("FormParams: requires 2*b*r < a");
}

long FormParams::rn() const {
  Rat q = r * Rat(n);
  return static_cast<long>(floor_rat(q).get_si());
}

bool LinearFormFamily::all_zero() const {
  for (const auto& [k, v] : ltilde)
    if (v != 0) return false;
  for (const auto& [k, v] : ell)
    if (v != 0) return false;
  return true;
}

std::pair<RatPoly, RatPoly> build_summand(const FormParams& p) {
  p.validate();
  long n = p.n, trn = p.two_rn();
  // numerator roots: +-m for m in [n+1, (2r+1)n], each with multiplicity b
  RatPoly num = RatPoly::constant(Rat(1));
  RatPoly quad;  // t^2 - m^2
  for (long m = n + 1; m <= n + trn; ++m) {
    quad.c = {Rat(-m * m), Rat(0), Rat(1)};
    num = num * quad;
  }
  num = num.pow(p.b);
  RatPoly den = RatPoly::constant(Rat(1));
  RatPoly lin;
  for (long m = -n; m <= n; ++m) {
    lin.c = {Rat(-m), Rat(1)};
    den = den * lin;
  }
  den = den.pow(p.a);
  return {num, den};
}

namespace {

// power series in u truncated to `len` terms
using Series = std::vector<Rat>;

Series series_mul(const Series& x, const Series& y, size_t len) {
  Series r(len, Rat(0));
  for (size_t i = 0; i < x.size() && i < len; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j + i < len && j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return r;
}

// coefficients of poly(m + u) up to u^{len-1}, by truncated Horner
Series shifted_series(const RatPoly& poly, long m, size_t len) {
  Series s(len, Rat(0));
  Rat mm(m);
  for (size_t i = poly.c.size(); i-- > 0;) {
    // s <- s*(m+u) + coeff
    Series next(len, Rat(0));
    for (size_t v = 0; v < len; ++v) {
      if (s[v] == 0) continue;
      next[v] += s[v] * mm;
      if (v + 1 < len) next[v + 1] += s[v];
    }
    next[0] += poly.c[i];
    s = std::move(next);
  }
  return s;
}

// series of (d + u)^{-a}: (-1)^v C(a+v-1, v) d^{-a-v}
Series pole_series(long d, int a, size_t len) {
  Series s(len, Rat(0));
  Rat dinv = rat_of(Int(1), Int(d));
  Rat cur = pow_rat(dinv, a);
  for (size_t v = 0; v < len; ++v) {
    Rat coef = Rat(binomial(a + v - 1, v)) * cur;
    s[v] = (v % 2 == 0) ? coef : -coef;
    cur *= dinv;
  }
  return s;
}

}  // namespace

PartialFractions partial_fractions(const FormParams& p) {
  p.validate();
  auto [num, den] = build_summand(p);
  (void)den;
  long n = p.n;
  int a = p.a;
  PartialFractions pf;
  pf.a = a;
  pf.n = n;
  pf.c.assign(a, std::vector<Rat>(2 * n + 1, Rat(0)));
  for (long m = -n; m <= n; ++m) {
    Series s = shifted_series(num, m, a);
    for (long mp = -n; mp <= n; ++mp) {
      if (mp == m) continue;
      s = series_mul(s, pole_series(m - mp, a, a), a);
    }
    for (int j = 1; j <= a; ++j) pf.c[j - 1][m + n] = s[a - j];
  }
  return pf;
}

LinearFormFamily extract_linear_form(const FormParams& p) {
  PartialFractions pf = partial_fractions(p);
  long n = p.n;
  int a = p.a, b = p.b;
  if (pf.row_sum(1) != 0)
    throw CheckFailure("extract_linear_form: sum_m c_{1,m} != 0 (convergence violated)");
  for (int j = 2; j <= a; j += 2)
    if (pf.row_sum(j) != 0)
      throw CheckFailure("extract_linear_form: even-index residue sums must vanish");

  LinearFormFamily f;
  f.params = p;
  unsigned long exp_num = static_cast<unsigned long>(a) - 2ul * b * p.r_floor().get_ui();
  long two_frac_n = static_cast<long>(floor_rat(Rat(2 * n) * p.r_frac()).get_si());
  f.F = Rat(pow_int(factorial(2 * n), exp_num), pow_int(factorial(two_frac_n), 2ul * b));

  for (int i = 3; i <= a; i += 2) f.ell[i] = f.F * pf.row_sum(i);

  for (int beta : p.members()) {
    Rat acc(0);
    for (int j = 1; j <= a; ++j) {
      long J = j + beta - 1;
      Rat binom(binomial(j + beta - 2, beta - 1));
      for (long m = -n; m <= n; ++m) {
        const Rat& cjm = pf.at(j, m);
        if (cjm == 0) continue;
        acc += cjm * binom * power_partial_sum(n - m, J);
      }
    }
    f.ltilde[beta] = -f.F * acc;
  }
  return f;
}

Real eval_form(const LinearFormFamily& f, int beta, mpfr_prec_t prec) {
  const FormParams& p = f.params;
  if (beta < 1 || beta > p.b || beta % 2 == 0) throw InvalidInput("eval_form: beta not in E");
  if (f.all_zero()) return Real(0L, prec);
  for (mpfr_prec_t wp = prec + 64; wp <= (mpfr_prec_t(1) << 22); wp *= 2) {
    Real sum(f.ltilde.at(beta), wp);
    Real maxmag = abs(sum);
    for (const auto& [i, li] : f.ell) {
      Real term = Real(li * Rat(binomial(beta + i - 2, beta - 1)), wp) * zeta_int(beta + i - 1, wp);
      sum += term;
      maxmag = max(maxmag, abs(term));
    }
    if (maxmag.is_zero()) return Real(0L, prec);
    if (abs(sum) > maxmag * Real::pow2(-static_cast<long>(wp - prec) + 24, wp))
      return sum.round_to(prec);
  }
  throw InternalError("eval_form: precision escalation exhausted");
}

namespace {

// Exact derivatives R^{(0..dmax)}(t0)/d! free of cancellation, via
// R' = R * L with L the logarithmic derivative of the summand.
std::vector<Rat> summand_derivatives(const FormParams& p, long t0, int dmax) {
  long n = p.n, trn = p.two_rn();
  int a = p.a, b = p.b;
  if (t0 <= n + trn)  // zero of order b > dmax at the early integers
    return std::vector<Rat>(dmax + 1, Rat(0));
  // R(t0): product form
  Rat R(1);
  for (long m = n + 1; m <= n + trn; ++m)
    R *= pow_rat(Rat(t0 - m) * Rat(t0 + m), static_cast<unsigned long>(b));
  for (long m = -n; m <= n; ++m) R /= pow_rat(Rat(t0 - m), static_cast<unsigned long>(a));
  // L^{(e)}(t0) for e in [0, dmax)
  std::vector<Rat> L(dmax, Rat(0));
  Int efac = 1;
  for (int e = 0; e < dmax; ++e) {
    if (e > 0) efac *= e;
    Rat s(0);
    for (long m = n + 1; m <= n + trn; ++m) {
      s += Rat(b) * (Rat(Int(1), pow_int(Int(t0 - m), e + 1)) + Rat(Int(1), pow_int(Int(t0 + m), e + 1)));
    }
    for (long m = -n; m <= n; ++m) s -= Rat(a) * Rat(Int(1), pow_int(Int(t0 - m), e + 1));
    L[e] = ((e % 2 == 0) ? Rat(efac) : -Rat(efac)) * s;
  }
  std::vector<Rat> D(dmax + 1, Rat(0));
  D[0] = R;
  for (int d = 0; d < dmax; ++d) {
    Rat s(0);
    for (int i = 0; i <= d; ++i) s += Rat(binomial(d, i)) * D[i] * L[d - i];
    D[d + 1] = s;
  }
  return D;
}

}  // namespace

Real eval_series(const FormParams& p, int beta, mpfr_prec_t prec) {
  p.validate();
  if (beta < 1 || beta > p.b || beta % 2 == 0) throw InvalidInput("eval_series: beta not in E");
  long n = p.n;
  int a = p.a;
  PartialFractions pf = partial_fractions(p);

  long start = n + p.two_rn() + 1;
  long T = start + 24;
  // exact head: h(t) = R^{(beta-1)}(t) / (beta-1)!
  Rat head(0);
  Rat invfac(Int(1), factorial(beta - 1));
  for (long t = start; t <= T; ++t) head += summand_derivatives(p, t, beta - 1)[beta - 1] * invfac;

  // F
  unsigned long exp_num = static_cast<unsigned long>(a) - 2ul * p.b * p.r_floor().get_ui();
  long two_frac_n = static_cast<long>(floor_rat(Rat(2 * p.n) * p.r_frac()).get_si());
  Rat F(pow_int(factorial(2 * n), exp_num), pow_int(factorial(two_frac_n), 2ul * p.b));

  // tail via Euler-Maclaurin on each shifted partial-fraction pole
  for (mpfr_prec_t wp = prec + 64; wp <= (mpfr_prec_t(1) << 22); wp *= 2) {
    Real tail(0L, wp);
    Real maxmag(0L, wp);
    for (int j = 1; j <= a; ++j) {
      long J = j + beta - 1;
      Rat binom(binomial(j + beta - 2, beta - 1));
      if (J == 1) continue;  // handled exactly below
      for (long m = -n; m <= n; ++m) {
        const Rat& cjm = pf.at(j, m);
        if (cjm == 0) continue;
        Real term = Real(cjm * binom, wp) * zeta_tail(J, T - m, wp);
        tail += term;
        maxmag = max(maxmag, abs(term));
      }
    }
    Rat exact_tail(0);
    if (beta == 1) {
      // sum_m c_{1,m} sum_{t>T} (t-m)^{-1} telescopes, since the residues sum to 0
      for (long m = -n; m <= n; ++m) {
        const Rat& c1m = pf.at(1, m);
        if (c1m == 0) continue;
        exact_tail += c1m * (power_partial_sum(T, 1) - power_partial_sum(T - m, 1));
      }
    }
    Real total = Real(head + exact_tail, wp) + tail;
    // accumulated rounding noise of the cancelling tail sum vs the target
    Real err_bound = maxmag * Real::pow2(-static_cast<long>(wp) + 40, wp);
    if (maxmag.is_zero() ||
        (!total.is_zero() && err_bound < abs(total) * Real::pow2(-static_cast<long>(prec) - 8, wp)))
      return (Real(F, wp) * total).round_to(prec);
  }
  throw InternalError("eval_series: precision escalation exhausted");
}

Real assemble_S(const LinearFormFamily& f, const CotangentBasis& basis, int lambda, mpfr_prec_t prec) {
  if (basis.b != f.params.b) throw InvalidInput("assemble_S: basis and form disagree on b");
  if (lambda < 1 || lambda > basis.b || lambda % 2 == 0)
    throw InvalidInput("assemble_S: lambda not in E");
  for (mpfr_prec_t wp = prec + 64; wp <= (mpfr_prec_t(1) << 22); wp *= 2) {
    Real pi = Real::pi(wp);
    Real sum(0L, wp);
    Real maxmag(0L, wp);
    for (int beta : basis.members) {
      const Rat& d = basis.d_at(beta, lambda);
      if (d == 0) continue;
      Real term = Real(d, wp) * pow(pi, -beta) * eval_form(f, beta, wp);
      sum += term;
      maxmag = max(maxmag, abs(term));
    }
    if (maxmag.is_zero()) return Real(0L, prec);
    if (abs(sum) > maxmag * Real::pow2(-static_cast<long>(wp - prec) + 24, wp))
      return sum.round_to(prec);
  }
  throw InternalError("assemble_S: precision escalation exhausted");
}

GrowthTable growth_diagnostics(int a, int b, const Rat& r, const std::vector<long>& ns,
                               mpfr_prec_t prec) {
  GrowthTable table;
  mpfr_prec_t wp = prec + 32;
  Rat rf = frac_part(r);
  Int rfloor = floor_rat(r);
  // 2^{2(a-2b[r])} (2r+1)^{2b(2r+1)} / (2{r})^{4b{r}}
  Real two(2, wp);
  Real bound = pow(two, 2 * (a - 2 * b * static_cast<long>(rfloor.get_si())));
  Real two_r1(Rat(2) * r + 1, wp);
  bound *= exp(Real(Rat(2 * b) * (Rat(2) * r + 1), wp) * log(two_r1));
  if (rf != 0) {
    Real base(Rat(2) * rf, wp);
    bound /= exp(Real(Rat(4 * b) * rf, wp) * log(base));
  }
  table.coeff_bound = bound.round_to(prec);
  Real slack = exp(Real(Rat(1, 2), wp));

  for (long n : ns) {
    if (!is_integer(r * Rat(n))) continue;
    FormParams p{a, b, r, n};
    LinearFormFamily f = extract_linear_form(p);
    Rat maxc(0);
    for (const auto& [k, v] : f.ltilde) maxc = std::max(maxc, Rat(abs(v)));
    for (const auto& [k, v] : f.ell) maxc = std::max(maxc, Rat(abs(v)));
    GrowthRow row;
    row.n = n;
    row.coeff_root = exp(log(Real(maxc, wp)) / Real(n, wp)).round_to(prec);
    Real i1 = abs(eval_series(p, 1, wp));
    Real log_norm = log(i1);
    if (rf != 0) {
      long two_frac_n = static_cast<long>(floor_rat(Rat(2 * n) * rf).get_si());
      log_norm += Real(2 * b, wp) * log(Real(factorial(two_frac_n), wp));
      log_norm -= Real(Rat(2 * b) * rf, wp) * log(Real(factorial(2 * n), wp));
    }
    row.log_i1_over_n = (log_norm / Real(n, wp)).round_to(prec);
    row.i1_root = exp(row.log_i1_over_n).round_to(prec);
    row.coeff_within_bound = !(row.coeff_root > (bound * slack).round_to(prec));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace zetaforms
