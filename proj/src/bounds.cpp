#include "zetaforms/bounds.hpp"

#include <algorithm>

#include "zetaforms/saddle.hpp"

namespace zetaforms {

Real parse_decimal(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw InvalidInput("parse_decimal: cannot parse '" + s + "'");
  return r;
}

Real log_alpha(const Real& r, const Real& a, const Real& b, bool r_is_integer) {
  if (r < 1) throw InvalidInput("log_alpha: bound formulas require r >= 1");
  mpfr_prec_t wp = std::max({r.prec(), a.prec(), b.prec()});
  Real out = Real(2, wp) * (a + b - 1L) + Real(2, wp) * b * (r + 1L) * Real::log2_const(wp) -
             Real(2, wp) * (a - Real(2, wp) * b * r) * log(r);
  if (!r_is_integer) {
    Real fr = r - Real(r.floor_to_int(), wp);
    if (!fr.is_zero()) out -= Real(4, wp) * b * fr * log(fr);
  }
  return out;
}

Real log_Q_bound(const Real& r, const Real& a, const Real& b, bool r_is_integer) {
  if (r < 1) throw InvalidInput("log_Q_bound: bound formulas require r >= 1");
  mpfr_prec_t wp = std::max({r.prec(), a.prec(), b.prec()});
  Real rfloor(r.floor_to_int(), wp);
  Real out = Real(2, wp) * (a + b - 1L) +
             Real(2, wp) * (a - Real(2, wp) * b * rfloor) * Real::log2_const(wp) +
             Real(2, wp) * b * (Real(2, wp) * r + 1L) * log(Real(2, wp) * r + 1L);
  if (!r_is_integer) {
    Real fr = r - rfloor;
    if (!fr.is_zero()) out -= Real(4, wp) * b * fr * log(Real(2, wp) * fr);
  }
  return out;
}

Real log_alpha(const Rat& r, long a, long b, mpfr_prec_t prec) {
  return log_alpha(Real(r, prec), Real(a, prec), Real(b, prec), is_integer(r));
}

Real log_Q_bound(const Rat& r, long a, long b, mpfr_prec_t prec) {
  return log_Q_bound(Real(r, prec), Real(a, prec), Real(b, prec), is_integer(r));
}

std::optional<Real> r_max(long a, long b, mpfr_prec_t prec) {
  if (a < 1 || b < 1) throw InvalidInput("r_max: a, b must be positive");
  mpfr_prec_t wp = prec + 16;
  auto h = [&](const Real& r) {
    return Real(Rat(9, 2) * Rat(b), wp) * r * log(Real(4, wp) * r + 3L) - Real(a, wp);
  };
  Real lo(1, wp);
  if (h(lo) > 0) return std::nullopt;  // even r = 1 fails; I_{a,b} empty
  Real hi(2, wp);
  while (!(h(hi) > 0)) hi *= Real(2, wp);
  for (int i = 0; i < static_cast<int>(prec) + 16; ++i) {
    Real mid = (lo + hi) / Real(2, wp);
    if (h(mid) > 0) hi = mid; else lo = mid;
  }
  return ((lo + hi) / Real(2, wp)).round_to(prec);
}

BoundEvaluation evaluate_bound(const Real& r, long a, long b, mpfr_prec_t prec) {
  mpfr_prec_t wp = std::max(prec, r.prec());
  Real rr = r.round_to(wp);
  BoundEvaluation ev;
  ev.r = rr;
  ev.log_alpha_v = log_alpha(rr, Real(a, wp), Real(b, wp), rr.is_integer());
  ev.log_q_v = log_Q_bound(rr, Real(a, wp), Real(b, wp), rr.is_integer());
  ev.ratio = Real(1, wp) - ev.log_alpha_v / ev.log_q_v;
  ev.dim_bound = Real(rat_of(b + 1, 2), wp) * ev.ratio;
  return ev;
}

BoundEvaluation dim_lower_bound(long a, long b, int grid, mpfr_prec_t prec) {
  if (grid < 2) throw InvalidInput("dim_lower_bound: grid must have >= 2 points");
  auto rmx = r_max(a, b, prec);
  if (!rmx) throw InvalidInput("dim_lower_bound: I_{a,b} is empty (a too small next to b)");
  mpfr_prec_t wp = prec + 16;
  Real lo(1, wp), hi = rmx->round_to(wp);
  auto value = [&](const Real& r) { return evaluate_bound(r, a, b, wp).dim_bound; };

  Real best_r = lo;
  Real best_v = value(lo);
  auto consider = [&](const Real& r) {
    if (r < lo || r > hi) return;
    Real v = value(r);
    if (v > best_v) { best_v = v; best_r = r; }
  };
  for (int i = 1; i <= grid; ++i) consider(lo + (hi - lo) * Real(i, wp) / Real(grid, wp));
  // integer kinks: the fractional-part terms switch branches there
  Real h = Real::pow2(-40, wp);
  for (Int m = 1; Real(m, wp) <= hi; ++m) {
    consider(Real(m, wp));
    consider(Real(m, wp) + h);
    if (Real(m, wp) - h >= lo) consider(Real(m, wp) - h);
  }
  // golden-section refinement around the best grid point
  Real span = (hi - lo) / Real(grid, wp);
  Real gl = max(lo, best_r - span), gr = min(hi, best_r + span);
  Real invphi = (sqrt(Real(5, wp)) - 1L) / Real(2, wp);
  Real c = gr - (gr - gl) * invphi;
  Real d = gl + (gr - gl) * invphi;
  Real fc = value(c), fd = value(d);
  for (int it = 0; it < 200; ++it) {
    if (fc > fd) {
      gr = d; d = c; fd = fc;
      c = gr - (gr - gl) * invphi;
      fc = value(c);
      consider(c);
    } else {
      gl = c; c = d; fc = fd;
      d = gl + (gr - gl) * invphi;
      fd = value(d);
      consider(d);
    }
  }
  BoundEvaluation ev = evaluate_bound(best_r, a, b, prec);
  ev.r = best_r.round_to(prec);
  return ev;
}

std::vector<BoundEvaluation> bound_table(long a, long b, int grid, mpfr_prec_t prec) {
  if (grid < 2) throw InvalidInput("bound_table: grid must have >= 2 points");
  auto rmx = r_max(a, b, prec);
  if (!rmx) throw InvalidInput("bound_table: I_{a,b} is empty (a too small next to b)");
  std::vector<BoundEvaluation> rows;
  Real lo(1, prec), hi = rmx->round_to(prec);
  for (int i = 0; i <= grid; ++i) {
    Real r = lo + (hi - lo) * Real(i, prec) / Real(grid, prec);
    rows.push_back(evaluate_bound(r, a, b, prec));
  }
  return rows;
}

Real criterion_rank_bound(const TauVector& tv) {
  if (tv.tau.empty()) throw InvalidInput("criterion_rank_bound: empty tau vector");
  mpfr_prec_t wp = tv.tau[0].prec();
  for (size_t i = 0; i + 1 < tv.tau.size(); ++i)
    if (!(tv.tau[i] > tv.tau[i + 1]))
      throw InvalidInput("criterion_rank_bound: tau must be strictly decreasing");
  Real s(static_cast<long>(tv.tau.size()), wp);
  for (const auto& t : tv.tau) s += t;
  return s;
}

Real refined_rank_bound(size_t t, const TauVector& tv) {
  if (t < 1 || t > tv.tau.size()) throw InvalidInput("refined_rank_bound: t out of range");
  for (size_t i = 0; i + 1 < tv.tau.size(); ++i)
    if (!(tv.tau[i] > tv.tau[i + 1]))
      throw InvalidInput("refined_rank_bound: tau must be strictly decreasing");
  mpfr_prec_t wp = tv.tau[0].prec();
  Real s(static_cast<long>(t), wp);
  for (size_t i = tv.tau.size() - t; i < tv.tau.size(); ++i) s += tv.tau[i];
  return s;
}

TauVector tau_from_eps(const std::map<int, Real>& eps, const Rat& r, long a, long b,
                       mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 16;
  Real logq = log_Q_bound(r, a, b, wp);
  Rat fr = frac_part(r);
  TauVector tv;
  const Real* prev = nullptr;
  for (int lambda = 1; lambda <= b; lambda += 2) {
    auto it = eps.find(lambda);
    if (it == eps.end()) throw InvalidInput("tau_from_eps: missing eps for a lambda in E");
    if (prev && !(*prev < it->second))
      throw InvalidInput("tau_from_eps: eps must increase strictly in lambda");
    prev = &it->second;
    Real num = Real(2 * (a + b - 1), wp) + log(it->second.round_to(wp));
    if (fr != 0) num -= Real(Rat(4 * b) * fr, wp) * log(Real(fr, wp));
    tv.tau.push_back((-num / logq).round_to(prec));  // tau_1 comes from lambda = 1
  }
  return tv;
}

// ---------------------------------------------------------------------------

namespace {

std::string rat_str(const Rat& q) { return q.get_str(); }

void add_check(PlanReport& rep, const std::string& name, bool pass, const Real& margin,
               const std::string& note = "") {
  rep.checks.push_back({name, pass, margin, note});
}

}  // namespace

PlanReport plan_th70(const Rat& eps, const Int& A, const Int& D, mpfr_prec_t prec) {
  if (!(eps > 0)) throw InvalidInput("plan_th70: eps must be positive");
  if (D < 1 || A < 1) throw InvalidInput("plan_th70: A, D must be positive integers");
  size_t abits = mpz_sizeinbase(A.get_mpz_t(), 2);
  mpfr_prec_t wp = std::max<mpfr_prec_t>(prec, abits + 128);

  PlanReport rep;
  rep.kind = "th70";
  rep.margin = Real(0L, wp);
  rep.params.emplace_back("eps", rat_str(eps));
  rep.params.emplace_back("A", A.get_str());
  rep.params.emplace_back("D", D.get_str());

  bool eps_ok = eps <= Rat(1, 20);
  add_check(rep, "eps_in_(0,1/20]", eps_ok, Real(Rat(1, 20) - eps, 64));
  if (!eps_ok) return rep;

  Real logA(wp);
  mpfr_log(logA.raw(), Real(A, wp).raw(), MPFR_RNDN);
  Real logD(wp);
  mpfr_log(logD.raw(), Real(D, wp).raw(), MPFR_RNDN);
  Real log_inv_eps = -log(Real(eps, wp));
  Real a_lb_margin = logA - (Real(12, wp) / Real(eps, wp)) * log_inv_eps - logD;
  // equality is admissible; tolerate rounding noise at the boundary
  bool a_lb_ok = a_lb_margin > -Real::pow2(-static_cast<long>(wp) / 2, wp);
  add_check(rep, "A_ge_eps^(-12/eps)*D", a_lb_ok, a_lb_margin.round_to(64));

  // largest odd b strictly inside (1 + 8D/eps, 9D/eps)
  Rat hi_b = Rat(9) * Rat(D) / eps;
  Rat lo_b = Rat(1) + Rat(8) * Rat(D) / eps;
  Int b = floor_rat(hi_b);
  if (Rat(b) == hi_b) b -= 1;
  if (b % 2 == 0) b -= 1;
  bool b_ok = Rat(b) > lo_b;
  add_check(rep, "odd_b_in_window", b_ok, Real(Rat(b) - lo_b, 64));
  rep.params.emplace_back("b", b.get_str());
  if (!b_ok) return rep;
  Int k = (b + 1) / 2;
  rep.params.emplace_back("k", k.get_str());

  // the odd multiple of b in [A-3b+2, A-b+1]
  Int window_hi = A - b + 1;
  Int window_lo = A - 3 * b + 2;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), window_hi.get_mpz_t(), b.get_mpz_t());
  Int a = q * b;
  if (a % 2 == 0) a -= b;
  bool a_ok = a >= window_lo && a <= window_hi && a % 2 == 1;
  add_check(rep, "odd_multiple_a_in_window", a_ok, Real(Int(a - window_lo), 64));
  rep.params.emplace_back("a", a.get_str());
  if (!a_ok) return rep;

  // r = [(A/D)^{1-eps/2}]  (the exponent the planner chain needs)
  Real logAD = logA - logD;
  Real r_real = exp(Real(Rat(1) - eps / 2, wp) * logAD);
  Int r = r_real.floor_to_int();
  rep.params.emplace_back("r", r.get_str());
  bool r_ok = r >= 1;
  add_check(rep, "r_ge_1", r_ok, Real(Int(r - 1), 64));
  if (!r_ok) return rep;

  Real rv(r, wp);
  Real interval_margin = Real(a, wp) - Real(Rat(9, 2) * Rat(b), wp) * rv * log(Real(4, wp) * rv + 3L);
  add_check(rep, "r_in_I_ab", interval_margin.sign() >= 0, interval_margin.round_to(64));
  bool two_br_ok = 2 * b * r < a;
  add_check(rep, "2br_lt_a", two_br_ok, Real(Int(a - 2 * b * r), 64));

  Int N = (Real(Rat(1) - eps, wp) * logAD / (Real(1, wp) + Real::log2_const(wp))).floor_to_int();
  rep.params.emplace_back("N", N.get_str());

  Real la = log_alpha(rv, Real(a, wp), Real(b, wp), true);
  Real lq = log_Q_bound(rv, Real(a, wp), Real(b, wp), true);
  Real ratio = -la / lq;
  Real needed = Real(Int(k + 2 * D), wp) * Real(N, wp) / Real(k, wp);
  rep.margin = (ratio - needed).round_to(64);
  add_check(rep, "k_ratio_gt_(k+2D)N", rep.margin.sign() > 0, rep.margin);
  rep.params.emplace_back("neg_log_alpha_over_log_q", ratio.round_to(64).str());

  // closing slack of the planner chain, floored the way the derivation does:
  // (0.09/(1+log2)) * floor(12 log(1/eps)) - 1.62
  Real floored_12log(Real((Real(12, wp) * log_inv_eps).floor_to_int(), wp));
  Real paper_slack =
      Real(0.09, wp) * floored_12log / (Real(1, wp) + Real::log2_const(wp)) - Real(1.62, wp);
  rep.params.emplace_back("paper_slack_bound", paper_slack.round_to(64).str());
  return rep;
}

PlanReport plan_th145(const Int& D, mpfr_prec_t prec, const std::string& varpi) {
  if (D < 1 || D % 2 == 0) throw InvalidInput("plan_th145: D must be an odd integer >= 1");
  mpfr_prec_t wp = std::max<mpfr_prec_t>(prec, 256) + 32;

  PlanReport rep;
  rep.kind = "th145";
  rep.params.emplace_back("D", D.get_str());

  // tuned constants, held exactly
  const Rat k1(Int("99347748344370860927"), pow_int(Int(10), 20));   // b threshold
  const Rat ct(Int("32612582781456953642"), pow_int(Int(10), 22));   // t rate
  const Rat cd(Int("30038668538740336935"), pow_int(Int(10), 25));   // delta rate
  const bool small_d = D <= 20000;

  Int b;
  if (small_d) {
    b = D;
  } else {
    b = ceil_rat(Rat(D) / k1);
    while (b % 2 == 0 || Rat(D) > k1 * Rat(b)) b += 1;
  }
  Int a = 149 * b;
  Int r = 11;
  Int k = (b + 1) / 2;
  Int t = small_d ? Int(1) : Int(floor_rat(ct * Rat(b)) + 1);
  Rat delta = small_d ? Rat(0) : cd * Rat(b);
  rep.params.emplace_back("b", b.get_str());
  rep.params.emplace_back("a", a.get_str());
  rep.params.emplace_back("r", r.get_str());
  rep.params.emplace_back("k", k.get_str());
  rep.params.emplace_back("t", t.get_str());
  rep.params.emplace_back("delta", rat_str(delta));
  rep.params.emplace_back("varpi", varpi);

  if (!small_d) {
    add_check(rep, "b_threshold", Rat(D) <= k1 * Rat(b), Real(Rat(k1 * Rat(b) - Rat(D)), 64));
    add_check(rep, "window_150b_le_151D", 150 * b <= 151 * D, Real(Int(151 * D - 150 * b), 64));
  }
  // the sigma window D+2 <= (1-2c)b+2 <= b-2t+4 admits t up to c*b+1
  add_check(rep, "sigma_window_t", Rat(t) <= ct * Rat(b) + 1, Real(Rat(ct * Rat(b) + 1 - Rat(t)), 64));

  // rates are linear in b at fixed a/b and r: compute them once at b = 1
  SaddleParams base{149, 1, Rat(11)};
  Real psi0 = re_f_upper_at_mu1(base, wp);
  Real vp = parse_decimal(varpi, wp);
  Real bb(b, wp);
  Real log_alpha_p = Real(2, wp) * (Real(a, wp) + bb - 1L) - bb * vp + bb * psi0;
  Real log_q_p = Real(2, wp) * (Real(a, wp) + bb - 1L) - bb * vp +
                 Real(Int(2 * (a - 2 * b * r)), wp) * Real::log2_const(wp) +
                 Real(2, wp) * bb * Real(Int(2 * r + 1), wp) * log(Real(Int(2 * r + 1), wp));
  rep.params.emplace_back("log_alpha_prime", log_alpha_p.round_to(96).str());
  rep.params.emplace_back("log_q_prime", log_q_p.round_to(96).str());
  rep.params.emplace_back("alpha_rate_per_b", ((-log_alpha_p - 2L) / bb).round_to(96).str());
  rep.params.emplace_back("q_rate_per_b", ((log_q_p + 2L) / bb).round_to(96).str());

  Real tt(t, wp);
  rep.margin = (-tt * log_alpha_p / log_q_p - (tt + Real(4 * delta, wp))).round_to(96);
  add_check(rep, "t_ratio_gt_t_plus_4delta", rep.margin.sign() > 0, rep.margin);
  return rep;
}

PlanReport plan_cor82(const Rat& eps, mpfr_prec_t prec) {
  if (!(eps > 0) || eps > Rat(1, 20)) throw InvalidInput("plan_cor82: requires 0 < eps <= 1/20");
  mpfr_prec_t wp = std::max<mpfr_prec_t>(prec, 256) + 32;

  PlanReport rep;
  rep.kind = "cor82";
  rep.params.emplace_back("eps", rat_str(eps));

  Real e(eps, wp);
  Real log_inv_eps = -log(e);
  Real ep = e - e / (Real(3, wp) * log_inv_eps);
  Real log_inv_ep = -log(ep);
  Real logC = Real(12, wp) / ep * log_inv_ep;
  Int M = ((Real(1, wp) - ep) * logC / (Real(1, wp) + Real::log2_const(wp))).floor_to_int();
  Real logD = Real(Rat(1) + eps, wp) * Real(M, wp) * (Real(1, wp) + Real::log2_const(wp));
  Real log_inv_eta = Real(15, wp) / e * log_inv_eps;
  Real logC1 = logC + log1p(exp(-logC));  // log(C+1)

  rep.params.emplace_back("eps_prime", ep.round_to(96).str());
  rep.params.emplace_back("log_C", logC.round_to(96).str());
  rep.params.emplace_back("M", M.get_str());
  rep.params.emplace_back("log_D", logD.round_to(96).str());
  rep.params.emplace_back("log_inv_eta", log_inv_eta.round_to(96).str());

  rep.margin = (logD - logC1).round_to(96);
  add_check(rep, "C_plus_1_le_D", rep.margin.sign() > 0, rep.margin);
  add_check(rep, "D_lt_inv_eta", (log_inv_eta - logD).sign() > 0, (log_inv_eta - logD).round_to(96));
  Real ratio = Real(1.006, wp) * logC / log_inv_eta;
  add_check(rep, "1.006_logC_lt_log_inv_eta", ratio < 1, (Real(1, wp) - ratio).round_to(96));

  // paper-style closing bound: 4 - 12 eps log(1/eps) - (1+eps)(1+log2) - 1/C
  Real paper_slack = Real(4, wp) - Real(12, wp) * e * log_inv_eps -
                     (Real(1, wp) + e) * (Real(1, wp) + Real::log2_const(wp)) - exp(-logC);
  rep.params.emplace_back("paper_slack_bound", paper_slack.round_to(96).str());
  return rep;
}

}  // namespace zetaforms
