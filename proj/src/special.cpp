#include "zetaforms/special.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace zetaforms {

Rat parse_rational(const std::string& s) {
  auto caret = s.find('^');
  if (caret != std::string::npos) {
    Int base(s.substr(0, caret));
    unsigned long e = std::stoul(s.substr(caret + 1));
    return Rat(pow_int(base, e));
  }
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Rat q(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  q.canonicalize();
  if (q.get_den() == 0) throw InvalidInput("parse_rational: zero denominator");
  return q;
}

namespace {
std::mutex g_cache_mu;
std::vector<Rat> g_bernoulli{Rat(1)};
std::map<std::pair<long, mpfr_prec_t>, Real> g_zeta_cache;
std::map<std::tuple<long, long, mpfr_prec_t>, Real> g_tail_cache;
}  // namespace

Rat bernoulli(unsigned long m) {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  while (g_bernoulli.size() <= m) {
    unsigned long k = g_bernoulli.size();
    // sum_{j=0}^{k} C(k+1, j) B_j = 0
    Rat s(0);
    for (unsigned long j = 0; j < k; ++j) s += Rat(binomial(k + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-s / Rat(static_cast<long>(k + 1)));
  }
  return g_bernoulli[m];
}

// Euler-Maclaurin tail of sum_{v >= a} v^{-s}:
//   a^{1-s}/(s-1) + a^{-s}/2 + sum_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} a^{1-s-2k}
// with |remainder| <= 4 (2pi)^{-2K} (s)_{2K} a^{1-s-2K} / (s+2K-1).
// Returns the value; aborts to a larger cutoff when the bound cannot reach
// the target at this a.
static bool em_from(long s, const Int& a, mpfr_prec_t wp, const Real& abs_target, Real& out) {
  Real av(a, wp);
  Real inv_a = 1L / av;
  Real a_pow = pow(av, 1 - s);                                   // a^{1-s}
  Real total = a_pow / Real(static_cast<long>(s) - 1, wp);       // integral part
  total += a_pow * inv_a / Real(2, wp);                          // a^{-s}/2
  // rising factorial (s)_m tracked incrementally
  Rat rising(1);
  long m = 0;
  const long kmax = 400;
  for (long k = 1; k <= kmax; ++k) {
    while (m < 2 * k - 1) { rising *= Rat(s + m); ++m; }
    // term_k = B_{2k}/(2k)! * (s)_{2k-1} * a^{1-s-2k}
    Rat coef = bernoulli(2 * k) / Rat(factorial(2 * k)) * rising;
    Real term = Real(coef, wp) * a_pow * pow(inv_a, 2 * k);
    total += term;
    // remainder bound after adding term_k
    Rat rise2k = rising * Rat(s + m);  // (s)_{2k}
    Real bound = Real(4, wp) * pow(Real::pi(wp) * 2L, -2 * k)
                 * Real(rise2k, wp) * a_pow * pow(inv_a, 2 * k)
                 / Real(s + 2 * k - 1, wp);
    bound = abs(bound) * Real(2, wp);  // rounding slack
    if (bound < abs_target) { out = total; return true; }
    // diverging tail: EM terms stopped shrinking, need a larger cutoff
    if (k > 4 && abs(term) > a_pow) return false;
  }
  return false;
}

Real zeta_tail(long s, long L, mpfr_prec_t prec) {
  if (s < 2) throw InvalidInput("zeta_tail: s must be >= 2");
  if (L < 0) throw InvalidInput("zeta_tail: L must be >= 0");
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_tail_cache.find({s, L, prec});
    if (it != g_tail_cache.end()) return it->second;
  }
  mpfr_prec_t wp = prec + 32;
  // crude magnitude of the tail for the absolute target
  Real first(Rat(Int(1), pow_int(Int(L + 1), static_cast<unsigned long>(s))), wp);
  Real abs_target = first * Real::pow2(-static_cast<long>(prec) - 12, wp);
  Int a(L + 1);
  Real em_part(wp);
  Real direct(0L, wp);
  // push the EM cutoff out until the remainder bound can meet the target
  long min_a = std::max<long>(L + 1, static_cast<long>(wp) / 4 + s);
  while (a < min_a) {
    direct += Real(Rat(Int(1), pow_int(Int(a), static_cast<unsigned long>(s))), wp);
    a += 1;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (em_from(s, a, wp, abs_target, em_part)) {
      Real r = (direct + em_part).round_to(prec);
      std::lock_guard<std::mutex> lk(g_cache_mu);
      g_tail_cache.insert({{s, L, prec}, r});
      return r;
    }
    for (int i = 0; i < 64; ++i) {
      direct += Real(Rat(Int(1), pow_int(Int(a), static_cast<unsigned long>(s))), wp);
      a += 1;
    }
  }
  throw InternalError("zeta_tail: Euler-Maclaurin failed to converge");
}

Real zeta_int(long s, mpfr_prec_t prec) {
  if (s <= 1) throw InvalidInput("zeta_int: pole or divergent for s <= 1");
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_zeta_cache.find({s, prec});
    if (it != g_zeta_cache.end()) return it->second;
  }
  mpfr_prec_t wp = prec + 32;
  long L = std::max<long>(8, static_cast<long>(wp) / 4 + s);
  Rat head(0);
  for (long v = 1; v <= L; ++v) head += Rat(Int(1), pow_int(Int(v), static_cast<unsigned long>(s)));
  Real r = (Real(head, wp) + zeta_tail(s, L, wp)).round_to(prec);
  std::lock_guard<std::mutex> lk(g_cache_mu);
  g_zeta_cache.insert({{s, prec}, r});
  return r;
}

Rat power_partial_sum(long n, long j) {
  if (n < 0 || j < 1) throw InvalidInput("power_partial_sum: need n >= 0, j >= 1");
  Rat s(0);
  for (long u = 1; u <= n; ++u) s += Rat(Int(1), pow_int(Int(u), static_cast<unsigned long>(j)));
  return s;
}

}  // namespace zetaforms
