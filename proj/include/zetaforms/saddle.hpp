#ifndef ZETAFORMS_SADDLE_HPP
#define ZETAFORMS_SADDLE_HPP

#include <map>
#include <vector>

#include "zetaforms/polynomial.hpp"
#include "zetaforms/roots.hpp"

namespace zetaforms {

struct SaddleParams {
  int a = 9;
  int b = 1;
  Rat r = Rat(1);

  void validate() const;       // a, b odd; r > 0; 3br <= a
  bool b_divides_a() const { return a % b == 0; }
  std::vector<int> members() const {
    std::vector<int> e;
    for (int v = 1; v <= b; v += 2) e.push_back(v);
    return e;
  }
};

// Q(X) = (X+2r+1)^b (X-1)^{a+b} - (X-2r-1)^b (X+1)^{a+b}; the top-degree
// terms cancel, so deg Q < a+2b.
RatPoly build_Q(const SaddleParams& p);

// G_{r,lambda}(X) = (X+2r+1)(X-1)^{a/b+1} - e^{i pi lambda/b}(2r+1-X)(X+1)^{a/b+1}
// for odd lambda, -b < lambda <= b; requires b | a.
CPoly build_G(const SaddleParams& p, int lambda, mpfr_prec_t prec);

// The unique root of Q in (2r+1, oo); bracketed at 2r+1 + br/(a+b) first,
// widening geometrically if the sign computation needs it.
Real locate_mu1(const SaddleParams& p, mpfr_prec_t prec);

// The unique root of G_{r,lambda} with positive real part (upper half plane),
// for lambda in E \ {b}.
Complex locate_rho(const SaddleParams& p, int lambda, mpfr_prec_t prec);

// f, f', f0 = f - tau f', f'', g on the plane cut along (-oo,1] and
// [2r+1,oo). Branches are the principal ones, which continue the real values
// on (1, 2r+1); *_upper give the upper-bank boundary values at real
// tau > 2r+1 (the log(2r+1-tau) term picks up -i pi).
class CutPlane {
 public:
  CutPlane(const SaddleParams& p, mpfr_prec_t prec);

  Complex f(const Complex& tau) const;
  Complex f_prime(const Complex& tau) const;
  Complex f0(const Complex& tau) const;
  Complex f_second(const Complex& tau) const;
  Complex g(const Complex& tau) const;

  Complex f_upper(const Real& tau) const;
  Complex f_prime_upper(const Real& tau) const;
  Complex f0_upper(const Real& tau) const;
  Real f_second_upper(const Real& tau) const;
  Real log_abs_g_upper(const Real& tau) const;
  Real arg_g_upper() const;  // -b pi / 2

  // Verifies no log argument crosses the negative real axis along the
  // straight path from the midpoint r+1 of (1, 2r+1); throws on a jump.
  void continuity_walk_check(const Complex& tau, int steps = 64) const;

  mpfr_prec_t prec() const { return prec_; }

 private:
  void check_domain(const Complex& tau) const;
  SaddleParams p_;
  mpfr_prec_t prec_;
  Real two_r_plus_1_;
  Rat coef_log2_;  // 2(a - 2br)
};

struct HypothesisReport {
  bool growth_ratio_ok = false;   // (3+1/r)^b < (1+1/(2r))^{a+b}
  Real growth_margin;
  bool mu1_window_ok = false;     // mu1 <= 2r+1 + min(br(r+1)/(2(a+b)), r(r+1)/(3(2r+1)))
  Real mu1_margin;
  bool r_in_interval = false;     // r >= 1 and (9/2) b r log(4r+3) <= a
  Real interval_margin;
  bool three_br_ok = false;       // 3br <= a
};

HypothesisReport check_hypotheses(const SaddleParams& p, mpfr_prec_t prec);

struct SaddleData {
  SaddleParams params;
  mpfr_prec_t prec = kDefaultPrec;
  Real mu1;
  std::map<int, Complex> rho;        // rho[b] = mu1 + i*0 by convention
  std::map<int, Real> eps;           // exp Re f0(rho)
  std::map<int, Real> omega;         // Im f0(rho)
  std::map<int, Real> phi;           // -arg f''(rho)/2 + arg g(rho)
  std::map<int, Complex> fpp;
  std::map<int, Complex> g_at_rho;
  std::map<int, Real> fprime_residual;  // |f'(rho) - i lambda pi|
  bool exceptional_candidate = false;   // some phi within 1e-8 of pi/2 mod pi
};

SaddleData asymptotics(const SaddleParams& p, mpfr_prec_t prec);

// Re f(mu1 + i0); the growth rate of the dominant linear form.
Real re_f_upper_at_mu1(const SaddleParams& p, mpfr_prec_t prec);

// Psi_lambda(r) = (g(rho)^2/|g(rho)|^2) (|f''(rho)|/f''(rho)); lambda != b,
// 0 < r < a/(3b).
Complex psi(int a, int b, int lambda, const Rat& r, mpfr_prec_t prec);

// Grid scan for |Psi + 1| < tol over r in [1, (a-1)/(3b)].
std::vector<Rat> scan_exceptional(int a, int b, int lambda, int grid, const Real& tol,
                                  mpfr_prec_t prec);

// Distance from x to the set pi/2 + pi Z.
Real dist_to_half_pi_mod_pi(const Real& x);

}  // namespace zetaforms

#endif
