#ifndef ZETAFORMS_BOUNDS_HPP
#define ZETAFORMS_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetaforms/real.hpp"

namespace zetaforms {

// log alpha_{r,a,b} = 2(a+b-1) + 2b(r+1)log2 - 2(a-2br)log r - 4b{r}log{r}
// log Q_{r,a,b}     = 2(a+b-1) + 2(a-2b[r])log2 + 2b(2r+1)log(2r+1) - 4b{r}log(2{r})
// Fractional-part terms vanish for integer r. Requires r >= 1.
Real log_alpha(const Real& r, const Real& a, const Real& b, bool r_is_integer);
Real log_Q_bound(const Real& r, const Real& a, const Real& b, bool r_is_integer);
Real log_alpha(const Rat& r, long a, long b, mpfr_prec_t prec);
Real log_Q_bound(const Rat& r, long a, long b, mpfr_prec_t prec);

// The unique r >= 1 with (9/2) b r log(4r+3) = a; nullopt when even r = 1
// violates the inequality (the admissible interval I_{a,b} is empty).
std::optional<Real> r_max(long a, long b, mpfr_prec_t prec);

struct BoundEvaluation {
  Real r;
  Real log_alpha_v;
  Real log_q_v;
  Real ratio;      // 1 - log alpha / log Q
  Real dim_bound;  // ((b+1)/2) * ratio
};

BoundEvaluation evaluate_bound(const Real& r, long a, long b, mpfr_prec_t prec);

// Maximizes ((b+1)/2)(1 - log alpha/log Q) over [1, r_max]: coarse grid,
// explicit evaluation at integer r and just-right of it, golden-section
// refinement around the best point.
BoundEvaluation dim_lower_bound(long a, long b, int grid, mpfr_prec_t prec);

// Evenly spaced evaluations over [1, r_max], for tables and plotting.
std::vector<BoundEvaluation> bound_table(long a, long b, int grid, mpfr_prec_t prec);

struct TauVector {
  std::vector<Real> tau;  // strictly decreasing
  size_t k() const { return tau.size(); }
};

// k + tau_1 + ... + tau_k
Real criterion_rank_bound(const TauVector& tv);
// t + tau_{k+1-t} + ... + tau_k
Real refined_rank_bound(size_t t, const TauVector& tv);

// tau_{(lambda+1)/2} = -log(e^{2(a+b-1)} eps_lambda {r}^{-4b{r}}) / log Q
TauVector tau_from_eps(const std::map<int, Real>& eps, const Rat& r, long a, long b,
                       mpfr_prec_t prec);

struct PlanCheck {
  std::string name;
  bool pass = false;
  Real margin;
  std::string note;
};

struct PlanReport {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<PlanCheck> checks;
  Real margin;  // the plan's decisive inequality margin

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Parameter planner behind the spread theorem for [d, a] windows:
// odd b in (1+8D/eps, 9D/eps), the odd multiple a of b near A,
// r = [(A/D)^{1-eps/2}], N = [(1-eps)/(1+log 2) log(A/D)], then the
// decisive check k (-log alpha/log Q) > (k+2D) N.
PlanReport plan_th70(const Rat& eps, const Int& A, const Int& D, mpfr_prec_t prec);

// Imported constant: exponential rate of the arithmetic correction factor.
inline constexpr const char* kVarpiDigits = "17.068934571314868572";

// Planner for the two-independent-zeta theorem: b from D, a = 149b, r = 11,
// projection size t, separation delta; decisive check
// -t log alpha'/log Q' > t + 4 delta.
PlanReport plan_th145(const Int& D, mpfr_prec_t prec, const std::string& varpi = kVarpiDigits);

// Planner for the sparse irrational sequence: eps' = eps - eps/(3 log(1/eps)),
// C = eps'^{-12/eps'}, M, D = (2e)^{(1+eps)M}; decisive check C+1 <= D < 1/eta.
PlanReport plan_cor82(const Rat& eps, mpfr_prec_t prec);

Real parse_decimal(const std::string& s, mpfr_prec_t prec);

}  // namespace zetaforms

#endif
