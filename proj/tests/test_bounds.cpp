#include <doctest.h>

#include <algorithm>

#include "zetaforms/bounds.hpp"
#include "zetaforms/saddle.hpp"

using namespace zetaforms;

TEST_CASE("log alpha and log Q closed forms at r = 1") {
  mpfr_prec_t prec = 192;
  Real la = log_alpha(Rat(1), 9, 1, prec);
  Real lq = log_Q_bound(Rat(1), 9, 1, prec);
  Real l2 = Real::log2_const(prec);
  Real want_a = Real(18, prec) + Real(4, prec) * l2;
  Real want_q = Real(18, prec) + Real(14, prec) * l2 + Real(6, prec) * log(Real(3, prec));
  CHECK(abs(la - want_a) < Real::pow2(-180, 64));
  CHECK(abs(lq - want_q) < Real::pow2(-180, 64));
  CHECK_THROWS_AS(log_alpha(Rat(1, 2), 9, 1, prec), InvalidInput);
}

TEST_CASE("integer r drops the fractional terms") {
  mpfr_prec_t prec = 160;
  // compute with the flag off but a fractional part of zero: values agree
  Real la1 = log_alpha(Real(2, prec), Real(15, prec), Real(3, prec), true);
  Real la2 = log_alpha(Real(2, prec), Real(15, prec), Real(3, prec), false);
  CHECK(la1 == la2);  // {r} log {r} -> 0 at the limit is exact 0 here
}

TEST_CASE("fractional r evaluates consistently across precisions") {
  Real lo_a = log_alpha(Rat(3, 2), 45, 3, 128);
  Real hi_a = log_alpha(Rat(3, 2), 45, 3, 320);
  CHECK(abs(lo_a - hi_a) < abs(hi_a) * Real::pow2(-100, 64));
  Real lo_q = log_Q_bound(Rat(3, 2), 45, 3, 128);
  Real hi_q = log_Q_bound(Rat(3, 2), 45, 3, 320);
  CHECK(abs(lo_q - hi_q) < abs(hi_q) * Real::pow2(-100, 64));
  CHECK(lo_q > 0);
}

TEST_CASE("r_max") {
  auto r9 = r_max(9, 1, 128);
  REQUIRE(r9.has_value());
  CHECK(*r9 > Real(1.0, 64));
  CHECK(*r9 < Real(1.05, 64));
  auto r63 = r_max(63, 7, 128);
  REQUIRE(r63.has_value());
  CHECK(abs(*r63 - *r9) < Real::pow2(-100, 64));  // depends on a/b only
  CHECK(!r_max(7, 1, 128).has_value());
}

TEST_CASE("dim_lower_bound at (9,1)") {
  BoundEvaluation at1 = evaluate_bound(Real(1, 192), 9, 1, 192);
  CHECK(at1.dim_bound > Real(0.35, 64));
  CHECK(at1.dim_bound < Real(0.45, 64));
  BoundEvaluation sup = dim_lower_bound(9, 1, 32, 160);
  CHECK(sup.dim_bound >= at1.dim_bound);
  CHECK(sup.dim_bound < Real(0.45, 64));
  CHECK_THROWS_AS(dim_lower_bound(7, 1, 16, 128), InvalidInput);
}

TEST_CASE("huge a/b sanity through the planner chain") {
  // at a/b = 20^240 the bound exceeds ((b+1)/2)(1-eps)/(1+log2) log(a/b) for eps = 1/20
  mpfr_prec_t wp = 2048;
  Real logab = Real(240, wp) * log(Real(20, wp));
  Real r = exp(Real(Rat(1) - Rat(1, 20) / 2, wp) * logab);
  Real a = exp(logab);  // b = 1
  Real la = log_alpha(r, a, Real(1, wp), true);
  Real lq = log_Q_bound(r, a, Real(1, wp), true);
  Real bound = Real(1, wp) - la / lq;
  Real target = Real(Rat(19, 20), wp) / (Real(1, wp) + Real::log2_const(wp)) * logab;
  CHECK(bound > target);
}

TEST_CASE("criterion rank bounds") {
  TauVector tv;
  tv.tau = {Real(0.5, 128)};
  CHECK(abs(criterion_rank_bound(tv) - Real(1.5, 128)) < Real::pow2(-100, 64));
  TauVector tv3;
  tv3.tau = {Real(0.9, 128), Real(0.5, 128), Real(0.2, 128)};
  CHECK(abs(refined_rank_bound(3, tv3) - criterion_rank_bound(tv3)) < Real::pow2(-100, 64));
  CHECK(refined_rank_bound(1, tv3) < refined_rank_bound(2, tv3));
  TauVector bad;
  bad.tau = {Real(0.2, 128), Real(0.5, 128)};
  CHECK_THROWS_AS(criterion_rank_bound(bad), InvalidInput);
  CHECK_THROWS_AS(refined_rank_bound(0, tv3), InvalidInput);
}

TEST_CASE("tau_from_eps with the (45,5,2) saddle data") {
  SaddleParams p{45, 5, Rat(2)};
  SaddleData d = asymptotics(p, 160);
  TauVector tv = tau_from_eps(d.eps, Rat(2), 45, 5, 160);
  REQUIRE(tv.tau.size() == 3);
  CHECK(tv.tau[0] > tv.tau[1]);
  CHECK(tv.tau[1] > tv.tau[2]);
  // tau_k >= -log alpha / log Q follows from the eps_b bound
  Real la = log_alpha(Rat(2), 45, 5, 160);
  Real lq = log_Q_bound(Rat(2), 45, 5, 160);
  CHECK(tv.tau[2] >= -la / lq - Real::pow2(-120, 64));
  // rank bound dominates k (1 - log alpha/log Q)
  Real k(3, 160);
  CHECK(criterion_rank_bound(tv) > k * (Real(1, 160) - la / lq) - Real::pow2(-120, 64));

  std::map<int, Real> bad = d.eps;
  bad[3] = bad[5] + Real(1, 160);  // breaks monotonicity
  CHECK_THROWS_AS(tau_from_eps(bad, Rat(2), 45, 5, 160), InvalidInput);
}

TEST_CASE("plan_th70 rejects A below the threshold") {
  PlanReport rep = plan_th70(Rat(1, 20), Int(1000), Int(1), 192);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "A_ge_eps^(-12/eps)*D") {
      found = true;
      CHECK(!c.pass);
    }
  CHECK(found);
  CHECK(!rep.all_pass());
}

TEST_CASE("plan_th70 re-verifies everything at eps=1/25, D=3") {
  Int A = pow_int(Int(25), 300) * 3;  // eps^{-12/eps} * D
  PlanReport rep = plan_th70(Rat(1, 25), A, Int(3), 256);
  CHECK(rep.all_pass());
  CHECK(rep.margin.sign() > 0);
  // every named inequality present
  std::vector<std::string> names;
  for (const auto& c : rep.checks) names.push_back(c.name);
  for (const char* want : {"eps_in_(0,1/20]", "A_ge_eps^(-12/eps)*D", "odd_b_in_window",
                           "odd_multiple_a_in_window", "r_ge_1", "r_in_I_ab", "2br_lt_a",
                           "k_ratio_gt_(k+2D)N"}) {
    CHECK(std::find(names.begin(), names.end(), want) != names.end());
  }
}

TEST_CASE("paper slack constants reproduce within 10 percent") {
  Int A = pow_int(Int(20), 240);
  PlanReport t70 = plan_th70(Rat(1, 20), A, Int(1), 256);
  Real slack70(64);
  for (const auto& [k, v] : t70.params)
    if (k == "paper_slack_bound") slack70 = parse_decimal(v, 128);
  CHECK(abs(slack70 - Real(0.24, 128)) / Real(0.24, 128) < Real(0.1, 64));

  PlanReport c82 = plan_cor82(Rat(1, 20), 256);
  Real slack82(64);
  for (const auto& [k, v] : c82.params)
    if (k == "paper_slack_bound") slack82 = parse_decimal(v, 128);
  CHECK(abs(slack82 - Real(0.4, 128)) / Real(0.4, 128) < Real(0.1, 64));
}

TEST_CASE("plan_th145 input validation and small cases") {
  CHECK_THROWS_AS(plan_th145(Int(2), 192), InvalidInput);
  PlanReport rep = plan_th145(Int(3), 192);
  CHECK(rep.all_pass());
  CHECK(rep.margin.sign() > 0);
}

TEST_CASE("plan_cor82 margins and validation") {
  CHECK_THROWS_AS(plan_cor82(Rat(1, 10), 192), InvalidInput);
  PlanReport rep = plan_cor82(Rat(1, 40), 256);
  CHECK(rep.all_pass());
  CHECK(rep.margin.sign() > 0);
  REQUIRE(rep.checks.size() >= 3);
}
