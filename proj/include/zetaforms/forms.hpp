#ifndef ZETAFORMS_FORMS_HPP
#define ZETAFORMS_FORMS_HPP

#include <map>
#include <utility>
#include <vector>

#include "zetaforms/cotangent.hpp"
#include "zetaforms/polynomial.hpp"

namespace zetaforms {

struct FormParams {
  int a = 3;
  int b = 1;
  Rat r = Rat(1);
  long n = 1;

  void validate() const;
  long rn() const;          // r*n, integral by the invariants
  long two_rn() const { return 2 * rn(); }
  Int r_floor() const { return floor_rat(r); }
  Rat r_frac() const { return frac_part(r); }
  std::vector<int> members() const {  // E = {1, 3, ..., b}
    std::vector<int> e;
    for (int v = 1; v <= b; v += 2) e.push_back(v);
    return e;
  }
};

// summand(t) = sum_{j,m} c[j][m] (t-m)^{-j}, 1 <= j <= a, -n <= m <= n.
struct PartialFractions {
  int a = 0;
  long n = 0;
  std::vector<std::vector<Rat>> c;  // c[j-1][m+n]

  const Rat& at(int j, long m) const { return c[j - 1][m + n]; }
  Rat row_sum(int j) const {
    Rat s(0);
    for (const auto& v : c[j - 1]) s += v;
    return s;
  }
};

struct LinearFormFamily {
  FormParams params;
  Rat F;                     // (2n)!^{a-2b[r]} / (2{r}n)!^{2b}
  std::map<int, Rat> ltilde; // beta in E
  std::map<int, Rat> ell;    // odd i, 3 <= i <= a

  bool all_zero() const;
};

// Pochhammer-product summand: numerator and denominator polynomials in t.
std::pair<RatPoly, RatPoly> build_summand(const FormParams& p);

PartialFractions partial_fractions(const FormParams& p);

LinearFormFamily extract_linear_form(const FormParams& p);

// ltilde_beta + sum_i ell_i C(beta+i-2, beta-1) zeta(beta+i-1); the working
// precision escalates internally to absorb the cancellation.
Real eval_form(const LinearFormFamily& f, int beta, mpfr_prec_t prec);

// Direct series summation: exact early terms through the logarithmic
// derivative recursion, Euler-Maclaurin tails on the shifted partial
// fractions.
Real eval_series(const FormParams& p, int beta, mpfr_prec_t prec);

// S_{lambda,n} = sum_beta d[beta][lambda] pi^{-beta} I_{beta,n}.
Real assemble_S(const LinearFormFamily& f, const CotangentBasis& basis, int lambda, mpfr_prec_t prec);

struct GrowthRow {
  long n = 0;
  Real coeff_root;      // (max |coefficient|)^{1/n}
  Real i1_root;         // (normalized |I_{1,n}|)^{1/n}
  Real log_i1_over_n;   // (1/n) log of the normalized |I_{1,n}|
  bool coeff_within_bound = true;
};

struct GrowthTable {
  Real coeff_bound;     // 2^{2(a-2b[r])} (2r+1)^{2b(2r+1)} / (2{r})^{4b{r}}
  std::vector<GrowthRow> rows;
};

// Skips n with r*n not an integer.
GrowthTable growth_diagnostics(int a, int b, const Rat& r, const std::vector<long>& ns,
                               mpfr_prec_t prec);

}  // namespace zetaforms

#endif
