#ifndef ZETAFORMS_SPECIAL_HPP
#define ZETAFORMS_SPECIAL_HPP

#include "zetaforms/real.hpp"

namespace zetaforms {

// Exact Bernoulli number B_m (B_1 = -1/2), via the defining recurrence.
Rat bernoulli(unsigned long m);

// zeta(s) for integer s >= 2, |result - zeta(s)| < 2^{1-prec} * zeta(s).
// Euler-Maclaurin with a rigorous tail bound; values are cached.
Real zeta_int(long s, mpfr_prec_t prec);

// sum_{v > L} v^{-s} for integer s >= 2, L >= 0, relative error < 2^{8-prec}.
Real zeta_tail(long s, long L, mpfr_prec_t prec);

// Exact partial sums: sum_{u=1}^{n} u^{-j} (harmonic numbers for j = 1).
Rat power_partial_sum(long n, long j);

}  // namespace zetaforms

#endif
