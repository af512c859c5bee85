#ifndef ZETAFORMS_ROOTS_HPP
#define ZETAFORMS_ROOTS_HPP

#include <vector>

#include "zetaforms/polynomial.hpp"

namespace zetaforms {

// Refine the single root of p in (lo, hi) to prec bits. Exact rational sign
// tests drive the bracketing; the result carries an exact sign-change
// certificate at relative radius 2^{4-prec}.
Real real_root_refine(const RatPoly& p, const Rat& lo, const Rat& hi, mpfr_prec_t prec);

struct RootSet {
  std::vector<Complex> roots;       // sorted by (re, im)
  std::vector<Real> newton_steps;   // |p/p'| at each root, the residual measure
};

// All complex roots via Aberth simultaneous iteration, with a per-root
// simple-root certificate (Newton step well below pairwise separation).
RootSet complex_roots(const CPoly& p, mpfr_prec_t prec);
RootSet complex_roots(const RatPoly& p, mpfr_prec_t prec);

// Single-root Newton polish at target precision.
Complex newton_polish(const CPoly& p, const Complex& z0, mpfr_prec_t prec);

}  // namespace zetaforms

#endif
