#ifndef ZETAFORMS_RATIONAL_HPP
#define ZETAFORMS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zetaforms {

using Int = mpz_class;
using Rat = mpq_class;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal contradiction: a certificate or a theory-guaranteed step failed.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;  // base canonical => powers canonical
}

// d_k = lcm(1,...,k)
inline Int lcm_d(unsigned long k) {
  if (k == 0) throw InvalidInput("lcm_d: k must be >= 1");
  Int r = 1;
  for (unsigned long j = 2; j <= k; ++j) mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), j);
  return r;
}

// mpq_class(num, den) does not canonicalize; this does.
inline Rat rat_of(const Int& num, const Int& den) {
  if (den == 0) throw InvalidInput("rat_of: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}
inline Rat rat_of(long num, long den) { return rat_of(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Rat frac_part(const Rat& q) { return q - Rat(floor_rat(q)); }

// Parses "p", "p/q" or "a^e" (integer base/exponent) into a rational.
Rat parse_rational(const std::string& s);

}  // namespace zetaforms

#endif
