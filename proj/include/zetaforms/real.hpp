#ifndef ZETAFORMS_REAL_HPP
#define ZETAFORMS_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "zetaforms/rational.hpp"

namespace zetaforms {

inline constexpr mpfr_prec_t kDefaultPrec = 256;
inline constexpr mpfr_prec_t kMinPrec = 64;

// Arbitrary-precision real with value semantics. Every value carries an
// explicit precision; binary operations produce the larger of the two
// operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
  Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x, mpfr_prec_t prec) : Real(static_cast<long>(x), prec) {}
  Real(const Int& z, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  Real(const Rat& q, mpfr_prec_t prec) { mpfr_init2(v_, clamp(prec)); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, kMinPrec); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real round_to(mpfr_prec_t prec) const { Real r(prec); mpfr_set(r.v_, v_, MPFR_RNDN); return r; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }
  bool is_integer() const { return mpfr_integer_p(v_); }
  // Position of the leading bit; 0 for zero.
  mpfr_exp_t exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  Int floor_to_int() const {
    Int z;
    mpfr_t t; mpfr_init2(t, prec()); mpfr_floor(t, v_);
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDZ); mpfr_clear(t);
    return z;
  }
  Int ceil_to_int() const {
    Int z;
    mpfr_t t; mpfr_init2(t, prec()); mpfr_ceil(t, v_);
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDZ); mpfr_clear(t);
    return z;
  }
  // Exact value as a rational (finite binary floats are dyadic).
  Rat to_rational() const {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  // Decimal string, round-trippable at this precision when digits == 0.
  std::string str(size_t digits = 0) const;

  static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  static Real log2_const(mpfr_prec_t prec) { Real r(prec); mpfr_const_log2(r.v_, MPFR_RNDN); return r; }
  static Real pow2(long e, mpfr_prec_t prec) { Real r(prec); mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN); return r; }

  friend Real operator-(const Real& a) { Real r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

#define ZETAFORMS_REAL_BINOP(op, fn)                                        \
  friend Real operator op(const Real& a, const Real& b) {                   \
    Real r(std::max(a.prec(), b.prec()));                                   \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                        \
    return r;                                                               \
  }                                                                         \
  friend Real operator op(const Real& a, long b) {                          \
    Real r(a.prec());                                                       \
    fn##_si(r.v_, a.v_, b, MPFR_RNDN);                                      \
    return r;                                                               \
  }
  ZETAFORMS_REAL_BINOP(+, mpfr_add)
  ZETAFORMS_REAL_BINOP(-, mpfr_sub)
  ZETAFORMS_REAL_BINOP(*, mpfr_mul)
  ZETAFORMS_REAL_BINOP(/, mpfr_div)
#undef ZETAFORMS_REAL_BINOP
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }

  Real& operator+=(const Real& o) { *this = *this + o; return *this; }
  Real& operator-=(const Real& o) { *this = *this - o; return *this; }
  Real& operator*=(const Real& o) { *this = *this * o; return *this; }
  Real& operator/=(const Real& o) { *this = *this / o; return *this; }

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

#define ZETAFORMS_REAL_FN(name, fn)                                         \
  friend Real name(const Real& a) {                                         \
    Real r(a.prec());                                                       \
    fn(r.v_, a.v_, MPFR_RNDN);                                              \
    return r;                                                               \
  }
  ZETAFORMS_REAL_FN(abs, mpfr_abs)
  ZETAFORMS_REAL_FN(sqrt, mpfr_sqrt)
  ZETAFORMS_REAL_FN(log, mpfr_log)
  ZETAFORMS_REAL_FN(log1p, mpfr_log1p)
  ZETAFORMS_REAL_FN(exp, mpfr_exp)
  ZETAFORMS_REAL_FN(sin, mpfr_sin)
  ZETAFORMS_REAL_FN(cos, mpfr_cos)
#undef ZETAFORMS_REAL_FN

  friend Real atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& a, const Real& e) {
    Real r(std::max(a.prec(), e.prec()));
    mpfr_pow(r.v_, a.v_, e.v_, MPFR_RNDN);
    return r;
  }
  friend Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
  friend Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, kMinPrec); }
  mpfr_t v_;
};

inline std::string Real::str(size_t digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (is_zero()) return "0";
  if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 3;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  bool neg = !m.empty() && m[0] == '-';
  std::string d = neg ? m.substr(1) : m;
  while (d.size() > 1 && d.back() == '0') d.pop_back();
  std::string out = (neg ? "-" : "");
  out += d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  out += "e" + std::to_string(e - 1);
  return out;
}

}  // namespace zetaforms

#endif
