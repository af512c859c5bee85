#ifndef ZETAFORMS_COMPLEXNUM_HPP
#define ZETAFORMS_COMPLEXNUM_HPP

#include "zetaforms/real.hpp"

namespace zetaforms {

// Rectangular complex number over Real. arg() and log() use the principal
// branch (arg in (-pi, pi]).
struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = kDefaultPrec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
  static Complex from_real(const Real& r) { return Complex(r, Real(0L, r.prec())); }

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
  Complex& operator+=(const Complex& o) { *this = *this + o; return *this; }
  Complex& operator-=(const Complex& o) { *this = *this - o; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

  friend Complex conj(const Complex& a) { return {a.re, -a.im}; }
  friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
  friend Real norm2(const Complex& a) { return a.re * a.re + a.im * a.im; }
  friend Real arg(const Complex& a) { return atan2(a.im, a.re); }
  friend Complex log(const Complex& a) { return {log(abs(a)), arg(a)}; }
  friend Complex exp(const Complex& a) {
    Real m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
  }
  friend Complex inv(const Complex& a) {
    Real d = norm2(a);
    return {a.re / d, -a.im / d};
  }

  std::string str(size_t digits = 0) const { return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + abs(im).str(digits) + "i"; }
};

// exp(i * pi * num / den) at the given precision.
inline Complex unit_phase(long num, long den, mpfr_prec_t prec) {
  Real t = Real::pi(prec) * num / Real(den, prec);
  return {cos(t), sin(t)};
}

}  // namespace zetaforms

#endif
