#ifndef ZETAFORMS_POLYNOMIAL_HPP
#define ZETAFORMS_POLYNOMIAL_HPP

#include <vector>

#include "zetaforms/complexnum.hpp"
#include "zetaforms/rational.hpp"

namespace zetaforms {

// Dense univariate polynomial over Q, coefficients in ascending order.
// The zero polynomial is an empty coefficient vector (degree -1).
struct RatPoly {
  std::vector<Rat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& v) { return v == 0 ? RatPoly() : RatPoly({v}); }
  static RatPoly monomial(const Rat& v, size_t deg) {
    if (v == 0) return RatPoly();
    std::vector<Rat> cs(deg + 1, Rat(0));
    cs[deg] = v;
    RatPoly p; p.c = std::move(cs);
    return p;
  }

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
  const Rat& coeff(size_t i) const {
    static const Rat zero(0);
    return i < c.size() ? c[i] : zero;
  }

  Rat eval(const Rat& x) const {
    Rat r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }
  Real eval_real(const Real& x) const {
    Real r(0L, x.prec());
    for (size_t i = c.size(); i-- > 0;) r = r * x + Real(c[i], x.prec());
    return r;
  }
  Complex eval_complex(const Complex& x) const {
    mpfr_prec_t p = x.prec();
    Complex r(p);
    for (size_t i = c.size(); i-- > 0;) { r = r * x; r.re += Real(c[i], p); }
    return r;
  }

  RatPoly derivative() const {
    if (c.size() <= 1) return RatPoly();
    RatPoly d;
    d.c.reserve(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rat(static_cast<long>(i)));
    return d;
  }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    RatPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend RatPoly operator*(const Rat& s, const RatPoly& a) {
    if (s == 0) return RatPoly();
    RatPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
  }
  RatPoly pow(unsigned long e) const {
    RatPoly r = RatPoly::constant(1);
    RatPoly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  bool odd_part_only() const {
    for (size_t i = 0; i < c.size(); i += 2)
      if (c[i] != 0) return false;
    return true;
  }

  // Same roots, integer coefficients with content 1.
  RatPoly primitive_integer() const {
    if (is_zero()) return RatPoly();
    Int l = 1;
    for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    RatPoly r = Rat(l) * (*this);
    Int g = 0;
    for (const auto& q : r.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    if (g > 1) r = Rat(Int(1), g) * r;
    return r;
  }
};

// Dense univariate polynomial over Complex.
struct CPoly {
  std::vector<Complex> c;

  long degree() const { return static_cast<long>(c.size()) - 1; }
  void trim_exact_zeros() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  Complex eval(const Complex& x) const {
    Complex r(x.prec());
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }
  CPoly derivative() const {
    CPoly d;
    if (c.size() <= 1) return d;
    d.c.reserve(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(Real(static_cast<long>(i), c[i].prec()) * c[i]);
    return d;
  }
  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    mpfr_prec_t p = std::max(a.c[0].prec(), b.c[0].prec());
    r.c.assign(a.c.size() + b.c.size() - 1, Complex(p));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }

  static CPoly from_rational(const RatPoly& p, mpfr_prec_t prec) {
    CPoly r;
    r.c.reserve(p.c.size());
    for (const auto& q : p.c) r.c.emplace_back(Real(q, prec), Real(0L, prec));
    return r;
  }
};

}  // namespace zetaforms

#endif
