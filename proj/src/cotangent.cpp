#include "zetaforms/cotangent.hpp"

namespace zetaforms {

namespace {

void require_odd(int b, const char* who) {
  if (b < 1 || b % 2 == 0) throw InvalidInput(std::string(who) + ": requires an odd value >= 1");
}

}  // namespace

RatPoly cot_derivative_poly(int m) {
  RatPoly q = RatPoly::monomial(Rat(1), 1);
  RatPoly shift;  // -(1+X^2)
  shift.c = {Rat(-1), Rat(0), Rat(-1)};
  for (int i = 0; i < m; ++i) q = shift * q.derivative();
  return q;
}

RatPoly cot_poly(int beta) {
  require_odd(beta, "cot_poly");
  // cot_beta(z) = q_{beta-1}(cot z)/(beta-1)!  (the (-1)^{beta-1} sign is +1).
  RatPoly q = cot_derivative_poly(beta - 1);
  // sin^beta q(cot) = sum_j a_j cos^j sin^{beta-j}; odd j only, sin^2 = 1-cos^2
  RatPoly one_minus_x2;
  one_minus_x2.c = {Rat(1), Rat(0), Rat(-1)};
  RatPoly v;
  for (long j = 0; j <= q.degree(); ++j) {
    if (q.coeff(j) == 0) continue;
    if (j % 2 == 0) throw InternalError("cot_poly: even cotangent power for odd beta");
    v = v + q.coeff(j) * (RatPoly::monomial(Rat(1), j) * one_minus_x2.pow((beta - j) / 2));
  }
  v = Rat(Int(1), factorial(beta - 1)) * v;
  if (v.eval(Rat(1)) != 1) throw InternalError("cot_poly: V_beta(1) != 1");
  return v;
}

std::map<int, Rat> expand_symmetric(const RatPoly& W, int b) {
  require_odd(b, "expand_symmetric");
  if (W.degree() > b) throw InvalidInput("expand_symmetric: degree exceeds b");
  if (!W.odd_part_only()) throw InvalidInput("expand_symmetric: polynomial must be odd");
  std::map<int, Rat> out;
  for (int l = 1; l <= b; l += 2) out[l] = Rat(0);
  // peel Chebyshev T_n terms: W = sum w_n T_n, then c_n = w_n / 2.
  RatPoly rest = W;
  std::vector<RatPoly> T(b + 1);
  T[0] = RatPoly::constant(Rat(1));
  if (b >= 1) T[1] = RatPoly::monomial(Rat(1), 1);
  RatPoly two_x = RatPoly::monomial(Rat(2), 1);
  for (int n = 2; n <= b; ++n) T[n] = two_x * T[n - 1] - T[n - 2];
  for (long n = rest.degree(); n >= 1; n = rest.degree()) {
    Rat w = rest.c[n] / T[n].coeff(n);
    out[static_cast<int>(n)] = w / 2;
    rest = rest - w * T[n];
  }
  if (!rest.is_zero()) throw InternalError("expand_symmetric: nonzero constant remainder for odd W");
  return out;
}

std::map<int, Rat> expand_symmetric_laurent(const RatPoly& W, int b) {
  require_odd(b, "expand_symmetric_laurent");
  // Laurent coefficients of W((Y+1/Y)/2) on exponents -b..b, offset by +b.
  std::vector<Rat> lc(2 * b + 1, Rat(0));
  for (long j = 0; j <= W.degree(); ++j) {
    if (W.coeff(j) == 0) continue;
    Rat base = W.coeff(j) / Rat(pow_int(Int(2), j));
    for (long i = 0; i <= j; ++i) {
      long e = j - 2 * i;  // exponent of Y
      lc[e + b] += base * Rat(binomial(j, i));
    }
  }
  std::map<int, Rat> out;
  for (int l = 1; l <= b; l += 2) {
    if (lc[b + l] != lc[b - l]) throw InternalError("expand_symmetric_laurent: asymmetric expansion");
    out[l] = lc[b + l];
  }
  return out;
}

std::vector<std::vector<Rat>> invert_rat_matrix(const std::vector<std::vector<Rat>>& m) {
  size_t n = m.size();
  std::vector<std::vector<Rat>> a = m;
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("invert_rat_matrix: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = a[col][col];
    for (size_t j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat f = a[row][col];
      for (size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

CotangentBasis build_basis(int b) {
  require_odd(b, "build_basis");
  CotangentBasis B;
  B.b = b;
  int k = B.k();
  for (int v = 1; v <= b; v += 2) B.members.push_back(v);
  RatPoly one_minus_x2;
  one_minus_x2.c = {Rat(1), Rat(0), Rat(-1)};
  B.c.assign(k, std::vector<Rat>(k, Rat(0)));
  for (int beta : B.members) {
    RatPoly v = cot_poly(beta);
    RatPoly w = one_minus_x2.pow((b - beta) / 2) * v;
    auto coeffs = expand_symmetric(w, b);
    for (int lambda : B.members)
      B.c[CotangentBasis::index_of(lambda)][CotangentBasis::index_of(beta)] = coeffs[lambda];
    B.V[beta] = std::move(v);
    B.W[beta] = std::move(w);
  }
  B.d = invert_rat_matrix(B.c);
  return B;
}

}  // namespace zetaforms
