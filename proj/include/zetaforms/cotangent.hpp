#ifndef ZETAFORMS_COTANGENT_HPP
#define ZETAFORMS_COTANGENT_HPP

#include <map>
#include <vector>

#include "zetaforms/polynomial.hpp"

namespace zetaforms {

// Basis data for odd b: polynomials V_beta, W_{b,beta}, the rational matrix
// c[lambda][beta] defined by sin^b(z) cot_beta(z) = sum_l c (e^{ilz}+e^{-ilz}),
// and its exact inverse d[beta][lambda]. Rows/columns are indexed by the
// odd values 1, 3, ..., b via (value+1)/2 - 1.
struct CotangentBasis {
  int b = 1;
  std::vector<int> members;           // {1, 3, ..., b}
  std::map<int, RatPoly> V;           // beta -> V_beta
  std::map<int, RatPoly> W;           // beta -> W_{b,beta}
  std::vector<std::vector<Rat>> c;    // c[lambda_idx][beta_idx]
  std::vector<std::vector<Rat>> d;    // d[beta_idx][lambda_idx], c*d = I

  int k() const { return (b + 1) / 2; }
  static int index_of(int odd_value) { return (odd_value - 1) / 2; }
  const Rat& c_at(int lambda, int beta) const { return c[index_of(lambda)][index_of(beta)]; }
  const Rat& d_at(int beta, int lambda) const { return d[index_of(beta)][index_of(lambda)]; }
};

// q_0 = X, q_{m+1} = -(1+X^2) q_m': the m-th cotangent derivative is
// q_m(cot z).
RatPoly cot_derivative_poly(int m);

// V_beta with sin^beta(z) cot_beta(z) = V_beta(cos z); beta odd.
RatPoly cot_poly(int beta);

// Coefficients of W((Y + 1/Y)/2) = sum_{lambda odd} c_lambda (Y^l + Y^-l),
// keys are the odd lambda in {1,...,b}. W must be odd with degree <= b.
std::map<int, Rat> expand_symmetric(const RatPoly& W, int b);

// Direct Laurent-substitution route to the same coefficients (debug oracle).
std::map<int, Rat> expand_symmetric_laurent(const RatPoly& W, int b);

CotangentBasis build_basis(int b);

// Exact inverse by Gaussian elimination; throws InternalError when singular.
std::vector<std::vector<Rat>> invert_rat_matrix(const std::vector<std::vector<Rat>>& m);

}  // namespace zetaforms

#endif
