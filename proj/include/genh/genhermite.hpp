#pragma once

#include "genh/factorization.hpp"

namespace genh {

// Generalized Hermite function
//   H_n^delta(x) = c_n (e^{x^2} + delta)^{-1/2} H_n(x),
//   c_n = (2^{n+1} n! sqrt(pi))^{-1/2},
// evaluated in the overflow-safe form
//   c_n e^{-x^2/2} (1 + delta e^{-x^2})^{-1/2} H_n(x).
// For every delta >= 0 this equals alpha(x) psi_n(x) / sqrt(2), so the family
// interpolates between scaled oscillator eigenfunctions (delta = 0) and bare
// Hermite polynomials (envelope ~ delta^{-1/2} H_n as delta -> infinity).
struct GenHermiteFunction {
  GenHermiteFunction(int n, double delta);  // validates n in [0,400], delta >= 0
  int n;
  double delta;
};

// Value together with first and second derivative at one point.
struct JetValue {
  double value;
  double d1;
  double d2;
};

double gen_hermite(const GenHermiteFunction& f, double x);

// Analytic jet.  Derivatives use the envelope log-derivatives
//   E'/E  = -x s,
//   E''/E = x^2 s^2 - s - 2 x^2 u s^2,        u = delta e^{-x^2}, s = 1/(1+u),
// combined with H_n' = 2n H_{n-1} and H_n'' = 4n(n-1) H_{n-2}; everything is
// assembled in sign/log form so high degrees stay finite.
JetValue gen_hermite_jet(const GenHermiteFunction& f, double x);

// Sturm-Liouville weight omega(x) = 2 (1 + delta e^{-x^2}) = 2 / alpha^2.
double weight(double delta, double x);

// First-order factors of H + 1/2 built from the simple branch:
//   B  f = (1/sqrt2)( f'/alpha + beta f ),
//   B* f = (1/sqrt2)( -alpha f' + beta f ),   beta = x alpha.
double apply_B(double delta, const JetValue& f, double x);
double apply_B_star(double delta, const JetValue& f, double x);

// Schroedinger-form operator L~ = B*B + 1/2:
//   L~ f = -f''/2 + x u s f' + (1/2)(x^2 s^2 - s + 1) f.
double apply_L_tilde(double delta, const JetValue& f, double x);

// Sturm-Liouville form L = -2 alpha^{-2} (L~ - handled via its own
// coefficients):  L f = (1+u) f'' - 2xu f' - (x^2 s + u) f, so that
// L H_n^delta + (n + 1/2) omega H_n^delta = 0.
double apply_L(double delta, const JetValue& f, double x);

// L~ f computed as B*(B f) + f/2 with the inner image differentiated
// analytically -- an independent route used to cross-check apply_L_tilde.
double apply_L_tilde_composed(double delta, const JetValue& f, double x);

// Sweep of L H_n^delta + (n + 1/2) omega H_n^delta over the grid, normalized
// by max_grid |omega H_n^delta|.
ResidualReport sl_residual(const GenHermiteFunction& f, const Grid& grid);

}  // namespace genh
