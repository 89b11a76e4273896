#pragma once

#include <utility>

#include "genh/genhermite.hpp"

namespace genh {

// Ladder pair adapted to the generalized Hermite family:
//   c* f = (1/sqrt2)( -f' + x (1 + 2u)/(1 + u) f ),
//   c  f = (1/sqrt2)(  f' + x / (1 + u) f ),          u = delta e^{-x^2},
// satisfying c* H_n^delta = sqrt(n+1) H_{n+1}^delta and
// c H_n^delta = sqrt(n) H_{n-1}^delta for every delta >= 0 (delta = 0
// recovers the oscillator pair a, a*).  Despite the x-dependent coefficients,
// [c, c*] = 1 on the whole family.
struct LadderOperators {
  explicit LadderOperators(double delta);  // validates delta >= 0, finite
  double delta;
};

double raising_coefficient(double delta, double x);   // x (1 + 2u) / (1 + u)
double lowering_coefficient(double delta, double x);  // x / (1 + u)

double apply_c_star(const LadderOperators& l, const JetValue& f, double x);
double apply_c(const LadderOperators& l, const JetValue& f, double x);

// Relative sweep of {c* H_n - sqrt(n+1) H_{n+1}, c H_n - sqrt(n) H_{n-1}},
// each normalized by the max magnitude of its target; the n = 0 lowering
// residual (target identically zero) is reported in absolute terms.
std::pair<ResidualReport, ResidualReport> ladder_residuals(
    const LadderOperators& l, int n, const Grid& grid);

// Number-operator identities c c* H_n = (n+1) H_n and c* c H_n = n H_n,
// composed through the exact ladder images (the inner application is
// replaced by the analytic jet of its known result, so the residual isolates
// the outer operator).  Ordered {c c*, c* c}.
std::pair<ResidualReport, ResidualReport> number_operator_residuals(
    const LadderOperators& l, int n, const Grid& grid);

// [c, c*] H_n - H_n along the same composed route, normalized by
// max |H_n^delta|.
ResidualReport commutator_residual(const LadderOperators& l, int n,
                                   const Grid& grid);

}  // namespace genh
