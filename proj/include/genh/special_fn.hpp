#pragma once

#include <vector>

namespace genh {

// Largest Hermite degree the evaluators accept.  The scaled recurrence in
// hermite_log is good well past this, but derivative and residual helpers
// multiply raw polynomial values, and 400 keeps every code path finite.
inline constexpr int kMaxHermiteDegree = 400;

// A real number stored as sign and log-magnitude so that quantities far
// outside double range (high-degree Hermite values, Gaussian tails) can be
// combined safely and exponentiated only after all cancellation-free factors
// have been folded in.
struct SignLog {
  double sign;     // -1.0, 0.0 or +1.0
  double log_abs;  // ln|value|; -infinity when the value is exactly zero
};

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
// H_{k+1} = 2x H_k - 2k H_{k-1}.  Throws std::domain_error for n outside
// [0, kMaxHermiteDegree] or non-finite x, std::overflow_error (naming the
// offending degree) if an intermediate value leaves double range.
double hermite_poly(int n, double x);

// H_n'(x) = 2n H_{n-1}(x), with the same guards as hermite_poly.
double hermite_poly_deriv(int n, double x);

// Residual of the Hermite ODE, H_n'' - 2x H_n' + 2n H_n, assembled from
// recurrence values as 4n(n-1)H_{n-2} - 4nx H_{n-1} + 2n H_n.  Identically
// zero in exact arithmetic; what is returned is pure rounding noise.
double hermite_equation_residual(int n, double x);

// Sign/log form of H_n(x), immune to overflow (rescales internally).
SignLog hermite_log(int n, double x);

// Sign/log form of H_0..H_{n_max} at x in one recurrence pass.
std::vector<SignLog> hermite_log_all(int n_max, double x);

// ln c_n for the normalizer c_n = (2^{n+1} n! sqrt(pi))^{-1/2}.
double log_norm_const(int n);

// Harmonic-oscillator eigenfunction
//   psi_n(x) = (2^n n! sqrt(pi))^{-1/2} e^{-x^2/2} H_n(x)
// evaluated in log form so large n and large |x| do not overflow.
double qho_eigenfunction(int n, double x);

// psi_n'(x) = sqrt(2n) psi_{n-1}(x) - x psi_n(x).
double qho_eigenfunction_deriv(int n, double x);

// Error function: Taylor series for |x| <= 3, Lentz continued fraction for
// the tail, odd reflection for x < 0, saturation to +-1 once erfc underflows.
double erf(double x);

// int_0^x e^{-t^2/2} dt = sqrt(pi/2) erf(x / sqrt(2)).
double gaussian_integral(double x);

}  // namespace genh
