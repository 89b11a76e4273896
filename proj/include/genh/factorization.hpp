#pragma once

#include <functional>
#include <utility>

#include "genh/numerics.hpp"

namespace genh {

// H + 1/2 = B B* admits a family of first-order factorizations
// B = (1/sqrt2)(alpha^{-1} d/dx + beta), B* = (1/sqrt2)(-alpha d/dx + beta)
// whose coefficients obey the coupled system
//   alpha' + beta alpha^2 - beta = 0,
//   beta'  + alpha beta^2 = (1 + x^2) alpha.
// SimpleFactorization is the closed-form branch obtained from the ansatz
// beta = x alpha, which uncouples the system into a Bernoulli equation for
// alpha with solution alpha = (1 + delta e^{-x^2})^{-1/2}, delta >= 0.
struct SimpleFactorization {
  explicit SimpleFactorization(double delta);  // throws for delta < 0 / non-finite
  double delta;
};

// Mielnik's alpha = 1 branch: beta = x + phi where phi solves the Riccati
// equation beta' + beta^2 = 1 + x^2, i.e.
//   phi(x) = e^{-x^2} / (gamma + int_0^x e^{-t^2} dt),
// regular on R exactly when gamma stays clear of the integral's range.
// The constructor enforces gamma > sqrt(pi/2).
struct MielnikFactorization {
  explicit MielnikFactorization(double gamma);
  double gamma;
};

// Summary of a pointwise residual sweep over a grid.
struct ResidualReport {
  double max_abs;
  double rms;
  double argmax_x;  // grid point where |r| peaks
  Grid grid;
};

// Sweep r over the grid; entries are divided by `normalizer` before being
// folded into the report.
ResidualReport sweep_residual(const Grid& grid,
                              const std::function<double(double)>& r,
                              double normalizer = 1.0);

// --- simple branch -------------------------------------------------------

double alpha(const SimpleFactorization& f, double x);
double alpha_deriv(const SimpleFactorization& f, double x);   // analytic
double beta_simple(const SimpleFactorization& f, double x);   // x * alpha
double beta_simple_deriv(const SimpleFactorization& f, double x);

// Residuals of the two coupled equations with analytic derivatives inserted:
// first alpha' + beta alpha^2 - beta, second beta' + alpha beta^2 - (1+x^2)alpha.
std::pair<ResidualReport, ResidualReport> coupled_residuals(
    const SimpleFactorization& f, const Grid& grid);

// Residual of the uncoupled Bernoulli form alpha' + x alpha^3 - x alpha.
ResidualReport bernoulli_residual(const SimpleFactorization& f,
                                  const Grid& grid);

// --- Mielnik branch ------------------------------------------------------

double mielnik_phi(const MielnikFactorization& f, double x);
double mielnik_phi_deriv(const MielnikFactorization& f, double x);  // -2x phi - phi^2
double mielnik_beta(const MielnikFactorization& f, double x);       // x + phi
double mielnik_beta_deriv(const MielnikFactorization& f, double x);

// Isospectral partner potential V~ = x^2/2 - phi' = x^2/2 + 2x phi + phi^2.
double partner_potential(const MielnikFactorization& f, double x);

// Normalizable ground state of the partner Hamiltonian (energy 1/2):
// psi~_0 = e^{-x^2/2} / (gamma + int_0^x e^{-t^2} dt), up to normalization.
double partner_groundstate(const MielnikFactorization& f, double x);
double partner_groundstate_deriv(const MielnikFactorization& f, double x);

// Excited partner states psi~_{n+1} = b* psi_n = (1/sqrt2)(-psi_n' + beta psi_n)
// built from oscillator eigenfunctions; n >= 1 here maps to b* psi_{n-1}.
double partner_excited(const MielnikFactorization& f, int n, double x);

// Residual of beta' + beta^2 - (1 + x^2) for a caller-supplied beta.
ResidualReport riccati_residual(const std::function<double(double)>& beta,
                                const std::function<double(double)>& beta_deriv,
                                const Grid& grid);

}  // namespace genh
