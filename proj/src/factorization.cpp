#include "genh/factorization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "genh/special_fn.hpp"

namespace genh {

namespace {

// Regularity bound for the Mielnik branch.  The strict requirement is that
// gamma + int_0^x e^{-t^2} dt never vanishes, and we keep the conservative
// bound sqrt(pi/2) so every accepted gamma sits safely inside the regular
// region with margin to spare.
const double kGammaBound = std::sqrt(0.5 * std::numbers::pi);

double exp_mx2(double x) { return std::exp(-x * x); }

// Denominator gamma + int_0^x e^{-t^2} dt = gamma + (sqrt(pi)/2) erf(x).
double mielnik_denom(double gamma, double x) {
  return gamma + 0.5 * std::sqrt(std::numbers::pi) * genh::erf(x);
}

}  // namespace

SimpleFactorization::SimpleFactorization(double delta_) : delta(delta_) {
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::domain_error("SimpleFactorization: delta must be finite and >= 0");
}

MielnikFactorization::MielnikFactorization(double gamma_) : gamma(gamma_) {
  if (!std::isfinite(gamma) || !(gamma > kGammaBound))
    throw std::domain_error(
        "MielnikFactorization: gamma must exceed sqrt(pi/2) ~= 1.2533141373155003");
}

ResidualReport sweep_residual(const Grid& grid,
                              const std::function<double(double)>& r,
                              double normalizer) {
  if (!(normalizer > 0.0) || !std::isfinite(normalizer))
    throw std::domain_error("sweep_residual: normalizer must be positive");
  ResidualReport rep{0.0, 0.0, grid.point(0), grid};
  double sum_sq = 0.0;
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.point(i);
    const double v = std::abs(r(x)) / normalizer;
    sum_sq += v * v;
    if (v > rep.max_abs) {
      rep.max_abs = v;
      rep.argmax_x = x;
    }
  }
  rep.rms = std::sqrt(sum_sq / grid.count);
  return rep;
}

double alpha(const SimpleFactorization& f, double x) {
  return 1.0 / std::sqrt(1.0 + f.delta * exp_mx2(x));
}

double alpha_deriv(const SimpleFactorization& f, double x) {
  const double a = alpha(f, x);
  return f.delta * x * exp_mx2(x) * a * a * a;
}

double beta_simple(const SimpleFactorization& f, double x) {
  return x * alpha(f, x);
}

double beta_simple_deriv(const SimpleFactorization& f, double x) {
  return alpha(f, x) + x * alpha_deriv(f, x);
}

std::pair<ResidualReport, ResidualReport> coupled_residuals(
    const SimpleFactorization& f, const Grid& grid) {
  auto r1 = [&f](double x) {
    const double a = alpha(f, x);
    const double b = beta_simple(f, x);
    return alpha_deriv(f, x) + b * a * a - b;
  };
  auto r2 = [&f](double x) {
    const double a = alpha(f, x);
    const double b = beta_simple(f, x);
    return beta_simple_deriv(f, x) + a * b * b - (1.0 + x * x) * a;
  };
  return {sweep_residual(grid, r1), sweep_residual(grid, r2)};
}

ResidualReport bernoulli_residual(const SimpleFactorization& f,
                                  const Grid& grid) {
  auto r = [&f](double x) {
    const double a = alpha(f, x);
    return alpha_deriv(f, x) + x * a * a * a - x * a;
  };
  return sweep_residual(grid, r);
}

double mielnik_phi(const MielnikFactorization& f, double x) {
  return exp_mx2(x) / mielnik_denom(f.gamma, x);
}

double mielnik_phi_deriv(const MielnikFactorization& f, double x) {
  const double p = mielnik_phi(f, x);
  return -2.0 * x * p - p * p;
}

double mielnik_beta(const MielnikFactorization& f, double x) {
  return x + mielnik_phi(f, x);
}

double mielnik_beta_deriv(const MielnikFactorization& f, double x) {
  return 1.0 + mielnik_phi_deriv(f, x);
}

double partner_potential(const MielnikFactorization& f, double x) {
  const double p = mielnik_phi(f, x);
  return 0.5 * x * x + 2.0 * x * p + p * p;
}

double partner_groundstate(const MielnikFactorization& f, double x) {
  return std::exp(-0.5 * x * x) / mielnik_denom(f.gamma, x);
}

double partner_groundstate_deriv(const MielnikFactorization& f, double x) {
  // Quotient rule; the denominator's derivative is e^{-x^2}.
  const double den = mielnik_denom(f.gamma, x);
  const double g = std::exp(-0.5 * x * x);
  return -g * (x * den + exp_mx2(x)) / (den * den);
}

double partner_excited(const MielnikFactorization& f, int n, double x) {
  if (n < 1)
    throw std::domain_error("partner_excited: n must be >= 1 (n = 0 is the ground state)");
  const int m = n - 1;  // psi~_n = b* psi_{n-1}
  const double psi = qho_eigenfunction(m, x);
  const double dpsi = qho_eigenfunction_deriv(m, x);
  return (-dpsi + mielnik_beta(f, x) * psi) / std::numbers::sqrt2;
}

ResidualReport riccati_residual(const std::function<double(double)>& beta,
                                const std::function<double(double)>& beta_deriv,
                                const Grid& grid) {
  auto r = [&](double x) {
    const double b = beta(x);
    return beta_deriv(x) + b * b - (1.0 + x * x);
  };
  return sweep_residual(grid, r);
}

}  // namespace genh
