#include "genh/special_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace genh {

namespace {

// Rescaling threshold for the sign/log recurrence: far below double overflow,
// far above anything a single recurrence step can multiply past it.
constexpr double kRescale = 1e280;
const double kLogRescale = std::log(kRescale);

void check_degree(const char* fn, int n) {
  if (n < 0 || n > kMaxHermiteDegree) {
    throw std::domain_error(std::string(fn) + ": degree " + std::to_string(n) +
                            " outside [0, " +
                            std::to_string(kMaxHermiteDegree) + "]");
  }
}

void check_finite(const char* fn, double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(fn) + ": x must be finite");
  }
}

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Taylor series erf(x) = (2/sqrt(pi)) sum_k (-1)^k x^{2k+1} / (k! (2k+1)),
// summed until the next term is below round-off; used for |x| <= 2 where
// cancellation costs well under a digit.
double erf_series(double x) {
  const double x2 = x * x;
  double term = x;  // (-1)^k x^{2k+1} / k!
  double sum = x;
  for (int k = 1; k < 300; ++k) {
    term *= -x2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
  }
  return sum * 2.0 / std::sqrt(std::numbers::pi);
}

// Continued fraction sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + ...)))
// with partial numerators j/2, evaluated by the modified Lentz algorithm.
// Valid for x > 0; rapidly convergent for the x > 2 branch that uses it.
double erfc_tail(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int j = 1; j < 300; ++j) {
    const double a = 0.5 * j;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return std::exp(-x * x) / (std::sqrt(std::numbers::pi) * f);
}

}  // namespace

double hermite_poly(int n, double x) {
  check_degree("hermite_poly", n);
  check_finite("hermite_poly", x);
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    if (!std::isfinite(next)) {
      throw std::overflow_error("hermite_poly: overflow at degree " +
                                std::to_string(k + 1));
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_poly_deriv(int n, double x) {
  check_degree("hermite_poly_deriv", n);
  check_finite("hermite_poly_deriv", x);
  if (n == 0) return 0.0;
  const double d = 2.0 * n * hermite_poly(n - 1, x);
  if (!std::isfinite(d)) {
    throw std::overflow_error("hermite_poly_deriv: overflow at degree " +
                              std::to_string(n));
  }
  return d;
}

double hermite_equation_residual(int n, double x) {
  check_degree("hermite_equation_residual", n);
  check_finite("hermite_equation_residual", x);
  if (n == 0) return 0.0;
  const double hn = hermite_poly(n, x);
  const double hn1 = hermite_poly(n - 1, x);
  const double hn2 = n >= 2 ? hermite_poly(n - 2, x) : 0.0;
  // H'' - 2x H' + 2n H with H' = 2n H_{n-1}, H'' = 4n(n-1) H_{n-2}.
  const double r = 4.0 * n * (n - 1) * hn2 - 4.0 * n * x * hn1 + 2.0 * n * hn;
  if (!std::isfinite(r)) {
    throw std::overflow_error("hermite_equation_residual: overflow at degree " +
                              std::to_string(n));
  }
  return r;
}

std::vector<SignLog> hermite_log_all(int n_max, double x) {
  check_degree("hermite_log_all", n_max);
  check_finite("hermite_log_all", x);
  std::vector<SignLog> out(static_cast<size_t>(n_max) + 1);
  out[0] = {1.0, 0.0};
  if (n_max == 0) return out;

  double log_scale = 0.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  auto record = [&](int k, double v) {
    out[static_cast<size_t>(k)] = {
        sign_of(v), v == 0.0 ? -std::numeric_limits<double>::infinity()
                             : std::log(std::abs(v)) + log_scale};
  };
  record(1, cur);
  for (int k = 1; k < n_max; ++k) {
    double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale || std::abs(prev) > kRescale) {
      prev /= kRescale;
      cur /= kRescale;
      log_scale += kLogRescale;
    }
    record(k + 1, cur);
  }
  return out;
}

SignLog hermite_log(int n, double x) { return hermite_log_all(n, x).back(); }

double log_norm_const(int n) {
  check_degree("log_norm_const", n);
  return -0.5 * ((n + 1) * std::numbers::ln2 + std::lgamma(n + 1.0) +
                 0.5 * std::log(std::numbers::pi));
}

double qho_eigenfunction(int n, double x) {
  check_degree("qho_eigenfunction", n);
  check_finite("qho_eigenfunction", x);
  const SignLog h = hermite_log(n, x);
  if (h.sign == 0.0) return 0.0;
  // (2^n n! sqrt(pi))^{-1/2} = sqrt(2) c_n.
  const double log_c = log_norm_const(n) + 0.5 * std::numbers::ln2;
  return h.sign * std::exp(log_c + h.log_abs - 0.5 * x * x);
}

double qho_eigenfunction_deriv(int n, double x) {
  check_degree("qho_eigenfunction_deriv", n);
  check_finite("qho_eigenfunction_deriv", x);
  const double lower =
      n >= 1 ? std::sqrt(2.0 * n) * qho_eigenfunction(n - 1, x) : 0.0;
  return lower - x * qho_eigenfunction(n, x);
}

double erf(double x) {
  if (std::isnan(x)) throw std::domain_error("erf: x must not be NaN");
  const double ax = std::abs(x);
  const double s = x < 0.0 ? -1.0 : 1.0;
  if (ax > 26.0) return s;  // erfc(26) ~ 1e-295: 1 is exact to the last bit
  const double v = ax <= 2.0 ? erf_series(ax) : 1.0 - erfc_tail(ax);
  return s * v;
}

double gaussian_integral(double x) {
  check_finite("gaussian_integral", x);
  return std::sqrt(0.5 * std::numbers::pi) * genh::erf(x / std::numbers::sqrt2);
}

}  // namespace genh
