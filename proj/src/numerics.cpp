#include "genh/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "genh/special_fn.hpp"

namespace genh {

namespace {

// Implicit-shift QL iteration for a symmetric tridiagonal matrix.  d is the
// diagonal, e the subdiagonal (e[i] couples rows i and i+1; an extra
// workspace slot is appended internally).  On return d holds the eigenvalues,
// unsorted.  If z is non-null it must start as the first row of the identity
// and accumulates the first component of every eigenvector, which is all the
// Golub-Welsch weight formula needs.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>* z) {
  const int n = static_cast<int>(d.size());
  if (n <= 1) return;
  e.resize(static_cast<size_t>(n), 0.0);

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
          break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw std::runtime_error("ql_implicit: no convergence in 50 sweeps");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            const double zi = (*z)[i];
            const double zi1 = (*z)[i + 1];
            (*z)[i + 1] = s * zi + c * zi1;
            (*z)[i] = c * zi - s * zi1;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

Grid::Grid(double x_min_, double x_max_, int count_)
    : x_min(x_min_), x_max(x_max_), count(count_) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_min >= x_max)
    throw std::domain_error("Grid: need finite x_min < x_max");
  if (count < 2) throw std::domain_error("Grid: need at least 2 points");
}

double Grid::spacing() const { return (x_max - x_min) / (count - 1); }

double Grid::point(int i) const {
  // Affine blend instead of x_min + i*h: on a symmetric domain the points
  // come out exactly antisymmetric about 0, including an exact 0.0 midpoint.
  const double w = count - 1;
  return ((w - i) * x_min + i * x_max) / w;
}

Grid Grid::default_residual() { return Grid(-6.0, 6.0, 2001); }

QuadratureRule gauss_hermite_rule(int node_count) {
  if (node_count < 1 || node_count > 200)
    throw std::domain_error("gauss_hermite_rule: node count outside [1, 200]");
  const int k = node_count;
  std::vector<double> d(static_cast<size_t>(k), 0.0);
  std::vector<double> e(static_cast<size_t>(k > 0 ? k - 1 : 0));
  for (int i = 0; i + 1 < k; ++i) e[static_cast<size_t>(i)] = std::sqrt(0.5 * (i + 1));
  std::vector<double> z(static_cast<size_t>(k), 0.0);
  z[0] = 1.0;
  ql_implicit(d, e, &z);

  std::vector<int> order(static_cast<size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[static_cast<size_t>(a)] < d[static_cast<size_t>(b)]; });

  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(k));
  rule.weights.resize(static_cast<size_t>(k));
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < k; ++i) {
    const int src = order[static_cast<size_t>(i)];
    rule.nodes[static_cast<size_t>(i)] = d[static_cast<size_t>(src)];
    const double z0 = z[static_cast<size_t>(src)];
    rule.weights[static_cast<size_t>(i)] = sqrt_pi * z0 * z0;
  }

  // The matrix is antisymmetric under node reflection; enforce the symmetry
  // exactly so downstream parity arguments hold to the last bit.
  for (int i = 0, j = k - 1; i < j; ++i, --j) {
    const double a = 0.5 * (rule.nodes[static_cast<size_t>(i)] -
                            rule.nodes[static_cast<size_t>(j)]);
    rule.nodes[static_cast<size_t>(i)] = a;
    rule.nodes[static_cast<size_t>(j)] = -a;
    const double w = 0.5 * (rule.weights[static_cast<size_t>(i)] +
                            rule.weights[static_cast<size_t>(j)]);
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(j)] = w;
  }
  if (k % 2 == 1) rule.nodes[static_cast<size_t>(k / 2)] = 0.0;
  return rule;
}

double integrate_gaussian(const QuadratureRule& rule,
                          const std::function<double(double)>& g) {
  if (rule.nodes.size() != rule.weights.size() || rule.nodes.empty())
    throw std::domain_error("integrate_gaussian: malformed rule");
  double acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double gi = g(rule.nodes[i]);
    if (!std::isfinite(gi))
      throw std::domain_error("integrate_gaussian: non-finite integrand at x = " +
                              std::to_string(rule.nodes[i]));
    acc += rule.weights[i] * gi;
  }
  return acc;
}

std::vector<std::vector<double>> overlap_matrix(double delta, int n_max,
                                                const QuadratureRule& rule) {
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::domain_error("overlap_matrix: delta must be finite and >= 0");
  if (n_max < 0 || n_max > kMaxHermiteDegree)
    throw std::domain_error("overlap_matrix: n_max outside [0, 400]");
  const int k = static_cast<int>(rule.nodes.size());
  if (2 * k - 1 < 2 * n_max)
    throw std::domain_error(
        "overlap_matrix: rule with " + std::to_string(k) +
        " nodes is not exact for degree " + std::to_string(2 * n_max));

  // omega H_n^d H_m^d = 2 c_n c_m e^{-x^2} H_n H_m: the envelope and weight
  // cancel delta exactly, so the integrand seen by the rule is polynomial.
  // Each node contributes sign_n sign_m exp(LN_n + LN_m + l_n + l_m + ln w
  // + ln 2 - ln(1+u) + ln(1+u)) -- the last two fold to zero analytically;
  // keeping ln(w_i) inside the exponent keeps huge H_n from overflowing.
  std::vector<std::vector<SignLog>> logs(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    logs[static_cast<size_t>(i)] = hermite_log_all(n_max, rule.nodes[static_cast<size_t>(i)]);
  std::vector<double> ln_c(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) ln_c[static_cast<size_t>(n)] = log_norm_const(n);

  std::vector<std::vector<double>> m(
      static_cast<size_t>(n_max) + 1,
      std::vector<double>(static_cast<size_t>(n_max) + 1, 0.0));
  for (int n = 0; n <= n_max; ++n) {
    for (int mm = n; mm <= n_max; ++mm) {
      double acc = 0.0;
      for (int i = 0; i < k; ++i) {
        const SignLog& a = logs[static_cast<size_t>(i)][static_cast<size_t>(n)];
        const SignLog& b = logs[static_cast<size_t>(i)][static_cast<size_t>(mm)];
        const double sgn = a.sign * b.sign;
        if (sgn == 0.0) continue;
        acc += sgn * std::exp(std::numbers::ln2 + ln_c[static_cast<size_t>(n)] +
                              ln_c[static_cast<size_t>(mm)] + a.log_abs + b.log_abs +
                              std::log(rule.weights[static_cast<size_t>(i)]));
      }
      m[static_cast<size_t>(n)][static_cast<size_t>(mm)] = acc;
      m[static_cast<size_t>(mm)][static_cast<size_t>(n)] = acc;
    }
  }
  return m;
}

double central_diff(const std::function<double(double)>& f, double x, double h,
                    int order) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::domain_error("central_diff: step must be finite and positive");
  if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
  if (order == 2) return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  throw std::domain_error("central_diff: order must be 1 or 2");
}

std::vector<double> symtridiag_eigen(const std::vector<double>& diag,
                                     const std::vector<double>& offdiag,
                                     int k) {
  if (diag.empty())
    throw std::domain_error("symtridiag_eigen: empty matrix");
  if (offdiag.size() + 1 != diag.size())
    throw std::domain_error("symtridiag_eigen: offdiag size must be diag size - 1");
  if (k < 1 || static_cast<size_t>(k) > diag.size())
    throw std::domain_error("symtridiag_eigen: k outside [1, n]");
  std::vector<double> d = diag;
  std::vector<double> e = offdiag;
  ql_implicit(d, e, nullptr);
  std::sort(d.begin(), d.end());
  d.resize(static_cast<size_t>(k));
  return d;
}

std::vector<double> discretized_spectrum(
    const std::function<double(double)>& potential, double half_width,
    int count, int k) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::domain_error("discretized_spectrum: half_width must be positive");
  if (count < 100)
    throw std::domain_error("discretized_spectrum: need at least 100 points");
  if (k < 1 || k > count)
    throw std::domain_error("discretized_spectrum: k outside [1, count]");
  const double h = 2.0 * half_width / (count + 1);
  std::vector<double> d(static_cast<size_t>(count));
  std::vector<double> e(static_cast<size_t>(count - 1), -0.5 / (h * h));
  for (int i = 0; i < count; ++i) {
    const double x = -half_width + (i + 1) * h;
    const double v = potential(x);
    if (!std::isfinite(v))
      throw std::domain_error("discretized_spectrum: non-finite potential at x = " +
                              std::to_string(x));
    d[static_cast<size_t>(i)] = 1.0 / (h * h) + v;
  }
  return symtridiag_eigen(d, e, k);
}

}  // namespace genh
