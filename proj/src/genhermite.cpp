#include "genh/genhermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "genh/special_fn.hpp"

namespace genh {

namespace {

void check_delta(const char* fn, double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::domain_error(std::string(fn) + ": delta must be finite and >= 0");
}

// Shared envelope state at one point: u = delta e^{-x^2}, s = 1/(1+u),
// log of the envelope E = e^{-x^2/2} (1+u)^{-1/2}, and the log-derivatives
// E'/E and E''/E.
struct Envelope {
  double u;
  double s;
  double log_e;
  double l1;  // E'/E  = -x s
  double l2;  // E''/E = x^2 s^2 - s - 2 x^2 u s^2
};

Envelope envelope_at(double delta, double x) {
  Envelope env;
  env.u = delta * std::exp(-x * x);
  env.s = 1.0 / (1.0 + env.u);
  env.log_e = -0.5 * x * x - 0.5 * std::log1p(env.u);
  env.l1 = -x * env.s;
  const double s2 = env.s * env.s;
  env.l2 = x * x * s2 - env.s - 2.0 * x * x * env.u * s2;
  return env;
}

// Scaled Hermite values a_k = c_n E(x) H_k(x) for k = n, n-1, n-2 -- the
// three ingredients of the value/derivative jet.
struct ScaledValues {
  double a;    // c_n E H_n
  double am1;  // c_n E H_{n-1}, 0 when n == 0
  double am2;  // c_n E H_{n-2}, 0 when n <= 1
};

// The product c_n e^{-x^2/2} (1+u)^{-1/2} H_k(x) is evaluated directly in
// linear space whenever every factor stays comfortably inside double range:
// n! is exact in a double through n = 22, e^{-x^2/2} stays normal for
// x^2 <= 600, and sqrt(1+u) stays normal for u <= 1e200.  The direct product
// avoids the exp(log(...)) round trip and is accurate to a couple of ulps;
// outside that box the sign-log form takes over.
constexpr int kLinearMaxDegree = 22;
constexpr double kLinearMaxX2 = 600.0;
constexpr double kLinearMaxU = 1e200;

double norm_const_linear(int n) {
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return 1.0 /
         std::sqrt(std::ldexp(factorial, n + 1) * std::sqrt(std::numbers::pi));
}

ScaledValues scaled_values(int n, const Envelope& env, double x) {
  ScaledValues v{0.0, 0.0, 0.0};
  if (n <= kLinearMaxDegree && x * x <= kLinearMaxX2 && env.u <= kLinearMaxU) {
    const double pref = norm_const_linear(n) * std::exp(-0.5 * x * x) /
                        std::sqrt(1.0 + env.u);
    // Raw three-term recurrence; the guards above keep every H_k far from
    // overflow (|H_22| < 2e37 on this range).
    double hm2 = 0.0;
    double hm1 = 0.0;
    double hk = 1.0;
    for (int k = 0; k < n; ++k) {
      const double next = 2.0 * x * hk - 2.0 * k * hm1;
      hm2 = hm1;
      hm1 = hk;
      hk = next;
    }
    v.a = pref * hk;
    if (n >= 1) v.am1 = pref * hm1;
    if (n >= 2) v.am2 = pref * hm2;
    return v;
  }
  const std::vector<SignLog> h = hermite_log_all(n, x);
  const double ln_c = log_norm_const(n);
  auto scaled = [&](int degree) {
    const SignLog& t = h[static_cast<size_t>(degree)];
    if (t.sign == 0.0) return 0.0;
    return t.sign * std::exp(ln_c + env.log_e + t.log_abs);
  };
  v.a = scaled(n);
  if (n >= 1) v.am1 = scaled(n - 1);
  if (n >= 2) v.am2 = scaled(n - 2);
  return v;
}

}  // namespace

GenHermiteFunction::GenHermiteFunction(int n_, double delta_)
    : n(n_), delta(delta_) {
  if (n < 0 || n > kMaxHermiteDegree)
    throw std::domain_error("GenHermiteFunction: degree outside [0, 400]");
  check_delta("GenHermiteFunction", delta);
}

double gen_hermite(const GenHermiteFunction& f, double x) {
  const Envelope env = envelope_at(f.delta, x);
  return scaled_values(f.n, env, x).a;
}

JetValue gen_hermite_jet(const GenHermiteFunction& f, double x) {
  const Envelope env = envelope_at(f.delta, x);
  // a_k = c_n E(x) H_k(x), so that (c_n E H_n)' = a1 + (E'/E) a with
  // H_n' = 2n H_{n-1}, H_n'' = 4n(n-1) H_{n-2}.
  const ScaledValues sv = scaled_values(f.n, env, x);
  const int n = f.n;
  const double a = sv.a;
  const double a1 = n >= 1 ? 2.0 * n * sv.am1 : 0.0;
  const double a2 = n >= 2 ? 4.0 * n * (n - 1.0) * sv.am2 : 0.0;
  JetValue jet;
  jet.value = a;
  jet.d1 = a1 + env.l1 * a;
  jet.d2 = a2 + 2.0 * env.l1 * a1 + env.l2 * a;
  return jet;
}

double weight(double delta, double x) {
  check_delta("weight", delta);
  return 2.0 * (1.0 + delta * std::exp(-x * x));
}

double apply_B(double delta, const JetValue& f, double x) {
  check_delta("apply_B", delta);
  const double u = delta * std::exp(-x * x);
  const double inv_alpha = std::sqrt(1.0 + u);
  const double alpha = 1.0 / inv_alpha;
  return (f.d1 * inv_alpha + x * alpha * f.value) / std::numbers::sqrt2;
}

double apply_B_star(double delta, const JetValue& f, double x) {
  check_delta("apply_B_star", delta);
  const double u = delta * std::exp(-x * x);
  const double alpha = 1.0 / std::sqrt(1.0 + u);
  return alpha * (-f.d1 + x * f.value) / std::numbers::sqrt2;
}

double apply_L_tilde(double delta, const JetValue& f, double x) {
  check_delta("apply_L_tilde", delta);
  const double u = delta * std::exp(-x * x);
  const double s = 1.0 / (1.0 + u);
  return -0.5 * f.d2 + x * u * s * f.d1 +
         0.5 * (x * x * s * s - s + 1.0) * f.value;
}

double apply_L(double delta, const JetValue& f, double x) {
  check_delta("apply_L", delta);
  const double u = delta * std::exp(-x * x);
  const double s = 1.0 / (1.0 + u);
  return (1.0 + u) * f.d2 - 2.0 * x * u * f.d1 - (x * x * s + u) * f.value;
}

double apply_L_tilde_composed(double delta, const JetValue& f, double x) {
  check_delta("apply_L_tilde_composed", delta);
  const double u = delta * std::exp(-x * x);
  const double inv_alpha = std::sqrt(1.0 + u);
  const double alpha = 1.0 / inv_alpha;
  const double s = alpha * alpha;
  const double beta = x * alpha;
  // d/dx of the coefficients: (1/alpha)' = -x u alpha, beta' = alpha + x alpha'
  // with alpha' = x u s alpha.
  const double dinv_alpha = -x * u * alpha;
  const double dbeta = alpha + x * (x * u * s * alpha);
  const double g = (f.d1 * inv_alpha + beta * f.value) / std::numbers::sqrt2;
  const double dg = (f.d2 * inv_alpha + f.d1 * dinv_alpha + dbeta * f.value +
                     beta * f.d1) /
                    std::numbers::sqrt2;
  const JetValue inner{g, dg, 0.0};
  return apply_B_star(delta, inner, x) + 0.5 * f.value;
}

ResidualReport sl_residual(const GenHermiteFunction& f, const Grid& grid) {
  std::vector<double> res(static_cast<size_t>(grid.count));
  double scale = 0.0;
  const double energy = f.n + 0.5;
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.point(i);
    const JetValue jet = gen_hermite_jet(f, x);
    const double w = weight(f.delta, x);
    res[static_cast<size_t>(i)] = apply_L(f.delta, jet, x) + energy * w * jet.value;
    scale = std::max(scale, std::abs(w * jet.value));
  }
  ResidualReport rep{0.0, 0.0, grid.point(0), grid};
  double sum_sq = 0.0;
  for (int i = 0; i < grid.count; ++i) {
    const double v = std::abs(res[static_cast<size_t>(i)]) / scale;
    sum_sq += v * v;
    if (v > rep.max_abs) {
      rep.max_abs = v;
      rep.argmax_x = grid.point(i);
    }
  }
  rep.rms = std::sqrt(sum_sq / grid.count);
  return rep;
}

}  // namespace genh
