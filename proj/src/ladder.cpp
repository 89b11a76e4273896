#include "genh/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace genh {

namespace {

// Deliberate-fault switch for exercising the verification engine: setting
// GENHERMITE_INJECT_LADDER_BUG=1 flips the sign of the raising coefficient,
// which every ladder identity must then flag.  Read once per process.
bool ladder_bug_injected() {
  static const bool injected = [] {
    const char* v = std::getenv("GENHERMITE_INJECT_LADDER_BUG");
    return v != nullptr && v[0] != '\0' && !(v[0] == '0' && v[1] == '\0');
  }();
  return injected;
}

void check_delta(const char* fn, double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::domain_error(std::string(fn) + ": delta must be finite and >= 0");
}

double max_abs_on(const Grid& grid, const GenHermiteFunction& f) {
  double m = 0.0;
  for (int i = 0; i < grid.count; ++i)
    m = std::max(m, std::abs(gen_hermite(f, grid.point(i))));
  return m;
}

ResidualReport report_from(const Grid& grid, const std::vector<double>& res,
                           double normalizer) {
  ResidualReport rep{0.0, 0.0, grid.point(0), grid};
  double sum_sq = 0.0;
  for (int i = 0; i < grid.count; ++i) {
    const double v = std::abs(res[static_cast<size_t>(i)]) / normalizer;
    sum_sq += v * v;
    if (v > rep.max_abs) {
      rep.max_abs = v;
      rep.argmax_x = grid.point(i);
    }
  }
  rep.rms = std::sqrt(sum_sq / grid.count);
  return rep;
}

}  // namespace

LadderOperators::LadderOperators(double delta_) : delta(delta_) {
  check_delta("LadderOperators", delta);
}

double raising_coefficient(double delta, double x) {
  check_delta("raising_coefficient", delta);
  const double u = delta * std::exp(-x * x);
  const double coeff = x * (1.0 + 2.0 * u) / (1.0 + u);
  return ladder_bug_injected() ? -coeff : coeff;
}

double lowering_coefficient(double delta, double x) {
  check_delta("lowering_coefficient", delta);
  const double u = delta * std::exp(-x * x);
  return x / (1.0 + u);
}

double apply_c_star(const LadderOperators& l, const JetValue& f, double x) {
  return (-f.d1 + raising_coefficient(l.delta, x) * f.value) /
         std::numbers::sqrt2;
}

double apply_c(const LadderOperators& l, const JetValue& f, double x) {
  return (f.d1 + lowering_coefficient(l.delta, x) * f.value) /
         std::numbers::sqrt2;
}

std::pair<ResidualReport, ResidualReport> ladder_residuals(
    const LadderOperators& l, int n, const Grid& grid) {
  const GenHermiteFunction fn(n, l.delta);
  const GenHermiteFunction up(n + 1, l.delta);

  std::vector<double> raise_res(static_cast<size_t>(grid.count));
  std::vector<double> lower_res(static_cast<size_t>(grid.count));
  const double sqrt_up = std::sqrt(n + 1.0);
  const double sqrt_down = n >= 1 ? std::sqrt(static_cast<double>(n)) : 0.0;
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.point(i);
    const JetValue jet = gen_hermite_jet(fn, x);
    raise_res[static_cast<size_t>(i)] =
        apply_c_star(l, jet, x) - sqrt_up * gen_hermite(up, x);
    const double target =
        n >= 1 ? sqrt_down * gen_hermite(GenHermiteFunction(n - 1, l.delta), x)
               : 0.0;
    lower_res[static_cast<size_t>(i)] = apply_c(l, jet, x) - target;
  }
  const double raise_norm = sqrt_up * max_abs_on(grid, up);
  // n = 0 lowers to the zero function; judge that case in absolute terms.
  const double lower_norm =
      n >= 1 ? sqrt_down * max_abs_on(grid, GenHermiteFunction(n - 1, l.delta))
             : 1.0;
  return {report_from(grid, raise_res, raise_norm),
          report_from(grid, lower_res, lower_norm)};
}

std::pair<ResidualReport, ResidualReport> number_operator_residuals(
    const LadderOperators& l, int n, const Grid& grid) {
  const GenHermiteFunction fn(n, l.delta);
  const double h_norm = max_abs_on(grid, fn);

  // c c* H_n = (n+1) H_n, with the inner image c* H_n replaced by its exact
  // value sqrt(n+1) H_{n+1} so the outer application sees an analytic jet.
  const GenHermiteFunction up(n + 1, l.delta);
  std::vector<double> res_cc(static_cast<size_t>(grid.count));
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.point(i);
    JetValue jet_up = gen_hermite_jet(up, x);
    const double lhs = std::sqrt(n + 1.0) * apply_c(l, jet_up, x);
    res_cc[static_cast<size_t>(i)] = lhs - (n + 1.0) * gen_hermite(fn, x);
  }
  ResidualReport cc = report_from(grid, res_cc, (n + 1.0) * h_norm);

  // c* c H_n = n H_n; for n = 0 both sides vanish identically.
  std::vector<double> res_nc(static_cast<size_t>(grid.count), 0.0);
  double nc_norm = 1.0;
  if (n >= 1) {
    const GenHermiteFunction down(n - 1, l.delta);
    for (int i = 0; i < grid.count; ++i) {
      const double x = grid.point(i);
      JetValue jet_down = gen_hermite_jet(down, x);
      const double lhs =
          std::sqrt(static_cast<double>(n)) * apply_c_star(l, jet_down, x);
      res_nc[static_cast<size_t>(i)] = lhs - n * gen_hermite(fn, x);
    }
    nc_norm = n * h_norm;
  }
  ResidualReport nc = report_from(grid, res_nc, nc_norm);
  return {cc, nc};
}

ResidualReport commutator_residual(const LadderOperators& l, int n,
                                   const Grid& grid) {
  const GenHermiteFunction fn(n, l.delta);
  const GenHermiteFunction up(n + 1, l.delta);
  std::vector<double> res(static_cast<size_t>(grid.count));
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.point(i);
    const JetValue jet_up = gen_hermite_jet(up, x);
    const double cc = std::sqrt(n + 1.0) * apply_c(l, jet_up, x);
    double nc = 0.0;
    if (n >= 1) {
      const JetValue jet_down =
          gen_hermite_jet(GenHermiteFunction(n - 1, l.delta), x);
      nc = std::sqrt(static_cast<double>(n)) * apply_c_star(l, jet_down, x);
    }
    res[static_cast<size_t>(i)] = cc - nc - gen_hermite(fn, x);
  }
  return report_from(grid, res, max_abs_on(grid, fn));
}

}  // namespace genh
