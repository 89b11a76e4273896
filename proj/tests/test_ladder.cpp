#include "genh/ladder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "genh/genhermite.hpp"
#include "genh/special_fn.hpp"

using namespace genh;

TEST_CASE("coefficients collapse to the oscillator pair at delta = 0") {
  for (double x : {-3.0, -0.4, 0.0, 1.0, 2.6}) {
    CHECK(raising_coefficient(0.0, x) == x);
    CHECK(lowering_coefficient(0.0, x) == x);
  }
  CHECK_THROWS_AS(LadderOperators(-2.0), std::domain_error);
  CHECK_THROWS_AS(raising_coefficient(-1.0, 0.0), std::domain_error);
}

TEST_CASE("coefficient limits for large delta") {
  // u -> infinity pointwise: raising -> 2x, lowering -> 0, with error
  // bounded by e^{x^2} x / delta.
  const double delta = 1e8;
  for (double x : {0.5, 1.0, -1.5}) {
    CHECK(std::abs(raising_coefficient(delta, x) - 2.0 * x) <= 1e-6);
    CHECK(std::abs(lowering_coefficient(delta, x)) <= 1e-6);
  }
}

TEST_CASE("delta = 1 is not distinguished: coefficients differ from a, a*") {
  // The family deforms continuously; no finite delta reproduces the
  // oscillator pair exactly away from delta = 0.
  CHECK(std::abs(raising_coefficient(1.0, 1.0) - 1.0) > 0.1);
  CHECK(std::abs(lowering_coefficient(1.0, 1.0) - 1.0) > 0.1);
}

TEST_CASE("conjugation identity c* f = alpha a* (f / alpha)") {
  for (double delta : {1.0, 100.0}) {
    const LadderOperators l(delta);
    const SimpleFactorization fac(delta);
    const GenHermiteFunction f4(4, delta);
    for (double x : {-3.0, -1.1, 0.0, 0.7, 2.2}) {
      const JetValue f = gen_hermite_jet(f4, x);
      // g = f / alpha, g' = (f' - f alpha'/alpha) / alpha.
      const double a = alpha(fac, x);
      const double da = alpha_deriv(fac, x);
      const double g = f.value / a;
      const double dg = (f.d1 - f.value * da / a) / a;
      const double astar_g = (-dg + x * g) / std::numbers::sqrt2;
      const double expect = a * astar_g;
      CHECK(std::abs(apply_c_star(l, f, x) - expect) <=
            1e-9 * (1.0 + std::abs(expect)));
    }
  }
}

TEST_CASE("raising: c* H_n = sqrt(n+1) H_{n+1}") {
  const Grid grid = Grid::default_residual();
  for (double delta : {0.0, 1.0, 100.0}) {
    const LadderOperators l(delta);
    for (int n = 0; n <= 10; ++n) {
      const auto [raise, lower] = ladder_residuals(l, n, grid);
      CHECK(raise.max_abs <= 1e-9);
      if (n == 0) {
        CHECK(lower.max_abs <= 1e-10);  // annihilation, absolute
      } else {
        CHECK(lower.max_abs <= 1e-9);
      }
    }
  }
}

TEST_CASE("extreme delta keeps the ladder exact") {
  const Grid grid = Grid::default_residual();
  const LadderOperators l(1e6);
  const auto [raise, lower] = ladder_residuals(l, 10, grid);
  CHECK(raise.max_abs <= 1e-8);
  CHECK(lower.max_abs <= 1e-8);
}

TEST_CASE("number operators count correctly through composed jets") {
  const Grid grid = Grid::default_residual();
  for (double delta : {0.0, 1.0, 100.0, 1e6}) {
    const LadderOperators l(delta);
    for (int n : {0, 1, 3, 7}) {
      const auto [cc, nc] = number_operator_residuals(l, n, grid);
      CHECK(cc.max_abs <= 1e-9);
      if (n == 0) {
        CHECK(nc.max_abs == 0.0);  // c annihilates, c* c H_0 = 0 identically
      } else {
        CHECK(nc.max_abs <= 1e-9);
      }
    }
  }
}

TEST_CASE("commutator [c, c*] = 1 on the whole family") {
  const Grid grid = Grid::default_residual();
  for (double delta : {0.0, 1.0, 100.0, 1e6}) {
    const LadderOperators l(delta);
    for (int n = 0; n <= 10; ++n) {
      CHECK(commutator_residual(l, n, grid).max_abs <= 1e-9);
    }
  }
}

TEST_CASE("pointwise raising identity at spot values") {
  // c* H_2^1 at x = 0.8 against sqrt(3) H_3^1 directly.
  const double delta = 1.0;
  const LadderOperators l(delta);
  const GenHermiteFunction f2(2, delta);
  const GenHermiteFunction f3(3, delta);
  const double x = 0.8;
  const double got = apply_c_star(l, gen_hermite_jet(f2, x), x);
  const double expect = std::sqrt(3.0) * gen_hermite(f3, x);
  CHECK(got == doctest::Approx(expect).epsilon(1e-12));
}
