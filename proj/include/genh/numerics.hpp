#pragma once

#include <functional>
#include <vector>

namespace genh {

// Uniform sample grid for residual sweeps and data export.  Points are
// produced by the symmetric affine blend
//   x_i = ((count-1-i) x_min + i x_max) / (count-1)
// so that a grid with x_min = -x_max is mirror-symmetric to the last bit,
// which lets parity checks compare values exactly.
struct Grid {
  Grid(double x_min, double x_max, int count);

  double x_min;
  double x_max;
  int count;

  double spacing() const;
  double point(int i) const;

  // 2001 points on [-6, 6]; the default sweep domain for residual checks.
  static Grid default_residual();
};

// Nodes and weights of a Gauss-Hermite rule for weight e^{-x^2} on R.
// Nodes are strictly increasing and exactly antisymmetric (node[i] ==
// -node[K-1-i], with an exact 0.0 in the middle when K is odd); weights are
// positive, symmetric, and sum to sqrt(pi).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Golub-Welsch construction: eigenvalues of the Jacobi matrix (diagonal 0,
// off-diagonal sqrt(k/2)) give the nodes, squared first eigenvector
// components scaled by sqrt(pi) give the weights.  node_count in [1, 200].
QuadratureRule gauss_hermite_rule(int node_count);

// sum_i w_i g(x_i), approximating int g(x) e^{-x^2} dx; exact when g is a
// polynomial of degree <= 2K-1.  Throws std::domain_error if g returns a
// non-finite value at a node.
double integrate_gaussian(const QuadratureRule& rule,
                          const std::function<double(double)>& g);

// Overlap matrix M[n][m] = int omega_delta H_n^delta H_m^delta dx for
// n, m <= n_max.  The weighted product collapses to
// 2 c_n c_m e^{-x^2} H_n H_m independently of delta, so a Gauss-Hermite rule
// with 2K-1 >= 2 n_max evaluates every entry exactly; the rule is rejected
// otherwise.  Accumulation runs in log space to stay finite at large n_max.
std::vector<std::vector<double>> overlap_matrix(double delta, int n_max,
                                                const QuadratureRule& rule);

// Central finite difference of order 1 or 2:
//   (f(x+h) - f(x-h)) / 2h      or      (f(x+h) - 2f(x) + f(x-h)) / h^2.
double central_diff(const std::function<double(double)>& f, double x, double h,
                    int order);

// Eigenvalues of a symmetric tridiagonal matrix (implicit-shift QL),
// sorted ascending, truncated to the k smallest.  offdiag must have exactly
// diag.size() - 1 entries and 1 <= k <= diag.size().
std::vector<double> symtridiag_eigen(const std::vector<double>& diag,
                                     const std::vector<double>& offdiag,
                                     int k);

// k lowest eigenvalues of -(1/2) d^2/dx^2 + V on [-half_width, half_width]
// with Dirichlet walls, discretized by second-order central differences on
// `count` interior points: diagonal 1/h^2 + V(x_i), off-diagonal -1/(2h^2).
std::vector<double> discretized_spectrum(
    const std::function<double(double)>& potential, double half_width,
    int count, int k);

}  // namespace genh
