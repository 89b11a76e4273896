#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "genh/numerics.hpp"

namespace genh {

enum class OutputFormat { csv, json };

// Shortest round-trip-safe decimal form ("%.17g"): equal doubles always
// produce byte-identical text, so repeated exports of the same data match
// byte for byte.
std::string format_g17(double v);

// Family sweep: one record per (n, delta, grid point) with n = 0..n_max,
// CSV header "x,n,delta,value" (UTF-8, LF line endings).
void write_figure(std::ostream& os, int n_max, const std::vector<double>& deltas,
                  const Grid& grid, OutputFormat format);

// Single-degree table over a delta list; same record layout as the figure.
void write_table(std::ostream& os, int n, const std::vector<double>& deltas,
                 const Grid& grid, OutputFormat format);

// Partner-potential profile: header "x,V_tilde,psi0,psi1,psi2" with the
// (unnormalized) first three partner states alongside the potential.
void write_partner(std::ostream& os, double gamma, const Grid& grid);

}  // namespace genh
