#include "genh/export.hpp"

#include <cstdio>
#include <ostream>

#include "genh/factorization.hpp"
#include "genh/genhermite.hpp"

namespace genh {

namespace {

// One JSON series {"delta": d, "values": [...]} for a fixed degree.
void json_series(std::ostream& os, const GenHermiteFunction& f,
                 const Grid& grid) {
  os << "{\"delta\": " << format_g17(f.delta) << ", \"values\": [";
  for (int i = 0; i < grid.count; ++i) {
    if (i) os << ", ";
    os << format_g17(gen_hermite(f, grid.point(i)));
  }
  os << "]}";
}

void json_grid(std::ostream& os, const Grid& grid) {
  os << "\"x\": [";
  for (int i = 0; i < grid.count; ++i) {
    if (i) os << ", ";
    os << format_g17(grid.point(i));
  }
  os << "]";
}

void csv_rows(std::ostream& os, int n, const std::vector<double>& deltas,
              const Grid& grid) {
  for (double delta : deltas) {
    const GenHermiteFunction f(n, delta);
    for (int i = 0; i < grid.count; ++i) {
      const double x = grid.point(i);
      os << format_g17(x) << ',' << n << ',' << format_g17(delta) << ','
         << format_g17(gen_hermite(f, x)) << '\n';
    }
  }
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_figure(std::ostream& os, int n_max, const std::vector<double>& deltas,
                  const Grid& grid, OutputFormat format) {
  if (format == OutputFormat::csv) {
    os << "x,n,delta,value\n";
    for (int n = 0; n <= n_max; ++n) csv_rows(os, n, deltas, grid);
    return;
  }
  os << "{\n";
  json_grid(os, grid);
  os << ",\n\"series\": [";
  bool first = true;
  for (int n = 0; n <= n_max; ++n) {
    for (double delta : deltas) {
      if (!first) os << ",";
      first = false;
      os << "\n{\"n\": " << n << ", ";
      const GenHermiteFunction f(n, delta);
      os << "\"delta\": " << format_g17(delta) << ", \"values\": [";
      for (int i = 0; i < grid.count; ++i) {
        if (i) os << ", ";
        os << format_g17(gen_hermite(f, grid.point(i)));
      }
      os << "]}";
    }
  }
  os << "\n]\n}\n";
}

void write_table(std::ostream& os, int n, const std::vector<double>& deltas,
                 const Grid& grid, OutputFormat format) {
  if (format == OutputFormat::csv) {
    os << "x,n,delta,value\n";
    csv_rows(os, n, deltas, grid);
    return;
  }
  os << "{\n\"n\": " << n << ",\n";
  json_grid(os, grid);
  os << ",\n\"series\": [";
  for (size_t k = 0; k < deltas.size(); ++k) {
    if (k) os << ",";
    os << "\n";
    json_series(os, GenHermiteFunction(n, deltas[k]), grid);
  }
  os << "\n]\n}\n";
}

void write_partner(std::ostream& os, double gamma, const Grid& grid) {
  const MielnikFactorization f(gamma);
  os << "x,V_tilde,psi0,psi1,psi2\n";
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.point(i);
    os << format_g17(x) << ',' << format_g17(partner_potential(f, x)) << ','
       << format_g17(partner_groundstate(f, x)) << ','
       << format_g17(partner_excited(f, 1, x)) << ','
       << format_g17(partner_excited(f, 2, x)) << '\n';
  }
}

}  // namespace genh
