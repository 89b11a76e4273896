#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "genh/export.hpp"
#include "genh/genhermite.hpp"
#include "genh/special_fn.hpp"
#include "genh/verify.hpp"

namespace {

struct GridArgs {
  double x_min = -5.0;
  double x_max = 5.0;
  int points = 501;
};

void add_grid_options(CLI::App* cmd, GridArgs* g) {
  cmd->add_option("--xmin", g->x_min, "left end of the sample grid");
  cmd->add_option("--xmax", g->x_max, "right end of the sample grid");
  cmd->add_option("--points", g->points, "number of grid points");
}

genh::OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return genh::OutputFormat::csv;
  if (s == "json") return genh::OutputFormat::json;
  throw std::domain_error("format must be csv or json");
}

// Writes through `emit` either to stdout (empty path) or to the named file,
// translating any stream failure into exit code 3.
int write_output(const std::string& path,
                 const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    std::cout.flush();
    return std::cout ? 0 : 3;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 3;
  }
  emit(out);
  out.flush();
  if (!out) {
    std::cerr << "error: failed while writing '" << path << "'\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Hermite functions, factorizations and partner potentials"};
  app.require_subcommand(1);

  // eval
  int eval_n = 0;
  double eval_delta = 0.0;
  double eval_x = 0.0;
  auto* eval = app.add_subcommand("eval", "print H_n^delta(x) to 15 significant digits");
  eval->add_option("--n", eval_n, "degree")->required();
  eval->add_option("--delta", eval_delta, "family parameter (>= 0)")->required();
  eval->add_option("--x", eval_x, "evaluation point")->required();

  // table
  int table_n = 0;
  std::vector<double> table_deltas;
  GridArgs table_grid;
  std::string table_format = "csv";
  std::string table_out;
  auto* table = app.add_subcommand("table", "tabulate one degree over a delta list");
  table->add_option("--n", table_n, "degree");
  table->add_option("--delta", table_deltas, "family parameter, repeatable");
  add_grid_options(table, &table_grid);
  table->add_option("--format", table_format, "csv or json");
  table->add_option("--out", table_out, "output path (stdout when omitted)");

  // figure
  int figure_n = 3;
  std::vector<double> figure_deltas;
  GridArgs figure_grid;
  std::string figure_format = "csv";
  std::string figure_out = "figure.csv";
  auto* figure = app.add_subcommand(
      "figure", "export the family sweep n = 0..N for a delta list");
  figure->add_option("--n", figure_n, "largest degree (default 3)");
  figure->add_option("--delta", figure_deltas, "family parameter, repeatable "
                     "(default 0 1 10 100)");
  add_grid_options(figure, &figure_grid);
  figure->add_option("--format", figure_format, "csv or json");
  figure->add_option("--out", figure_out, "output path (default figure.csv)");

  // verify
  genh::VerifyOptions vopt;
  std::vector<double> verify_deltas;
  std::vector<double> verify_gammas;
  auto* verify = app.add_subcommand("verify", "certify every operator identity");
  verify->add_option("--n", vopt.n_max, "largest degree swept (default 10)");
  verify->add_option("--delta", verify_deltas,
                     "family parameter, repeatable (default 0 1 100 1e6)");
  verify->add_option("--gamma", verify_gammas,
                     "partner-family parameter, repeatable (default 2)");

  // partner
  double partner_gamma = 0.0;
  GridArgs partner_grid{-6.0, 6.0, 1201};
  std::string partner_out = "partner.csv";
  auto* partner = app.add_subcommand(
      "partner", "export the isospectral partner potential and its lowest states");
  partner->add_option("--gamma", partner_gamma, "partner-family parameter "
                      "(> sqrt(pi/2))")->required();
  add_grid_options(partner, &partner_grid);
  partner->add_option("--out", partner_out, "output path (default partner.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) {
      const genh::GenHermiteFunction f(eval_n, eval_delta);
      if (!std::isfinite(eval_x)) throw std::domain_error("eval: x must be finite");
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.15g", genh::gen_hermite(f, eval_x));
      std::cout << buf << "\n";
      return 0;
    }

    if (table->parsed()) {
      if (table_deltas.empty()) table_deltas = {0.0};
      const genh::OutputFormat fmt = parse_format(table_format);
      const genh::Grid grid(table_grid.x_min, table_grid.x_max, table_grid.points);
      for (double d : table_deltas)
        static_cast<void>(genh::GenHermiteFunction(table_n, d));
      return write_output(table_out, [&](std::ostream& os) {
        genh::write_table(os, table_n, table_deltas, grid, fmt);
      });
    }

    if (figure->parsed()) {
      if (figure_deltas.empty()) figure_deltas = {0.0, 1.0, 10.0, 100.0};
      const genh::OutputFormat fmt = parse_format(figure_format);
      const genh::Grid grid(figure_grid.x_min, figure_grid.x_max, figure_grid.points);
      for (double d : figure_deltas)
        static_cast<void>(genh::GenHermiteFunction(figure_n, d));
      return write_output(figure_out, [&](std::ostream& os) {
        genh::write_figure(os, figure_n, figure_deltas, grid, fmt);
      });
    }

    if (verify->parsed()) {
      if (!verify_deltas.empty()) vopt.deltas = verify_deltas;
      if (!verify_gammas.empty()) vopt.gammas = verify_gammas;
      if (vopt.n_max < 0 || vopt.n_max > genh::kMaxHermiteDegree - 1)
        throw std::domain_error("verify: --n outside [0, 399]");
      for (double d : vopt.deltas) static_cast<void>(genh::SimpleFactorization(d));
      for (double g : vopt.gammas) static_cast<void>(genh::MielnikFactorization(g));
      const auto results = genh::run_verification(vopt);
      genh::print_report(std::cout, results);
      if (!genh::all_passed(results)) {
        std::cerr << "error: verification failed\n";
        return 1;
      }
      return 0;
    }

    if (partner->parsed()) {
      const genh::MielnikFactorization mf(partner_gamma);
      const genh::Grid grid(partner_grid.x_min, partner_grid.x_max,
                            partner_grid.points);
      // Spectrum summary on stdout; profile data to the CSV.
      auto pot = [&](double x) { return genh::partner_potential(mf, x); };
      const auto levels = genh::discretized_spectrum(pot, 12.0, 2400, 4);
      std::printf("partner spectrum (gamma = %g):\n", partner_gamma);
      for (size_t i = 0; i < levels.size(); ++i)
        std::printf("  E_%zu = %.6f (oscillator: %.1f)\n", i, levels[i], i + 0.5);
      return write_output(partner_out, [&](std::ostream& os) {
        genh::write_partner(os, partner_gamma, grid);
      });
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
