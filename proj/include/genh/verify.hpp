#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genh {

// Parameter sets swept by the verification engine.
struct VerifyOptions {
  std::vector<double> deltas{0.0, 1.0, 100.0, 1e6};
  std::vector<double> gammas{2.0};
  int n_max = 10;
};

// One certified identity: name, worst normalized residual seen, the
// tolerance it was held to, and where the worst point sat.
struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
  std::string worst;  // offending (n, delta/gamma, x)
};

// Run every identity check over the requested parameter sets.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

// Fixed-width report, one line per check, PASS/FAIL column last.
void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace genh
