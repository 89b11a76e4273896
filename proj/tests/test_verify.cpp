#include "genh/verify.hpp"

#include <algorithm>
#include <sstream>

#include "doctest.h"

using namespace genh;

TEST_CASE("verification engine passes on a reduced sweep") {
  VerifyOptions opt;
  opt.deltas = {0.0, 1.0};
  opt.gammas = {2.0};
  opt.n_max = 4;
  const auto results = run_verification(opt);
  CHECK(results.size() >= 15);
  for (const auto& r : results) {
    INFO(r.name, " residual ", r.residual, " tol ", r.tolerance, " at ",
         r.worst);
    CHECK(r.pass);
    CHECK(r.residual <= r.tolerance);
    CHECK(!r.name.empty());
  }
  CHECK(all_passed(results));
}

TEST_CASE("report layout carries one row per check and a verdict") {
  VerifyOptions opt;
  opt.deltas = {0.0};
  opt.gammas = {2.0};
  opt.n_max = 2;
  const auto results = run_verification(opt);
  std::ostringstream os;
  print_report(os, results);
  const std::string text = os.str();
  CHECK(text.find("identity") != std::string::npos);
  CHECK(text.find("VERIFY: PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
  // Every named check appears.
  for (const auto& r : results)
    CHECK(text.find(r.name) != std::string::npos);
  // One line per check plus header and verdict.
  const auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == static_cast<long>(results.size()) + 2);
}

TEST_CASE("all_passed flips when any check fails") {
  std::vector<CheckResult> results{{"ok", 1e-12, 1e-9, true, "-"},
                                   {"bad", 1e-3, 1e-9, false, "n=1"}};
  CHECK(!all_passed(results));
  results[1].pass = true;
  CHECK(all_passed(results));
}
