#pragma once

#include <string>
#include <vector>

namespace nilweyl {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample or a count of cases checked
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Property suites with their bounds pinned in verify.cpp. Suites:
//   coxeter, monoid, involutions, closed-form, oracle-u0, nil-sign,
//   surjectivity, parabolic, affine, all.
// Unknown names raise Error.
SuiteReport run_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace nilweyl
