#pragma once

// End-to-end acceptance checks, shared by `weyl27 verify` and the
// acceptance test binary. Brute-force oracles used here are independent
// of the enumerator and canonical-form code they check.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "weyl27/expectations.hpp"

namespace weyl27 {

struct CheckResult {
  std::string id;  // "AC1".. for the acceptance criteria, "X1".. for extras
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  int workers = 1;
  std::uint64_t seed = 0x5eed27;
  /// Also re-run the serial reference enumerator and compare records.
  bool compare_reference = true;
};

std::vector<CheckResult> run_acceptance(const Expectations& expected, const AcceptanceOptions& options);

/// One "PASS|FAIL id name (time) detail" line per check.
void print_results(std::ostream& os, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace weyl27
