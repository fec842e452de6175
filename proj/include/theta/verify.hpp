#pragma once

#include <string>
#include <vector>

#include "theta/records.hpp"

namespace theta {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// Named invariant suites shared by the verify subcommand and the acceptance
// runner. Each check is self-contained and reports one line.
std::vector<CheckResult> verify_mass(TableStore& store);
std::vector<CheckResult> verify_symmetry(TableStore& store);
std::vector<CheckResult> verify_oracle(TableStore& store);
std::vector<CheckResult> verify_unimodal(TableStore& store);
std::vector<CheckResult> verify_coeffs();
std::vector<CheckResult> verify_falsetheta();
std::vector<CheckResult> verify_contraction(TableStore& store);
std::vector<CheckResult> verify_table_rows(int which, const std::vector<unsigned>& rows,
                                           TableStore& store);
std::vector<CheckResult> verify_peaks(TableStore& store);
std::vector<CheckResult> verify_profile(TableStore& store);

// Dispatch by suite name ("mass", "symmetry", "oracle", "unimodal",
// "coeffs", "falsetheta", "contraction", or "all").
std::vector<CheckResult> run_suite(const std::string& name, TableStore& store);

}  // namespace theta
