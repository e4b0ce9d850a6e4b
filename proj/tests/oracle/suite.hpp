#pragma once

#include <string>
#include <vector>

namespace oracle {

/// Engine results compared against the truncation oracle in every degree up to max_degree.
struct SuiteReport {
  long checks = 0;
  long instances = 0;
  std::vector<std::string> mismatches;
};

SuiteReport run_suite(int max_degree = 6);

}  // namespace oracle
