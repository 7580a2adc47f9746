#pragma once

// The twelve acceptance criteria, shared by `unicx verify-all` and the
// acceptance test.

#include <string>
#include <vector>

namespace unicx {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  ///< 0 when the criterion has no runtime target
};

std::vector<CriterionResult> run_acceptance();

}  // namespace unicx
