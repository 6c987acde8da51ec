#pragma once

#include <functional>
#include <string>
#include <vector>

namespace isograph {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  bool quick = false;     // only the D4 isospectral pair
  unsigned seed = 12345;  // random draws of the reciprocity check
  std::vector<int> only;  // criterion ids; empty runs all
};

// Runs the numbered acceptance criteria in order. `report` sees every
// result as soon as it is available.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {},
                                            const std::function<void(const CriterionResult&)>& report = {});

// "PASS  1  title  (detail, 1.2 s)"
std::string format_result(const CriterionResult& r);

}  // namespace isograph
