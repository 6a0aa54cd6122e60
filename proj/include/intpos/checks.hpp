#ifndef INTPOS_CHECKS_HPP
#define INTPOS_CHECKS_HPP

#include <string>
#include <vector>

namespace intpos {

/// One verified claim of the acceptance suite. Claims are grouped by the
/// criterion they certify; `detail` carries the counterexample or report
/// text (expected-failure claims pass exactly when the known counterexample
/// is reproduced).
struct ClaimResult {
  int criterion = 0;
  std::string claim;
  bool pass = false;
  std::string detail;
};

// The full acceptance suite (criteria 1-9). Exhaustive sweeps run at the
// sizes the criteria pin; nothing is sampled down.
std::vector<ClaimResult> run_acceptance();

struct CriterionSummary {
  int criterion = 0;
  bool pass = false;
  int claims = 0;
  int failed = 0;
};

std::vector<CriterionSummary> summarize(const std::vector<ClaimResult>& claims);

}  // namespace intpos

#endif
