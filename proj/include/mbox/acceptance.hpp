#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mbox {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full verification suite, printing one PASS/FAIL line per
/// criterion to `out`. Returns the per-criterion results; the run passes iff
/// every result does.
std::vector<CriterionResult> run_acceptance(std::ostream& out, std::uint64_t node_budget);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace mbox
