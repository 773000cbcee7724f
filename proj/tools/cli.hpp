#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbox {

/// Runs one CLI invocation. Exit status 0 on success, 2 when the solver gave
/// up within its node budget, 1 on any error. Output and diagnostics go to
/// the supplied streams so tests can capture them.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mbox
