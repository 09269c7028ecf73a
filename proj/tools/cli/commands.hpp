#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtk {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,        // success, EQUAL, DISTINCT, distinguished
  kDomain = 1,    // axiom violation, indistinguishable, equal free-quandle elements
  kInput = 2,     // unreadable file, malformed text or spec
  kUnknown = 3,   // word-problem budget exhausted without a verdict
};

/// Runs `qtk <args...>` (args excludes the program name). Reports go to
/// `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtk
