#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indlab {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitInvariant = 2,  // also a failed bound audit or a failed inequality
  kExitBudget = 3,     // partial results were still written
};

/// The indlab command line: count, blowup, audit, search, verify, exact.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indlab
