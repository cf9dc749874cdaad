#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trioscan {

/// Command-line front end behind the trioscan binary.  args excludes the
/// program name.  Output goes to out, diagnostics to err.  Exit codes:
///   0  all checks passed, or a pure computation succeeded
///   1  at least one non-vacuous violation (including theorem violations)
///   2  usage or parse error (malformed literal, bad flag combination)
///   3  capability or budget error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trioscan
