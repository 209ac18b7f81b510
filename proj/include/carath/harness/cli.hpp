#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carath::harness {

/// Command-line driver. args excludes the program name.
///
/// Exit codes: 0 pass, 2 verification failure, 1 usage or geometry error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carath::harness
