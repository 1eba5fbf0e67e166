#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qseries::cli {

/// Runs the command line (without the program name).
/// Returns 0 when every check passed, 1 when one failed, 2 on usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
