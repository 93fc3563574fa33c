#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamcurve::cli {

/// Runs one command line (arguments after the program name). Exit codes:
/// 0 success, 1 verification failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamcurve::cli
