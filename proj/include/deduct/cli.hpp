#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deduct {

/// The deduct command line: parse args (program name excluded), run one
/// subcommand, write results to out and diagnostics to err.
///
/// Exit codes: 0 for answers (including simulations of failing layouts),
/// 1 when the requested result does not exist (terminal or orbit of an
/// unsuccessful layout), 2 for usage and input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deduct
