#pragma once

// The `pregd` command line. Exit codes: 0 pass or success, 1 negative
// finding, 2 input error, 3 refusal, 4 inconclusive.

#include <ostream>
#include <string>
#include <vector>

namespace pregd::cli {

enum ExitCode : int
{
	exit_ok = 0,
	exit_negative = 1,
	exit_input = 2,
	exit_refused = 3,
	exit_inconclusive = 4,
};

/// Runs one command; args excludes the program name.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace pregd::cli
