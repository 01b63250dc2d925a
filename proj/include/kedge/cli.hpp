#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kedge::cli {

enum ExitCode : int {
	ok = 0,
	input_error = 1,
	guard_exceeded = 2,
	invariant_violation = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace kedge::cli
