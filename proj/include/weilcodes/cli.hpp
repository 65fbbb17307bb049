#pragma once

// The `weilcodes` command line, callable in-process so tests can drive it.

#include <iosfwd>
#include <string>
#include <vector>

namespace weilcodes {

/// Exit status: 0 ok, 1 verification mismatch, 2 argument error, 3 budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args not including the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weilcodes
