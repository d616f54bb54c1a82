#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pebble {

enum ExitCode : int {
    kExitOk = 0,          // success, solvable, cover found
    kExitNegative = 1,    // unsolvable, no cover, invalid certificate
    kExitUndecided = 2,   // search budget exhausted
    kExitUsage = 64,
    kExitDataError = 65,
};

// Entry point of the `pebble` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pebble
