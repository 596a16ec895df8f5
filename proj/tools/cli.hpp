#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vecdil::cli {

// Dispatches a subcommand; returns the process exit code:
// 0 success, 1 domain error, 2 malformed input, 3 internal-consistency failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace vecdil::cli
