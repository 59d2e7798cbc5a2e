#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnses::cli {

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// one-line diagnostics to `err`.
///
/// Exit status: 0 success; 1 parse or validation failure; 2 domain error
/// (bad value literal, bad usage); 3 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bnses::cli
