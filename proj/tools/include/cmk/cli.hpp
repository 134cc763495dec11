#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmk::cli {

enum ExitCode : int { ok = 0, input_error = 1, refused = 2, internal_error = 3 };

// Runs one invocation. `args` excludes the program name. Quiver input "-"
// is read from `in`; reports go to `out` (or -o), one-line diagnostics to `err`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace cmk::cli
