// Command-line driver for the mcat tool.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcat {

// Runs one mcat invocation. `args` excludes the program name; reports go to
// `out` (or the --out file), diagnostics and timings to `err`. Returns the
// process exit code: 0 success, 1 computation or check failure, 2 usage
// error. stdout bytes are deterministic for identical arguments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcat
