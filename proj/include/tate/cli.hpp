#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tate {

// Front door used by both the binary and the tests.  Returns the process
// exit code: 0 success, 1 invalid input, 2 precision exhausted after
// retries.  Reports go to `out` as JSON (or a small table), diagnostics to
// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tate
