#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torcoh {

// One CLI invocation (arguments without the program name) against the
// given streams. Exit codes: 0 success, 1 verification mismatch, 2 bad
// input (usage, file parse errors, unknown entries), 3 a computation
// contradicted an internal cross-check.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torcoh
