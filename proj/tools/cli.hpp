#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace btw::cli {

/// Runs one verb. `args` excludes the program name. Returns 0 on success,
/// 1 for a domain error (a JSON error report is written to `out`), and 2 for
/// usage errors or malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace btw::cli
