#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lesc {

/// Command-line driver. `args` excludes the program name.
/// Returns 0 on success, 1 on validation/solve failure, 2 on usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lesc
