#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pf::cli {

/// Runs one command line (arguments without the program name). stdout gets
/// data, stderr diagnostics. Returns 0 on success, 1 on domain or lookup
/// errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pf::cli
