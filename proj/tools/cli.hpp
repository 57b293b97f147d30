#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semicat::cli {

/// Runs one command line (without the program name). JSON goes to `out`,
/// a human-readable summary to `err`. Returns 0 on success, 1 when a check
/// finds a violation or a sentence is ungrammatical, 2 on usage or
/// configuration errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semicat::cli
