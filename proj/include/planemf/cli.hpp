#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planemf::cli {

/// Command-line front end. Returns the process exit code: 0 success,
/// 1 solver/file/verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planemf::cli
