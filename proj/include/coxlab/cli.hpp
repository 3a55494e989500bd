#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxlab::cli {

/// Runs one command line (without the program name). Returns 0 when every
/// requested check passed, 1 when an identity failed, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Types exercised by `suite all` when --types is not given.
const std::vector<std::string>& default_suite_types();

}  // namespace coxlab::cli
