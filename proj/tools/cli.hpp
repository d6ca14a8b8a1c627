#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdmock::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. JSON goes to `out`
/// (or a plain table with --table); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hdmock::cli
