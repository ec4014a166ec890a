#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace foxknot::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Domain failures print
/// a single `error: <Kind>: <message>` line to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace foxknot::cli
