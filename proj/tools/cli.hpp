#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nps::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one npstool invocation. args excludes the program name; "-" as a
/// file argument reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nps::cli
