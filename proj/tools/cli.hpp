#pragma once

#include <iosfwd>
#include <string>

namespace orthocount::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidParams = 2, kMalformedInput = 3 };

/// Runs one command line (argv[0] is the program name) and returns the exit code.
/// One CSV field, quoted per RFC 4180 when it holds a comma, quote or line break.
std::string csv_field(const std::string& s);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orthocount::cli
