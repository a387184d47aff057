#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace wsdirac::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpected = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitCheckFailed = 4,
};

/// 17 significant digits, "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double value);

/// Parses flat key=value text. '#' starts a comment; '-' in keys becomes '_'.
/// Throws std::invalid_argument on a malformed line.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Runs one command line (args excludes the program name). Data goes to
/// `out` unless --out is given; diagnostics and the stdout-mode manifest go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsdirac::cli
