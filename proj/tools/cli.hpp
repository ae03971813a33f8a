#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcut::cli {

enum ExitCode { kOk = 0, kAlgorithmError = 1, kUsageError = 2 };

/// Runs the `kcut` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form, always with a fractional part or
/// exponent ("2.0", "3.75").
std::string format_weight(double w);

}  // namespace kcut::cli
