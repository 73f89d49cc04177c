#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace focal::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNumeric = 3 };

/// Runs `focal <command> <curve-file> [flags]`. `args` excludes the program
/// name. Reports go to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace focal::cli
