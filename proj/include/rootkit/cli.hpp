#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rootkit::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kPrecondition = 3,
};

/// Runs one invocation. `args` excludes the program name.
///
///   describe TYPE [--format text|json]
///   classify TYPE [--format table|json|csv]
///   verify [--max-rank N] [--types T1,T2,...]
///   witness TYPE INDEX
///
/// Every subcommand accepts --out PATH. ROOTKIT_MAX_RANK supplies the default
/// for --max-rank.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootkit::cli
