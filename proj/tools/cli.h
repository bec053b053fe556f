#ifndef BGNLAB_TOOLS_CLI_H_
#define BGNLAB_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace bgnlab::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;  // incomplete period, sum mismatch
inline constexpr int kExitAssertion = 4;  // --expect outside --tolerance

inline constexpr const char* kReportSchema = "bgnlab-report/1";
inline constexpr const char* kOutputDirEnv = "BGNLAB_OUTPUT_DIR";

// Runs one invocation. args excludes the program name. Reports go to out,
// diagnostics to err.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Drops the "timing" member of a report so two runs can be compared.
std::string StripTiming(const std::string& report_json);

}  // namespace bgnlab::cli

#endif  // BGNLAB_TOOLS_CLI_H_
