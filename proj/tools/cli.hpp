#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtri::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kStructureViolation = 3,
  kFitMismatch = 4,
};

// Environment variable naming the directory that relative --output paths
// are resolved against.
inline constexpr const char* kOutputDirEnv = "DTRI_OUTPUT_DIR";

/// Runs one CLI invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool hard = true;
  bool passed = false;
  std::string detail;
};

/// The cross-check battery behind `verify`, in deterministic order.
std::vector<CheckResult> verification_battery(unsigned k_max, unsigned d_max, unsigned jobs);

}  // namespace dtri::cli
