#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bcx/serialize.hpp"
#include "matrix_file.hpp"

namespace bcx::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  ///< parse or usage error
  kExitNotSelfAdjoint = 2,
  kExitNoConvergence = 3,  ///< also: a residual outside its tolerance
  kExitNotCyclic = 4,
};

struct CommandOptions {
  std::optional<double> tol;
  std::optional<std::string> vector;  ///< path or inline JSON
  bool find_cyclic = false;
  std::uint64_t seed = 20240521;
  int trials = 100;
};

struct CommandResult {
  int exit_code = kExitOk;
  json report;
};

inline constexpr const char* kReportVersion = "bcx-report/1";

CommandResult cmd_split(const MatrixFile& input, const CommandOptions& options);
CommandResult cmd_eig(const MatrixFile& input, const CommandOptions& options);
CommandResult cmd_measure(const MatrixFile& input, const CommandOptions& options);
/// `input` may be null: the randomized families then run alone.
CommandResult cmd_verify(const MatrixFile* input, const CommandOptions& options);

/// Report for a failure before a command could run (unreadable input,
/// bad flags).
CommandResult usage_failure(const std::string& command, const std::string& message);

/// Loads --input (if any) and dispatches.  Never throws for bcx::Error.
CommandResult run_command(const std::string& command, const std::optional<std::string>& input_path,
                          const CommandOptions& options);

}  // namespace bcx::cli
