#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gg/model.hpp"
#include "gg/report.hpp"

namespace gg {

inline constexpr const char* version = "0.1.0";

/// Process exit codes.
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2, exit_theorem_violation = 3 };

struct Report {
  std::string command;
  std::string subject;
  std::vector<Check> checks;
  int exit_code = exit_ok;
  /// Set only for input errors, which carry no checks.
  std::string error;
};

struct CommandArgs {
  std::string subject;
  std::string a;
  std::string b;
  std::uint64_t seed = 0;
};

/// Commands accepted by `run`.
const std::vector<std::string>& command_names();

/// Dispatches one command. Throws gg::Error for a missing subject, a subject
/// of the wrong kind or a malformed -a/-b expression.
Report run(const std::string& command, const Model& model, const CommandArgs& args);

/// Report for an input error (exit code 2).
Report error_report(const std::string& command, const std::string& subject, const std::string& message);

std::string to_json(const Report& report);
std::string to_text(const Report& report);

/// GG_SEED as an unsigned integer, 0 when unset. Throws gg::Error when the
/// value is not a nonnegative integer.
std::uint64_t seed_from_env();

}  // namespace gg
