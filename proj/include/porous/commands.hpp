#pragma once

// Subcommand bodies behind the `porous` CLI. Each returns the exit code and
// the exact text for stdout/stderr so they can be tested in-process.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "porous/decider.hpp"
#include "porous/scan.hpp"

namespace porous {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitResourceLimit = 2,
  kExitVerificationFailed = 3,
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

CommandResult cmd_decide(std::uint32_t k, const DeciderLimits& limits = {});
CommandResult cmd_witness(std::uint32_t k, SearchMode mode, const DeciderLimits& limits = {});
CommandResult cmd_certify(std::uint32_t k);
CommandResult cmd_count(std::uint32_t k);
/// Without `out_path` the CSV goes to stdout; with it, stdout gets a JSON summary.
CommandResult cmd_scan(const ScanConfig& config,
                       const std::optional<std::filesystem::path>& out_path);
CommandResult cmd_verify(const std::filesystem::path& path);

}  // namespace porous
