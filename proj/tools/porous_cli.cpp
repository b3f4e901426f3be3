#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "porous/commands.hpp"

namespace {

int finish(const porous::CommandResult& result) {
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Porous number decider, witness builder and proof checker"};
  app.require_subcommand(1);

  std::uint32_t k = 0;
  bool allow_zeros = false;
  std::uint64_t memory_budget = porous::DeciderLimits{}.max_bytes;
  porous::ScanConfig scan;
  std::string out_path;
  std::string verify_path;

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("k", k, "number to examine")->required()->check(CLI::PositiveNumber);
  };

  auto* decide = app.add_subcommand("decide", "decide whether k is porous");
  add_k(decide);
  decide->add_option("--memory-budget", memory_budget, "decider memory budget in bytes");

  auto* witness = app.add_subcommand("witness", "smallest witness for k");
  add_k(witness);
  witness->add_flag("--allow-zeros", allow_zeros, "allow zero digits (zeros-allowed search)");
  witness->add_option("--memory-budget", memory_budget, "decider memory budget in bytes");

  auto* certify = app.add_subcommand("certify", "machine-check the porousness proof for k");
  add_k(certify);

  auto* count = app.add_subcommand("count", "number of zero-free candidates with digit sum k");
  add_k(count);

  auto* scan_cmd = app.add_subcommand("scan", "classify every k in [lo, hi]");
  scan_cmd->add_option("lo", scan.lo)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("hi", scan.hi)->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", out_path, "write the witness CSV here instead of stdout");
  scan_cmd->add_option("--max-palindrome-len", scan.max_palindrome_len, "constructor palindrome length bound")
      ->check(CLI::Range(1u, porous::kMaxPalindromeLength));
  scan_cmd->add_option("--memory-budget", scan.memory_budget, "decider memory budget in bytes");
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "re-check a witness CSV");
  verify->add_option("path", verify_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return porous::kExitUsage;
  }

  porous::DeciderLimits limits;
  limits.max_bytes = memory_budget;
  if (*decide) return finish(porous::cmd_decide(k, limits));
  if (*witness) {
    const auto mode = allow_zeros ? porous::SearchMode::ZerosAllowed : porous::SearchMode::ZeroFree;
    return finish(porous::cmd_witness(k, mode, limits));
  }
  if (*certify) return finish(porous::cmd_certify(k));
  if (*count) return finish(porous::cmd_count(k));
  if (*scan_cmd) {
    std::optional<std::filesystem::path> path;
    if (!out_path.empty()) path = out_path;
    return finish(porous::cmd_scan(scan, path));
  }
  if (*verify) return finish(porous::cmd_verify(verify_path));
  return porous::kExitUsage;
}
