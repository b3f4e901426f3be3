#pragma once

// Range classification: constructor first, decider as fallback.

#include <cstdint>
#include <vector>

#include "porous/constructor.hpp"
#include "porous/decider.hpp"
#include "porous/witness_file.hpp"

namespace porous {

struct ScanConfig {
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;
  bool use_constructor = true;
  std::uint32_t max_palindrome_len = kDefaultPalindromeLength;
  std::uint64_t memory_budget = DeciderLimits{}.max_bytes;
  unsigned jobs = 1;

  /// Throws std::invalid_argument unless 1 <= lo <= hi and the palindrome
  /// bound is within range.
  void validate() const;
};

/// One witness-file row for k. Witnesses are re-validated before return;
/// resource limits turn into an undecided row.
WitnessRecord classify_for_scan(std::uint32_t k, const ScanConfig& config);

/// Rows for lo..hi in ascending k, independent of `jobs`.
std::vector<WitnessRecord> run_scan(const ScanConfig& config);

}  // namespace porous
