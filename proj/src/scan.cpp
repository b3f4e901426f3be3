#include "porous/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "porous/certificates.hpp"

namespace porous {

void ScanConfig::validate() const {
  if (lo < 1 || lo > hi) throw std::invalid_argument("scan range needs 1 <= lo <= hi");
  if (max_palindrome_len < 1 || max_palindrome_len > kMaxPalindromeLength) {
    throw std::invalid_argument("max palindrome length must be in 1.." +
                                std::to_string(kMaxPalindromeLength));
  }
  if (jobs == 0) throw std::invalid_argument("jobs must be positive");
}

namespace {

bool is_certified(std::uint32_t k) {
  return std::find(kCertifiedPorous.begin(), kCertifiedPorous.end(), k) != kCertifiedPorous.end();
}

WitnessRecord non_porous_row(std::uint32_t k, const DigitString& witness, RecordMethod method) {
  if (is_certified(k)) {
    throw InternalInconsistency("witness " + witness.str() + " found for certified porous k=" +
                                std::to_string(k));
  }
  if (!validate_witness(k, witness, true).valid()) {
    throw InternalInconsistency("witness " + witness.str() + " failed validation for k=" +
                                std::to_string(k));
  }
  return {k, RecordStatus::NonPorous, method, witness.str(), true};
}

}  // namespace

WitnessRecord classify_for_scan(std::uint32_t k, const ScanConfig& config) {
  if (k % 10 == 0) return {k, RecordStatus::Excluded, RecordMethod::None, "", false};
  if (config.use_constructor) {
    if (auto witness = construct_witness(k, config.max_palindrome_len)) {
      return non_porous_row(k, *witness, RecordMethod::Constructor);
    }
  }
  DeciderLimits limits;
  limits.max_bytes = config.memory_budget;
  try {
    const Classification verdict = decide(k, SearchMode::ZeroFree, limits);
    if (const auto* found = verdict.witness()) {
      return non_porous_row(k, found->witness, RecordMethod::Decider);
    }
  } catch (const ResourceLimitError&) {
    return {k, RecordStatus::Undecided, RecordMethod::None, "", false};
  }
  return {k, RecordStatus::Porous, RecordMethod::None, "", false};
}

std::vector<WitnessRecord> run_scan(const ScanConfig& config) {
  config.validate();
  const std::size_t count = std::size_t{config.hi} - config.lo + 1;
  std::vector<WitnessRecord> rows(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        rows[i] = classify_for_scan(static_cast<std::uint32_t>(config.lo + i), config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
        return;
      }
    }
  };

  const unsigned width = std::min<std::size_t>(config.jobs, count);
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < width; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace porous
