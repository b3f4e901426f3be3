#pragma once

// Literal enumeration of digit-sum-k candidates in increasing numeric order.
// Exponential; used as the reference the decider is checked against.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "porous/counting.hpp"
#include "porous/decider.hpp"
#include "porous/digits.hpp"

namespace porous {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t tested)
      : std::runtime_error(what), tested_(tested) {}
  std::uint64_t candidates_tested() const noexcept { return tested_; }

 private:
  std::uint64_t tested_;
};

struct BruteForceResult {
  std::optional<DigitString> witness;
  BigCount candidates_tested;
};

struct BruteForceOptions {
  std::uint64_t cap = 100'000'000;
  /// Keep enumerating after the first witness so candidates_tested covers
  /// the whole space (ZeroFree only; the zeros-allowed space is infinite).
  bool exhaustive = false;
};

BruteForceResult brute_force_search(std::uint32_t k, SearchMode mode,
                                    const BruteForceOptions& options = {});

}  // namespace porous
