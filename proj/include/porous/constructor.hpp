#pragma once

// Witness construction from palindromic blocks.
//
// A zero-free palindrome divisible by k is its own reversal, so any
// concatenation of such blocks is divisible by k in both directions. Picking
// blocks whose digit sums add up to k yields a witness directly.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "porous/digits.hpp"

namespace porous {

struct PalindromeBlock {
  DigitString digits;
  std::uint32_t digit_sum = 0;
};

struct PalindromePlan {
  std::uint32_t k = 0;
  std::vector<std::pair<PalindromeBlock, std::uint32_t>> blocks;  // block, multiplicity

  std::uint64_t total_digit_sum() const;
  /// Blocks concatenated in stored order, each repeated by its multiplicity.
  DigitString render() const;
};

constexpr std::uint32_t kDefaultPalindromeLength = 10;
constexpr std::uint32_t kMaxPalindromeLength = 12;

/// Zero-free palindromes of length 1..max_len divisible by k, ascending.
std::vector<PalindromeBlock> generate_palindromes(std::uint32_t k, std::uint32_t max_len);

/// Multiset of parts drawn from `available_sums` adding up to k, as
/// (part, multiplicity) sorted by descending part. Fewest parts wins; ties go
/// to the lexicographically largest descending sequence.
std::optional<std::map<std::uint32_t, std::uint32_t, std::greater<>>> solve_digit_sum_combo(
    std::uint32_t k, const std::vector<std::uint32_t>& available_sums);

/// Plan using the smallest palindrome for each digit sum, blocks ordered by
/// descending digit sum.
std::optional<PalindromePlan> plan_witness(std::uint32_t k, std::uint32_t max_len);

std::optional<DigitString> construct_witness(std::uint32_t k,
                                             std::uint32_t max_len = kDefaultPalindromeLength);

}  // namespace porous
