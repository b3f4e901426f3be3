#include "porous/constructor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace porous {

std::uint64_t PalindromePlan::total_digit_sum() const {
  std::uint64_t total = 0;
  for (const auto& [block, count] : blocks) total += std::uint64_t{block.digit_sum} * count;
  return total;
}

DigitString PalindromePlan::render() const {
  std::vector<std::uint8_t> digits;
  for (const auto& [block, count] : blocks) {
    for (std::uint32_t i = 0; i < count; ++i) {
      digits.insert(digits.end(), block.digits.digits().begin(), block.digits.digits().end());
    }
  }
  return DigitString::from_digits(std::move(digits));
}

std::vector<PalindromeBlock> generate_palindromes(std::uint32_t k, std::uint32_t max_len) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (max_len > kMaxPalindromeLength) {
    throw std::invalid_argument("palindrome length above " + std::to_string(kMaxPalindromeLength));
  }
  std::vector<PalindromeBlock> out;
  std::vector<std::uint64_t> powers;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    powers.assign(len, 0);
    std::uint64_t p = 1 % k;
    for (std::uint32_t i = len; i-- > 0;) {  // powers[i] = 10^(len-1-i) mod k
      powers[i] = p;
      p = p * 10 % k;
    }
    const std::uint32_t half = (len + 1) / 2;
    std::vector<std::uint64_t> weight(half);
    for (std::uint32_t i = 0; i < half; ++i) {
      const std::uint32_t mirror = len - 1 - i;
      weight[i] = mirror == i ? powers[i] : (powers[i] + powers[mirror]) % k;
    }
    // odometer over the half prefix, digits 1..9, ascending
    std::vector<std::uint8_t> prefix(half, 1);
    for (;;) {
      std::uint64_t residue = 0;
      for (std::uint32_t i = 0; i < half; ++i) residue += prefix[i] * weight[i];
      if (residue % k == 0) {
        std::vector<std::uint8_t> digits(len);
        std::uint32_t sum = 0;
        for (std::uint32_t i = 0; i < len; ++i) {
          digits[i] = prefix[std::min(i, len - 1 - i)];
          sum += digits[i];
        }
        out.push_back({DigitString::from_digits(std::move(digits)), sum});
      }
      std::int64_t pos = half - 1;
      while (pos >= 0 && prefix[pos] == 9) prefix[pos--] = 1;
      if (pos < 0) break;
      ++prefix[pos];
    }
  }
  return out;
}

std::optional<std::map<std::uint32_t, std::uint32_t, std::greater<>>> solve_digit_sum_combo(
    std::uint32_t k, const std::vector<std::uint32_t>& available_sums) {
  constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parts(available_sums);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  std::erase_if(parts, [k](std::uint32_t s) { return s == 0 || s > k; });

  std::vector<std::uint32_t> fewest(k + 1, kUnreachable);
  fewest[0] = 0;
  for (std::uint32_t n = 1; n <= k; ++n) {
    for (std::uint32_t s : parts) {
      if (s <= n && fewest[n - s] != kUnreachable) fewest[n] = std::min(fewest[n], fewest[n - s] + 1);
    }
  }
  if (fewest[k] == kUnreachable) return std::nullopt;

  // Greedy largest-part-first along optimal transitions gives the
  // lexicographically largest descending multiset.
  std::map<std::uint32_t, std::uint32_t, std::greater<>> combo;
  std::uint32_t n = k;
  while (n > 0) {
    for (std::uint32_t s : parts) {
      if (s <= n && fewest[n - s] != kUnreachable && fewest[n - s] + 1 == fewest[n]) {
        ++combo[s];
        n -= s;
        break;
      }
    }
  }
  return combo;
}

std::optional<PalindromePlan> plan_witness(std::uint32_t k, std::uint32_t max_len) {
  if (k % 10 == 0) throw std::invalid_argument("k must not be a multiple of 10");
  std::map<std::uint32_t, PalindromeBlock> smallest_by_sum;
  for (auto& block : generate_palindromes(k, max_len)) {
    if (block.digit_sum <= k) smallest_by_sum.try_emplace(block.digit_sum, std::move(block));
  }
  std::vector<std::uint32_t> sums;
  for (const auto& entry : smallest_by_sum) sums.push_back(entry.first);
  const auto combo = solve_digit_sum_combo(k, sums);
  if (!combo) return std::nullopt;
  PalindromePlan plan{k, {}};
  for (const auto& [sum, count] : *combo) plan.blocks.emplace_back(smallest_by_sum.at(sum), count);
  return plan;
}

std::optional<DigitString> construct_witness(std::uint32_t k, std::uint32_t max_len) {
  const auto plan = plan_witness(k, max_len);
  if (!plan) return std::nullopt;
  DigitString witness = plan->render();
  if (!validate_witness(k, witness, true).valid()) {
    throw std::logic_error("constructed witness failed validation for k=" + std::to_string(k));
  }
  return witness;
}

}  // namespace porous
