#include "porous/digits.hpp"

#include <algorithm>
#include <numeric>

namespace porous {

DigitString DigitString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty digit string", 0);
  std::vector<std::uint8_t> digits;
  digits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw ParseError("non-digit character '" + std::string(1, c) + "'", i);
    }
    digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (digits.size() > 1 && digits.front() == 0) throw ParseError("leading zero", 0);
  return DigitString(std::move(digits));
}

DigitString DigitString::from_digits(std::vector<std::uint8_t> digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] > 9) throw ParseError("digit value out of range", i);
  }
  const auto first = std::find_if(digits.begin(), digits.end(), [](auto d) { return d != 0; });
  digits.erase(digits.begin(), first);
  if (digits.empty()) digits.push_back(0);
  return DigitString(std::move(digits));
}

DigitString DigitString::from_uint(std::uint64_t value) {
  std::vector<std::uint8_t> digits;
  do {
    digits.push_back(static_cast<std::uint8_t>(value % 10));
    value /= 10;
  } while (value != 0);
  std::reverse(digits.begin(), digits.end());
  return DigitString(std::move(digits));
}

std::string DigitString::str() const {
  std::string out(digits_.size(), '0');
  std::transform(digits_.begin(), digits_.end(), out.begin(),
                 [](std::uint8_t d) { return static_cast<char>('0' + d); });
  return out;
}

DigitString reverse(const DigitString& m) {
  std::vector<std::uint8_t> digits(m.digits().rbegin(), m.digits().rend());
  return DigitString::from_digits(std::move(digits));
}

std::uint64_t digit_sum(const DigitString& m) {
  return std::accumulate(m.digits().begin(), m.digits().end(), std::uint64_t{0});
}

std::uint64_t mod_k(const DigitString& m, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("mod_k: modulus must be positive");
  // acc < k, so acc * 10 + 9 stays in range for any k below 2^60.
  unsigned __int128 acc = 0;
  for (auto d : m.digits()) acc = (acc * 10 + d) % k;
  return static_cast<std::uint64_t>(acc);
}

bool is_zero_free(const DigitString& m) {
  return std::none_of(m.digits().begin(), m.digits().end(), [](auto d) { return d == 0; });
}

WitnessCheck validate_witness(std::uint64_t k, const DigitString& m, bool require_zero_free) {
  WitnessCheck check;
  check.k = k;
  check.zero_free_required = require_zero_free;
  check.divides_m = mod_k(m, k) == 0;
  check.divides_rev = mod_k(reverse(m), k) == 0;
  check.digit_sum_equals_k = digit_sum(m) == k;
  check.zero_free = is_zero_free(m);
  return check;
}

}  // namespace porous
