#pragma once

// Decimal digit strings and the three witness requirements.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace porous {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A decimal number stored as its digits, most significant first.
/// Always non-empty and without leading zeros, so it can hold witnesses
/// far beyond 64-bit range.
class DigitString {
 public:
  /// Parses plain decimal ASCII. Rejects empty input, non-digits and
  /// leading zeros (a lone "0" is accepted).
  static DigitString parse(std::string_view text);

  /// Builds from raw digit values. Leading zeros are stripped; an empty or
  /// all-zero input yields "0". Throws ParseError on a value above 9.
  static DigitString from_digits(std::vector<std::uint8_t> digits);

  static DigitString from_uint(std::uint64_t value);

  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  explicit DigitString(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}

  std::vector<std::uint8_t> digits_;
};

/// Numeric reversal: reversed digit order with the resulting leading zeros
/// dropped, so reverse(1200) == 21.
DigitString reverse(const DigitString& m);

std::uint64_t digit_sum(const DigitString& m);

/// m mod k by Horner evaluation over the digits.
std::uint64_t mod_k(const DigitString& m, std::uint64_t k);

bool is_zero_free(const DigitString& m);

struct WitnessCheck {
  std::uint64_t k = 0;
  bool divides_m = false;
  bool divides_rev = false;
  bool digit_sum_equals_k = false;
  bool zero_free = false;
  bool zero_free_required = true;

  bool valid() const noexcept {
    return divides_m && divides_rev && digit_sum_equals_k &&
           (zero_free || !zero_free_required);
  }
};

WitnessCheck validate_witness(std::uint64_t k, const DigitString& m, bool require_zero_free);

}  // namespace porous
