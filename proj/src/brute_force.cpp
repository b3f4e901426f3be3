#include "porous/brute_force.hpp"

#include <string>
#include <vector>

namespace porous {
namespace {

class Enumerator {
 public:
  Enumerator(std::uint32_t k, SearchMode mode, const BruteForceOptions& options)
      : k_(k), mode_(mode), options_(options) {}

  BruteForceResult run() {
    const std::uint32_t shortest = k_ == 0 ? 1 : (k_ + 8) / 9;
    for (std::uint64_t length = shortest;; ++length) {
      if (mode_ == SearchMode::ZeroFree && length > k_) break;
      powers_.assign(length, 0);
      std::uint64_t p = 1 % k_;
      for (auto& power : powers_) {
        power = p;
        p = p * 10 % k_;
      }
      digits_.assign(length, 0);
      if (visit(0, k_, 0, 0) && !options_.exhaustive) break;
    }
    return {std::move(witness_), BigCount(tested_)};
  }

 private:
  // Returns true once a witness has been found (and the walk may stop).
  bool visit(std::size_t position, std::uint32_t remaining, std::uint64_t m_res,
             std::uint64_t rev_res) {
    const std::size_t slots = digits_.size() - position;
    if (slots == 0) return test(m_res, rev_res);
    const std::uint8_t low =
        (position == 0 || mode_ == SearchMode::ZeroFree) ? std::uint8_t{1} : std::uint8_t{0};
    bool found = false;
    for (std::uint8_t d = low; d <= 9 && d <= remaining; ++d) {
      const std::uint32_t rest = remaining - d;
      const std::size_t rest_slots = slots - 1;
      if (rest > 9 * rest_slots) continue;
      if (mode_ == SearchMode::ZeroFree && rest < rest_slots) break;
      digits_[position] = d;
      if (visit(position + 1, rest, (m_res * 10 + d) % k_, (rev_res + d * powers_[position]) % k_)) {
        found = true;
        if (!options_.exhaustive) return true;
      }
    }
    return found;
  }

  bool test(std::uint64_t m_res, std::uint64_t rev_res) {
    if (tested_ >= options_.cap) {
      throw BudgetExceeded("brute force for k=" + std::to_string(k_) + " exceeded " +
                               std::to_string(options_.cap) + " candidates",
                           tested_);
    }
    ++tested_;
    if (m_res != 0 || rev_res != 0) return false;
    if (!witness_) witness_ = DigitString::from_digits(digits_);
    return true;
  }

  std::uint32_t k_;
  SearchMode mode_;
  BruteForceOptions options_;
  std::vector<std::uint64_t> powers_;
  std::vector<std::uint8_t> digits_;
  std::optional<DigitString> witness_;
  std::uint64_t tested_ = 0;
};

}  // namespace

BruteForceResult brute_force_search(std::uint32_t k, SearchMode mode,
                                    const BruteForceOptions& options) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (options.exhaustive && mode == SearchMode::ZerosAllowed) {
    throw std::invalid_argument("exhaustive enumeration needs ZeroFree mode");
  }
  return Enumerator(k, mode, options).run();
}

}  // namespace porous
