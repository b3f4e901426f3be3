#include "porous/counting.hpp"

#include <stdexcept>
#include <vector>

namespace porous {

BigCount count_zero_free(std::uint32_t k) {
  std::vector<BigCount> c(k + 1);
  c[0] = 1;
  for (std::uint32_t n = 1; n <= k; ++n) {
    for (std::uint32_t d = 1; d <= 9 && d <= n; ++d) c[n] += c[n - d];
  }
  return c[k];
}

std::string render_scientific(const BigCount& value) {
  if (value < 0) throw std::invalid_argument("render_scientific: negative value");
  std::string digits = value.str();
  auto exponent = static_cast<long>(digits.size()) - 1;
  std::string mantissa = digits.substr(0, 3);
  if (digits.size() > 3) {
    const char next = digits[3];
    const bool rest_nonzero = digits.find_first_not_of('0', 4) != std::string::npos;
    const bool odd = (mantissa.back() - '0') % 2 == 1;
    const bool round_up = next > '5' || (next == '5' && (rest_nonzero || odd));
    if (round_up) {
      int i = 2;
      while (i >= 0 && mantissa[i] == '9') mantissa[i--] = '0';
      if (i < 0) {
        mantissa = "100";
        ++exponent;
      } else {
        ++mantissa[i];
      }
    }
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  std::string out(1, mantissa[0]);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  return out + "e" + std::to_string(exponent);
}

CostEstimate estimate_brute_force_cost(std::uint32_t k) {
  CostEstimate estimate{count_zero_free(k), {}};
  estimate.scientific = render_scientific(estimate.candidates);
  return estimate;
}

}  // namespace porous
