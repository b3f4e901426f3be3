#pragma once

// Exact size of the zero-free brute-force candidate space.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace porous {

using BigCount = boost::multiprecision::cpp_int;

/// Zero-free numbers with digit sum exactly k, i.e. compositions of k into
/// parts 1..9: c(n) = c(n-1) + ... + c(n-9), c(0) = 1.
BigCount count_zero_free(std::uint32_t k);

/// Scientific rendering at 3 significant figures, round-half-even, with
/// trailing zeros of the mantissa dropped: 1021 -> "1.02e3", 2 -> "2e0".
std::string render_scientific(const BigCount& value);

struct CostEstimate {
  BigCount candidates;
  std::string scientific;
};

CostEstimate estimate_brute_force_cost(std::uint32_t k);

}  // namespace porous
