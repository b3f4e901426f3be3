#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace porous {

/// Powers of ten modulo k, split into the pre-period and the repeating
/// period. The pre-period has length max(v2(k), v5(k)).
struct ResidueTable {
  std::uint32_t k = 1;
  std::vector<std::uint32_t> pre_period;
  std::vector<std::uint32_t> period;

  std::size_t order_length() const noexcept { return period.size(); }

  /// Number of distinct power indices (pre-period plus period).
  std::size_t index_count() const noexcept { return pre_period.size() + period.size(); }

  /// Power index reached after `step` appended digits.
  std::size_t index_at(std::uint64_t step) const noexcept;

  std::size_t next_index(std::size_t index) const noexcept {
    return index + 1 < index_count() ? index + 1 : pre_period.size();
  }

  std::uint32_t residue_at_index(std::size_t index) const noexcept {
    return index < pre_period.size() ? pre_period[index] : period[index - pre_period.size()];
  }

  /// 10^i mod k.
  std::uint32_t power(std::uint64_t i) const noexcept { return residue_at_index(index_at(i)); }
};

/// Requires k >= 1. Multiples of 10 are accepted here (the table is still
/// well defined) even though the decider never asks for them.
ResidueTable build_residue_table(std::uint32_t k);

/// 10^i mod k by square-and-multiply; the independent reference for the table.
std::uint32_t pow10_mod(std::uint64_t i, std::uint32_t k);

}  // namespace porous
