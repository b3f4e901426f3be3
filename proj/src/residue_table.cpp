#include "porous/residue_table.hpp"

#include <stdexcept>

namespace porous {

std::size_t ResidueTable::index_at(std::uint64_t step) const noexcept {
  const std::size_t pre = pre_period.size();
  if (step < pre) return static_cast<std::size_t>(step);
  return pre + static_cast<std::size_t>((step - pre) % period.size());
}

ResidueTable build_residue_table(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("build_residue_table: k must be positive");
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> first_seen(k, kUnseen);
  std::vector<std::uint32_t> sequence;
  std::uint32_t r = 1 % k;
  while (first_seen[r] == kUnseen) {
    first_seen[r] = static_cast<std::uint32_t>(sequence.size());
    sequence.push_back(r);
    r = static_cast<std::uint32_t>((std::uint64_t{r} * 10) % k);
  }
  const std::uint32_t start = first_seen[r];
  ResidueTable table;
  table.k = k;
  table.pre_period.assign(sequence.begin(), sequence.begin() + start);
  table.period.assign(sequence.begin() + start, sequence.end());
  return table;
}

std::uint32_t pow10_mod(std::uint64_t i, std::uint32_t k) {
  std::uint64_t result = 1 % k;
  std::uint64_t base = 10 % k;
  while (i != 0) {
    if (i & 1) result = result * base % k;
    base = base * base % k;
    i >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace porous
