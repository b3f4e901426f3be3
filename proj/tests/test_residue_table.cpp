#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "porous/residue_table.hpp"

namespace {
std::size_t valuation(std::uint32_t k, std::uint32_t p) {
  std::size_t v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}
}  // namespace

TEST_CASE("published residue tables") {
  const auto t37 = porous::build_residue_table(37);
  CHECK(t37.pre_period.empty());
  CHECK(t37.period == std::vector<std::uint32_t>{1, 10, 26});

  const auto t74 = porous::build_residue_table(74);
  CHECK(t74.pre_period == std::vector<std::uint32_t>{1});
  CHECK(t74.period == std::vector<std::uint32_t>{10, 26, 38});

  CHECK(porous::build_residue_table(121).order_length() == 22);
  CHECK(porous::build_residue_table(101).period == std::vector<std::uint32_t>{1, 10, 100, 91});
}

TEST_CASE("expansion matches modular exponentiation for k in 1..1000") {
  for (std::uint32_t k = 1; k <= 1000; ++k) {
    if (k % 10 == 0) continue;
    const auto table = porous::build_residue_table(k);
    CAPTURE(k);
    CHECK(table.pre_period.size() == std::max(valuation(k, 2), valuation(k, 5)));
    CHECK(table.index_count() <= k);
    const std::size_t span = 2 * table.index_count();
    for (std::size_t i = 0; i <= span; ++i) {
      REQUIRE(table.power(i) == porous::pow10_mod(i, k));
    }
  }
}

TEST_CASE("power index walks the pre-period then cycles") {
  const auto t = porous::build_residue_table(74);
  CHECK(t.index_at(0) == 0);
  CHECK(t.index_at(1) == 1);
  CHECK(t.index_at(4) == 1);
  CHECK(t.next_index(3) == 1);
  CHECK(t.next_index(0) == 1);
  CHECK_THROWS_AS(porous::build_residue_table(0), std::invalid_argument);
}
