#include <doctest.h>

#include "porous/counting.hpp"

using porous::BigCount;

TEST_CASE("counts of zero-free numbers with digit sum k") {
  for (std::uint32_t n = 1; n <= 9; ++n) CHECK(porous::count_zero_free(n) == BigCount(1) << (n - 1));
  CHECK(porous::count_zero_free(11) == 1021);
  CHECK(porous::count_zero_free(20) == 518145);
  CHECK(porous::count_zero_free(25) == 16499120);
  CHECK(porous::count_zero_free(37) == BigCount("66785696000"));
  CHECK(porous::count_zero_free(74) == BigCount("8850205861155834588960"));
  CHECK(porous::count_zero_free(0) == 1);
}

TEST_CASE("recurrence holds well past 64 bits") {
  for (std::uint32_t n = 10; n <= 400; n += 13) {
    BigCount expected = 0;
    for (std::uint32_t d = 1; d <= 9; ++d) expected += porous::count_zero_free(n - d);
    CHECK(porous::count_zero_free(n) == expected);
  }
}

TEST_CASE("scientific rendering") {
  CHECK(porous::render_scientific(1021) == "1.02e3");
  CHECK(porous::render_scientific(2) == "2e0");
  CHECK(porous::render_scientific(1000) == "1e3");
  CHECK(porous::render_scientific(1250) == "1.25e3");
  CHECK(porous::render_scientific(12350) == "1.24e4");  // half to even
  CHECK(porous::render_scientific(12450) == "1.24e4");
  CHECK(porous::render_scientific(12451) == "1.25e4");
  CHECK(porous::render_scientific(9996) == "1e4");
  CHECK(porous::render_scientific(BigCount("8850205861155834588960")) == "8.85e21");
  CHECK(porous::render_scientific(BigCount("66785696000")) == "6.68e10");
  CHECK(porous::render_scientific(0) == "0e0");
}

TEST_CASE("brute force cost estimate") {
  const auto cost = porous::estimate_brute_force_cost(37);
  CHECK(cost.candidates == BigCount("66785696000"));
  CHECK(cost.scientific == "6.68e10");
}
