#include <doctest.h>

#include "porous/certificates.hpp"
#include "porous/scan.hpp"

using porous::RecordStatus;

TEST_CASE("config validation") {
  porous::ScanConfig bad;
  bad.lo = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.lo = 5;
  bad.hi = 4;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  porous::ScanConfig long_palindromes;
  long_palindromes.max_palindrome_len = porous::kMaxPalindromeLength + 1;
  CHECK_THROWS_AS(long_palindromes.validate(), std::invalid_argument);
}

TEST_CASE("single rows") {
  porous::ScanConfig config;
  const auto ten = porous::classify_for_scan(10, config);
  CHECK(ten.status == RecordStatus::Excluded);
  const auto eleven = porous::classify_for_scan(11, config);
  CHECK(eleven.status == RecordStatus::Porous);
  CHECK(eleven.witness.empty());
  const auto twelve = porous::classify_for_scan(12, config);
  CHECK(twelve.status == RecordStatus::NonPorous);
  CHECK(twelve.checked);

  config.use_constructor = false;
  const auto decided = porous::classify_for_scan(13, config);
  CHECK(decided.method == porous::RecordMethod::Decider);
  CHECK(decided.witness == "24115");

  porous::ScanConfig starved;
  starved.use_constructor = false;
  starved.memory_budget = 1024;
  CHECK(porous::classify_for_scan(121, starved).status == RecordStatus::Undecided);
}

TEST_CASE("scan output does not depend on job count") {
  porous::ScanConfig config;
  config.lo = 1;
  config.hi = 80;
  const auto serial = porous::run_scan(config);
  config.jobs = 4;
  const auto parallel = porous::run_scan(config);
  REQUIRE(serial.size() == 80);
  CHECK(serial == parallel);
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].k == i + 1);
  std::vector<std::uint32_t> porous_found;
  for (const auto& r : serial) {
    if (r.status == RecordStatus::Porous) porous_found.push_back(r.k);
    if (r.status == RecordStatus::NonPorous) {
      CHECK(r.checked);
      CHECK(porous::validate_witness(r.k, porous::DigitString::parse(r.witness), true).valid());
    }
  }
  CHECK(porous_found == std::vector<std::uint32_t>{11, 37, 74});
}
