#include <doctest.h>

#include <cstdlib>
#include <set>

#include "porous/certificates.hpp"
#include "porous/residue_table.hpp"

namespace {

std::size_t total_solutions(const porous::CertificateReport& r) {
  std::size_t n = 0;
  for (const auto& s : r.solution_sets) n += s.solutions.size();
  return n;
}

// Signed class sums (A = P0 - P2, B = P1 - P3) only bound the digit sum by |A| + |B|.
void check_sound(const porous::CertificateReport& r, bool signed_sums = false) {
  CHECK(r.tables_verified);
  CHECK(r.forced_zero_conclusion);
  for (const auto& t : r.tables) {
    CAPTURE(t.name);
    CHECK(t.matched);
    CHECK(t.published == t.recomputed);
  }
  for (const auto& set : r.solution_sets) {
    for (const auto& sums : set.solutions) {
      bool empty_class = false;
      std::int64_t total = 0;
      for (auto v : sums.values) {
        empty_class |= v == 0;
        total += signed_sums ? std::abs(v) : v;
      }
      CHECK(empty_class);
      CHECK(total == r.k);
    }
  }
}

}  // namespace

TEST_CASE("k = 11") {
  const auto r = porous::certify_11();
  check_sound(r);
  REQUIRE(r.solution_sets.size() == 1);
  CHECK(r.solution_sets[0].tuples_scanned == 12);
  std::set<std::vector<std::int64_t>> got;
  for (const auto& s : r.solution_sets[0].solutions) got.insert(s.values);
  CHECK(got == std::set<std::vector<std::int64_t>>{{0, 11}, {11, 0}});
  CHECK(r.min_length == 2);
}

TEST_CASE("k = 37") {
  const auto r = porous::certify_37();
  check_sound(r);
  REQUIRE(r.solution_sets.size() == 3);
  for (const auto& set : r.solution_sets) {
    CHECK(set.tuples_scanned == 741);  // compositions of 37 into 3 non-negative parts
    CHECK(set.solutions.size() == 3);
  }
  CHECK(total_solutions(r) == 9);
  CHECK(r.min_length == 5);
  REQUIRE(r.min_zero_count.has_value());
  CHECK(*r.min_zero_count == 8);
}

TEST_CASE("k = 74") {
  const auto r = porous::certify_74();
  check_sound(r);
  for (const auto& set : r.solution_sets) CHECK(set.solutions.size() == 6);
  CHECK(total_solutions(r) == 18);
  CHECK(r.min_length == 9);
}

TEST_CASE("k = 101") {
  const auto r = porous::certify_101();
  check_sound(r, true);
  REQUIRE(r.solution_sets.size() == 4);
  for (const auto& set : r.solution_sets) {
    for (const auto& sums : set.solutions) CHECK(std::abs(sums.values[0]) + std::abs(sums.values[1]) == 101);
  }
  CHECK(r.min_length == 12);
}

TEST_CASE("k = 121 beta sequence") {
  const auto& published = porous::published_beta_121();
  const auto recomputed = porous::recompute_beta_121(published.size());
  CHECK(std::vector<std::int64_t>(published.begin(), published.end()) == recomputed);
  // independent check of the relation 10^i + (-1)^(i+1) = 11 beta_i (mod 121)
  for (std::size_t i = 0; i < recomputed.size(); ++i) {
    const std::int64_t sign = i % 2 == 0 ? -1 : 1;  // (-1)^(i+1)
    const std::int64_t lhs = porous::pow10_mod(i, 121) + sign;
    CHECK(((lhs - 11 * recomputed[i]) % 121 + 121) % 121 == 0);
  }
  const auto r = porous::certify_121();
  check_sound(r);
  CHECK(r.min_length == 14);
}

TEST_CASE("certify dispatch") {
  for (auto k : porous::kCertifiedPorous) {
    const auto r = porous::certify(k);
    REQUIRE(r.has_value());
    CHECK(r->k == k);
    const auto j = porous::to_json(*r);
    CHECK(j["k"] == k);
    CHECK(j["forced_zero_conclusion"] == true);
  }
  CHECK_FALSE(porous::certify(12).has_value());
  CHECK_FALSE(porous::certify(20).has_value());
}

TEST_CASE("corrupted coefficients make the certificates fail") {
  CHECK_THROWS_AS(porous::certify_11({12, 12}), porous::CertificateFailure);

  auto bad37 = porous::kParams37;
  bad37.weights[2] = 10;
  CHECK_THROWS_AS(porous::certify_37(bad37), porous::CertificateFailure);

  auto bad74 = porous::kParams74;
  bad74.weights[0] = 13;
  try {
    porous::certify_74(bad74);
    FAIL("expected a failure");
  } catch (const porous::CertificateFailure& e) {
    REQUIRE(e.violating().has_value());
    std::int64_t total = 0;
    for (auto v : e.violating()->values) total += v;
    CHECK(total == 74);
  }

  porous::TwoBlockParams bad101;
  bad101.modulus = 100;
  CHECK_THROWS_AS(porous::certify_101(bad101), porous::CertificateFailure);

  CHECK_THROWS_AS(porous::certify_121({porous::BetaSignReading::AlwaysOne}),
                  porous::CertificateFailure);
}
