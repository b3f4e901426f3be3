#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "porous/brute_force.hpp"
#include "porous/decider.hpp"

using porous::SearchMode;

namespace {

std::string witness_of(std::uint32_t k, SearchMode mode, const porous::DeciderLimits& limits = {}) {
  const auto w = porous::minimal_witness(k, mode, limits);
  return w ? w->str() : "none";
}

using Member = std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>;

std::set<Member> members(const porous::LevelSet& level) {
  std::set<Member> out;
  const std::uint32_t k = level.k();
  const auto ids = level.row_ids();
  for (std::size_t slot = 0; slot < ids.size(); ++slot) {
    const auto bits = level.row_bits(slot);
    for (std::uint32_t r = 0; r < k; ++r) {
      if ((bits[r / 64] >> (r % 64)) & 1) out.emplace(ids[slot] / k, ids[slot] % k, r);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("verdicts for small and published k") {
  CHECK(porous::decide(11).porous());
  CHECK(porous::decide(10).excluded());
  CHECK(porous::decide(1000).excluded());
  const auto twelve = porous::decide(12);
  REQUIRE(twelve.non_porous());
  CHECK(twelve.witness()->witness.str() == "48");
  CHECK(twelve.witness()->method == porous::WitnessMethod::Decider);
  for (std::uint32_t k : {37u, 74u, 101u, 121u}) {
    CAPTURE(k);
    const auto c = porous::decide(k);
    REQUIRE(c.porous());
    CHECK(std::get<porous::Porous>(c.verdict).proof == porous::ProofKind::Exhaustion);
  }
  CHECK_THROWS_AS(porous::decide(0), std::invalid_argument);
}

TEST_CASE("minimal witnesses") {
  CHECK(witness_of(37, SearchMode::ZerosAllowed) == "1009009009009");
  CHECK(witness_of(11, SearchMode::ZerosAllowed) == "209");
  CHECK(witness_of(11, SearchMode::ZeroFree) == "none");
  for (std::uint32_t k = 1; k <= 9; ++k) {
    CHECK(witness_of(k, SearchMode::ZeroFree) == std::to_string(k));
    CHECK(witness_of(k, SearchMode::ZerosAllowed) == std::to_string(k));
  }
  // values from a direct scan over multiples of k
  CHECK(witness_of(13, SearchMode::ZeroFree) == "24115");
  CHECK(witness_of(14, SearchMode::ZeroFree) == "21182");
  CHECK(witness_of(19, SearchMode::ZerosAllowed) == "12844");
  CHECK(witness_of(25, SearchMode::ZeroFree) == "52675");
  CHECK_THROWS_AS(porous::minimal_witness(20, SearchMode::ZeroFree), std::invalid_argument);
}

TEST_CASE("extract_witness on explored levels") {
  for (std::uint32_t k : {1u, 5u, 9u, 12u, 18u}) {
    const auto outcome = porous::explore(k, SearchMode::ZeroFree);
    REQUIRE(outcome.accepted);
    REQUIRE(outcome.levels_kept);
    const auto w = porous::extract_witness(outcome.levels, porous::build_residue_table(k),
                                           SearchMode::ZeroFree);
    const auto brute = porous::brute_force_search(k, SearchMode::ZeroFree);
    REQUIRE(brute.witness);
    CHECK(w == *brute.witness);
  }
  const auto outcome = porous::explore(12, SearchMode::ZeroFree);
  CHECK(porous::extract_witness(outcome.levels, porous::build_residue_table(12),
                                SearchMode::ZeroFree).str() == "48");

  // a level list that never accepts is an internal inconsistency, not a result
  const auto porous11 = porous::explore(11, SearchMode::ZeroFree);
  CHECK_FALSE(porous11.accepted);
  CHECK_THROWS_AS(porous::extract_witness(porous11.levels, porous::build_residue_table(11),
                                          SearchMode::ZeroFree),
                  porous::InternalInconsistency);
}

TEST_CASE("levels are exactly the images of the previous level, minus revisits") {
  for (auto mode : {SearchMode::ZeroFree, SearchMode::ZerosAllowed}) {
    for (std::uint32_t k : {7u, 12u, 13u, 22u, 27u}) {
      const auto table = porous::build_residue_table(k);
      const auto outcome = porous::explore(k, mode);
      REQUIRE(outcome.levels_kept);
      std::vector<std::set<Member>> seen_by_index(table.index_count());
      for (std::size_t t = 0; t < outcome.levels.size(); ++t) {
        const auto current = members(outcome.levels[t]);
        const auto index = table.index_at(t);
        if (t > 0) {
          std::set<Member> images;
          for (const auto& [sum, m, rev] : members(outcome.levels[t - 1])) {
            const porous::SearchState from{sum, m, rev, t - 1};
            for (std::uint8_t d = (t == 1 || mode == SearchMode::ZeroFree) ? 1 : 0; d <= 9; ++d) {
              const auto next = porous::advance(table, from, d);
              if (next.sum > k) break;
              const Member image{next.sum, next.m_residue, next.rev_residue};
              if (!seen_by_index[index].count(image)) images.insert(image);
            }
          }
          CAPTURE(k);
          CAPTURE(t);
          CHECK(current == images);
        }
        seen_by_index[index].insert(current.begin(), current.end());
      }
    }
  }
}

TEST_CASE("witness length bounds") {
  for (std::uint32_t k = 1; k <= 60; ++k) {
    if (k % 10 == 0) continue;
    const auto w = porous::minimal_witness(k, SearchMode::ZeroFree);
    if (!w) continue;
    CAPTURE(k);
    CHECK(w->size() >= (k + 8) / 9);
    CHECK(w->size() <= k);
    CHECK(porous::validate_witness(k, *w, true).valid());
  }
}

TEST_CASE("witness recovery from checkpoints matches the stored-level path") {
  struct Case {
    std::uint32_t k;
    SearchMode mode;
  };
  int checkpointed = 0;
  for (const auto& c : {Case{13, SearchMode::ZeroFree}, Case{37, SearchMode::ZerosAllowed},
                        Case{19, SearchMode::ZerosAllowed}, Case{111, SearchMode::ZeroFree},
                        Case{148, SearchMode::ZeroFree}}) {
    CAPTURE(c.k);
    const auto roomy = porous::explore(c.k, c.mode);
    REQUIRE(roomy.levels_kept);
    std::size_t widest = 0, all = 0;
    for (const auto& level : roomy.levels) {
      widest = std::max(widest, level.bytes());
      all += level.bytes();
    }

    porous::DeciderLimits tight;
    tight.max_bytes = porous::search_fixed_bytes(c.k) + 6 * widest;
    const auto constrained = porous::explore(c.k, c.mode, tight);
    CHECK(constrained.levels_kept == (all <= 6 * widest));
    CHECK((constrained.checkpoint_stride > 1) == !constrained.levels_kept);
    checkpointed += constrained.levels_kept ? 0 : 1;
    CHECK(constrained.accept_length == roomy.accept_length);
    CHECK(constrained.peak_bytes <= tight.max_bytes + widest);
    for (const auto& level : constrained.levels) {
      CHECK(level.length() % constrained.checkpoint_stride == 0);
    }
    CHECK(witness_of(c.k, c.mode, tight) == witness_of(c.k, c.mode));
  }
  CHECK(checkpointed >= 3);

  // one frontier of room is not enough to make progress
  porous::DeciderLimits starved;
  starved.max_bytes = porous::search_fixed_bytes(37) + 64;
  CHECK_THROWS_AS(porous::minimal_witness(37, SearchMode::ZerosAllowed, starved),
                  porous::ResourceLimitError);
  // but a porous verdict needs no witness recovery
  CHECK(porous::decide(37, SearchMode::ZeroFree, starved).porous());
}

TEST_CASE("resource limits are typed errors") {
  porous::DeciderLimits tiny;
  tiny.max_bytes = 1024;
  CHECK_THROWS_AS(porous::decide(121, SearchMode::ZeroFree, tiny), porous::ResourceLimitError);
  porous::DeciderLimits few_states;
  few_states.max_states = 1000;
  try {
    porous::decide(37, SearchMode::ZeroFree, few_states);
    FAIL("expected a resource limit");
  } catch (const porous::ResourceLimitError& e) {
    CHECK(e.required() == 3ull * 38 * 37 * 37);
    CHECK(e.budget() == 1000);
  }
}

TEST_CASE("scalar and AVX2 kernels give identical decisions") {
  if (!porous::kernels::isa_available(porous::kernels::Isa::Avx2)) return;
  porous::DeciderLimits scalar, avx2;
  scalar.isa = porous::kernels::Isa::Scalar;
  avx2.isa = porous::kernels::Isa::Avx2;
  for (std::uint32_t k : {11u, 37u, 67u, 121u, 131u, 199u, 202u, 333u}) {
    CAPTURE(k);
    const auto a = porous::explore(k, SearchMode::ZeroFree, scalar);
    const auto b = porous::explore(k, SearchMode::ZeroFree, avx2);
    CHECK(a.accepted == b.accepted);
    CHECK(a.accept_length == b.accept_length);
    CHECK(a.rows_expanded == b.rows_expanded);
    REQUIRE(a.levels.size() == b.levels.size());
    for (std::size_t t = 0; t < a.levels.size(); ++t) {
      CHECK(a.levels[t].count() == b.levels[t].count());
    }
    CHECK(witness_of(k, SearchMode::ZeroFree, scalar) == witness_of(k, SearchMode::ZeroFree, avx2));
  }
}

TEST_CASE("porous set within 1..200") {
  std::vector<std::uint32_t> porous_found;
  for (std::uint32_t k = 1; k <= 200; ++k) {
    if (k % 10 == 0) continue;
    const auto c = porous::decide(k);
    if (c.porous()) porous_found.push_back(k);
    if (const auto* w = c.witness()) {
      CAPTURE(k);
      CHECK(porous::validate_witness(k, w->witness, true).valid());
    }
  }
  CHECK(porous_found == std::vector<std::uint32_t>{11, 37, 74, 101, 121});
}
