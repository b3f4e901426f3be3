#include <doctest.h>

#include <random>
#include <vector>

#include "porous/kernels.hpp"

namespace k = porous::kernels;
using k::Word;

namespace {

std::vector<Word> random_row(std::mt19937_64& rng, std::size_t width) {
  std::vector<Word> row(k::words_for(width));
  for (auto& w : row) w = rng();
  if (width % 64) row.back() &= (Word{1} << (width % 64)) - 1;
  return row;
}

bool bit(const std::vector<Word>& row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1; }

// bit-by-bit definition of the rotate-OR kernel
std::vector<Word> naive_rotate_or(std::vector<Word> dst, const std::vector<Word>& src,
                                  std::size_t width, std::size_t shift) {
  for (std::size_t i = 0; i < width; ++i) {
    if (bit(src, i)) {
      const std::size_t j = (i + shift) % width;
      dst[j / 64] |= Word{1} << (j % 64);
    }
  }
  return dst;
}

std::vector<k::Isa> available() {
  std::vector<k::Isa> out{k::Isa::Scalar};
  if (k::isa_available(k::Isa::Avx2)) out.push_back(k::Isa::Avx2);
  return out;
}

}  // namespace

TEST_CASE("rotate_or matches the bitwise definition for every ISA") {
  std::mt19937_64 rng(1);
  std::vector<std::size_t> widths{1, 2, 3, 11, 37, 63, 64, 65, 101, 121, 127, 128, 129,
                                  255, 256, 257, 333, 511, 640, 999, 1000, 1021};
  for (std::size_t width : widths) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t shift = trial < 4 ? std::min<std::size_t>(trial, width - 1)
                                          : rng() % width;
      const auto src = random_row(rng, width);
      const auto dst = random_row(rng, width);
      const auto expected = naive_rotate_or(dst, src, width, shift);
      for (auto isa : available()) {
        auto got = dst;
        k::ops(isa).rotate_or(got, src, width, shift);
        CAPTURE(width);
        CAPTURE(shift);
        CAPTURE(k::isa_name(isa));
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("every shift of a single bit lands where expected") {
  for (std::size_t width : {67u, 130u, 300u}) {
    std::vector<Word> src(k::words_for(width), 0);
    src[0] = 1;
    for (std::size_t shift = 0; shift < width; ++shift) {
      for (auto isa : available()) {
        std::vector<Word> dst(src.size(), 0);
        k::ops(isa).rotate_or(dst, src, width, shift);
        CHECK(bit(dst, shift));
        std::size_t total = 0;
        for (std::size_t i = 0; i < width; ++i) total += bit(dst, i);
        CHECK(total == 1);
      }
    }
  }
}

TEST_CASE("absorb, intersect and any agree across ISAs") {
  std::mt19937_64 rng(2);
  for (std::size_t width : {5u, 64u, 100u, 256u, 777u, 1000u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto next = random_row(rng, width);
      const auto seen = random_row(rng, width);
      const auto other = random_row(rng, width);
      const std::size_t n = next.size();

      std::vector<Word> fresh_ref(n), seen_ref = seen;
      const bool any_ref = k::scalar::absorb(fresh_ref, next, seen_ref);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(fresh_ref[j] == (next[j] & ~seen[j]));
        CHECK(seen_ref[j] == (next[j] | seen[j]));
      }

      std::vector<Word> and_ref(n);
      const bool inter_ref = k::scalar::intersect(and_ref, next, other);

      for (auto isa : available()) {
        const auto& ops = k::ops(isa);
        std::vector<Word> fresh(n), seen_copy = seen;
        CHECK(ops.absorb(fresh, next, seen_copy) == any_ref);
        CHECK(fresh == fresh_ref);
        CHECK(seen_copy == seen_ref);

        std::vector<Word> both(n);
        CHECK(ops.intersect(both, next, other) == inter_ref);
        CHECK(both == and_ref);

        std::vector<Word> zero(n, 0);
        CHECK_FALSE(ops.any(zero));
        zero[n - 1] = 1;
        CHECK(ops.any(zero));
      }
    }
  }
}

TEST_CASE("absorb of a subset reports nothing fresh") {
  std::vector<Word> seen(8, ~Word{0});
  std::vector<Word> next(8, 0x5555);
  std::vector<Word> fresh(8);
  for (auto isa : available()) CHECK_FALSE(k::ops(isa).absorb(fresh, next, seen));
}

TEST_CASE("dispatch") {
  CHECK(k::isa_available(k::Isa::Scalar));
  CHECK(&k::active_ops() == &k::ops(k::best_isa()));
  CHECK(k::isa_name(k::Isa::Avx2) == "avx2");
}
