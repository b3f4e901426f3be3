#pragma once

// Packed bit-row kernels used by the reachability search.
//
// A row is a cyclic bitset of `width` bits stored in ceil(width / 64) words.
// Bits at positions >= width are always zero on input and kept zero on
// output. Each kernel has a scalar reference implementation and, where the
// CPU supports it, an AVX2 variant; results are bit-identical.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace porous::kernels {

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t width) noexcept { return (width + 63) / 64; }

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct BitRowOps {
  // dst |= rotl(src, shift), rotation inside `width` bits; shift < width.
  void (*rotate_or)(std::span<Word> dst, std::span<const Word> src, std::size_t width,
                    std::size_t shift);
  // fresh = next & ~seen; seen |= fresh. Returns whether fresh is non-empty.
  bool (*absorb)(std::span<Word> fresh, std::span<const Word> next, std::span<Word> seen);
  // dst = a & b. Returns whether dst is non-empty.
  bool (*intersect)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  bool (*any)(std::span<const Word> row);
};

bool isa_available(Isa isa) noexcept;

/// Widest ISA supported by the running CPU.
Isa best_isa() noexcept;

/// Kernel table for `isa`. Falls back to scalar when `isa` is unavailable.
const BitRowOps& ops(Isa isa) noexcept;

/// Kernel table picked once at startup from best_isa().
const BitRowOps& active_ops() noexcept;

namespace scalar {
void rotate_or(std::span<Word> dst, std::span<const Word> src, std::size_t width, std::size_t shift);
bool absorb(std::span<Word> fresh, std::span<const Word> next, std::span<Word> seen);
bool intersect(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
bool any(std::span<const Word> row);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define POROUS_HAVE_AVX2_KERNELS 1
namespace avx2 {
void rotate_or(std::span<Word> dst, std::span<const Word> src, std::size_t width, std::size_t shift);
bool absorb(std::span<Word> fresh, std::span<const Word> next, std::span<Word> seen);
bool intersect(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
bool any(std::span<const Word> row);
}  // namespace avx2
#endif

}  // namespace porous::kernels
