// Compiled with -mavx2; only reached through ops() after a CPUID check.

#include <immintrin.h>

#include "porous/kernels.hpp"

namespace porous::kernels::avx2 {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void or_shift_left(std::span<Word> dst, std::span<const Word> src, std::size_t bits) {
  const std::size_t n = dst.size();
  const std::size_t ws = bits / 64;
  const unsigned bs = bits % 64;
  if (ws >= n) return;
  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(bs));
  // a count of 64 zeroes every lane, which is what bs == 0 needs
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(64 - bs));

  // word ws has no lower neighbour
  dst[ws] |= src[0] << bs;
  std::size_t j = ws + 1;
  for (; j + 4 <= n; j += 4) {
    const __m256i cur = _mm256_sll_epi64(load(&src[j - ws]), lo_count);
    const __m256i carry = _mm256_srl_epi64(load(&src[j - ws - 1]), hi_count);
    store(&dst[j], _mm256_or_si256(load(&dst[j]), _mm256_or_si256(cur, carry)));
  }
  for (; j < n; ++j) {
    Word v = src[j - ws] << bs;
    if (bs != 0) v |= src[j - ws - 1] >> (64 - bs);
    dst[j] |= v;
  }
}

void or_shift_right(std::span<Word> dst, std::span<const Word> src, std::size_t bits) {
  const std::size_t n = dst.size();
  const std::size_t ws = bits / 64;
  const unsigned bs = bits % 64;
  const __m128i lo_count = _mm_cvtsi32_si128(static_cast<int>(bs));
  const __m128i hi_count = _mm_cvtsi32_si128(static_cast<int>(64 - bs));

  std::size_t j = 0;
  for (; j + ws + 5 <= n; j += 4) {
    const __m256i cur = _mm256_srl_epi64(load(&src[j + ws]), lo_count);
    const __m256i carry = _mm256_sll_epi64(load(&src[j + ws + 1]), hi_count);
    store(&dst[j], _mm256_or_si256(load(&dst[j]), _mm256_or_si256(cur, carry)));
  }
  for (; j + ws < n; ++j) {
    Word v = src[j + ws] >> bs;
    if (bs != 0 && j + ws + 1 < n) v |= src[j + ws + 1] << (64 - bs);
    dst[j] |= v;
  }
}

}  // namespace

void rotate_or(std::span<Word> dst, std::span<const Word> src, std::size_t width,
               std::size_t shift) {
  if (shift == 0) {
    std::size_t j = 0;
    for (; j + 4 <= dst.size(); j += 4) store(&dst[j], _mm256_or_si256(load(&dst[j]), load(&src[j])));
    for (; j < dst.size(); ++j) dst[j] |= src[j];
    return;
  }
  or_shift_left(dst, src, shift);
  or_shift_right(dst, src, width - shift);
  if (const unsigned tail = width % 64; tail != 0) dst.back() &= (Word{1} << tail) - 1;
}

bool absorb(std::span<Word> fresh, std::span<const Word> next, std::span<Word> seen) {
  const std::size_t n = fresh.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i s = load(&seen[j]);
    const __m256i f = _mm256_andnot_si256(s, load(&next[j]));
    store(&fresh[j], f);
    store(&seen[j], _mm256_or_si256(s, f));
    acc = _mm256_or_si256(acc, f);
  }
  Word tail = 0;
  for (; j < n; ++j) {
    const Word f = next[j] & ~seen[j];
    fresh[j] = f;
    seen[j] |= f;
    tail |= f;
  }
  return tail != 0 || !_mm256_testz_si256(acc, acc);
}

bool intersect(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = dst.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i v = _mm256_and_si256(load(&a[j]), load(&b[j]));
    store(&dst[j], v);
    acc = _mm256_or_si256(acc, v);
  }
  Word tail = 0;
  for (; j < n; ++j) {
    dst[j] = a[j] & b[j];
    tail |= dst[j];
  }
  return tail != 0 || !_mm256_testz_si256(acc, acc);
}

bool any(std::span<const Word> row) {
  std::size_t j = 0;
  for (; j + 4 <= row.size(); j += 4) {
    const __m256i v = load(&row[j]);
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; j < row.size(); ++j) {
    if (row[j] != 0) return true;
  }
  return false;
}

}  // namespace porous::kernels::avx2
