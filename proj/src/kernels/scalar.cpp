#include "porous/kernels.hpp"

namespace porous::kernels::scalar {
namespace {

// dst |= src << bits (multi-word, little-endian word order)
void or_shift_left(std::span<Word> dst, std::span<const Word> src, std::size_t bits) {
  const std::size_t n = dst.size();
  const std::size_t ws = bits / 64;
  const unsigned bs = bits % 64;
  for (std::size_t j = ws; j < n; ++j) {
    Word v = src[j - ws] << bs;
    if (bs != 0 && j > ws) v |= src[j - ws - 1] >> (64 - bs);
    dst[j] |= v;
  }
}

// dst |= src >> bits
void or_shift_right(std::span<Word> dst, std::span<const Word> src, std::size_t bits) {
  const std::size_t n = dst.size();
  const std::size_t ws = bits / 64;
  const unsigned bs = bits % 64;
  for (std::size_t j = 0; j + ws < n; ++j) {
    Word v = src[j + ws] >> bs;
    if (bs != 0 && j + ws + 1 < n) v |= src[j + ws + 1] << (64 - bs);
    dst[j] |= v;
  }
}

}  // namespace

void rotate_or(std::span<Word> dst, std::span<const Word> src, std::size_t width,
               std::size_t shift) {
  if (shift == 0) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] |= src[j];
    return;
  }
  or_shift_left(dst, src, shift);
  or_shift_right(dst, src, width - shift);
  if (const unsigned tail = width % 64; tail != 0) dst.back() &= (Word{1} << tail) - 1;
}

bool absorb(std::span<Word> fresh, std::span<const Word> next, std::span<Word> seen) {
  Word acc = 0;
  for (std::size_t j = 0; j < fresh.size(); ++j) {
    const Word f = next[j] & ~seen[j];
    fresh[j] = f;
    seen[j] |= f;
    acc |= f;
  }
  return acc != 0;
}

bool intersect(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  Word acc = 0;
  for (std::size_t j = 0; j < dst.size(); ++j) {
    dst[j] = a[j] & b[j];
    acc |= dst[j];
  }
  return acc != 0;
}

bool any(std::span<const Word> row) {
  for (Word w : row) {
    if (w != 0) return true;
  }
  return false;
}

}  // namespace porous::kernels::scalar
