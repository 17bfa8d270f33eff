// AVX2 variants of the pairwise-scan kernels.  16 uint16 codes per 256-bit
// vector; the scalar tail handles n % 16.  Built with a target attribute so
// the rest of the library keeps the baseline ISA.

#include "qcube/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace qcube::kernels {

static inline uint16_t lane_mask(int lanes) {
  return static_cast<uint16_t>(0x5555u & ((1u << (2 * lanes)) - 1));
}

__attribute__((target("avx2"))) uint64_t count_fully_differing_pairs_avx2(
    const uint16_t* codes, size_t n, int lanes, size_t row_lo, size_t row_hi) {
  const uint16_t mask = lane_mask(lanes);
  const __m256i vmask = _mm256_set1_epi16(static_cast<short>(mask));
  const size_t n16 = n - n % 16;
  uint64_t total = 0;
  for (size_t i = row_lo; i < row_hi; ++i) {
    const __m256i va = _mm256_set1_epi16(static_cast<short>(codes[i]));
    uint64_t hits = 0;
    size_t j = 0;
    for (; j < n16; j += 16) {
      __m256i vb =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(codes + j));
      __m256i x = _mm256_xor_si256(va, vb);
      __m256i y = _mm256_or_si256(x, _mm256_srli_epi16(x, 1));
      y = _mm256_and_si256(y, vmask);
      __m256i eq = _mm256_cmpeq_epi16(y, vmask);
      hits += static_cast<unsigned>(
          __builtin_popcount(static_cast<unsigned>(_mm256_movemask_epi8(eq))));
    }
    total += hits / 2;  // movemask sets 2 bits per matching 16-bit lane
    const uint16_t a = codes[i];
    for (; j < n; ++j) {
      uint16_t x = static_cast<uint16_t>(a ^ codes[j]);
      uint16_t y = static_cast<uint16_t>((x | (x >> 1)) & mask);
      total += (y == mask);
    }
  }
  return total;
}

__attribute__((target("avx2"))) uint64_t count_disjoint_pairs_avx2(
    const uint16_t* masks, size_t n, size_t row_lo, size_t row_hi) {
  const __m256i zero = _mm256_setzero_si256();
  const size_t n16 = n - n % 16;
  uint64_t total = 0;
  for (size_t i = row_lo; i < row_hi; ++i) {
    const __m256i va = _mm256_set1_epi16(static_cast<short>(masks[i]));
    uint64_t hits = 0;
    size_t j = 0;
    for (; j < n16; j += 16) {
      __m256i vb =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks + j));
      __m256i eq = _mm256_cmpeq_epi16(_mm256_and_si256(va, vb), zero);
      hits += static_cast<unsigned>(
          __builtin_popcount(static_cast<unsigned>(_mm256_movemask_epi8(eq))));
    }
    total += hits / 2;
    const uint16_t a = masks[i];
    for (; j < n; ++j) total += ((a & masks[j]) == 0);
  }
  return total;
}

}  // namespace qcube::kernels

#else

namespace qcube::kernels {

uint64_t count_fully_differing_pairs_avx2(const uint16_t* codes, size_t n,
                                          int lanes, size_t row_lo,
                                          size_t row_hi) {
  return count_fully_differing_pairs_scalar(codes, n, lanes, row_lo, row_hi);
}

uint64_t count_disjoint_pairs_avx2(const uint16_t* masks, size_t n,
                                   size_t row_lo, size_t row_hi) {
  return count_disjoint_pairs_scalar(masks, n, row_lo, row_hi);
}

}  // namespace qcube::kernels

#endif
