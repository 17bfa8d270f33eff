#include "qcube/kernels.hpp"

namespace qcube::kernels {

namespace {
Isa g_active = Isa::Scalar;
bool g_initialized = false;
}  // namespace

Isa best_isa() {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa active_isa() {
  if (!g_initialized) {
    g_active = best_isa();
    g_initialized = true;
  }
  return g_active;
}

void force_isa(Isa isa) {
  g_active = isa;
  g_initialized = true;
}

const char* isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

// lane mask: bit 0 of each active 2-bit lane
static inline uint16_t lane_mask(int lanes) {
  return static_cast<uint16_t>(0x5555u & ((1u << (2 * lanes)) - 1));
}

uint64_t count_fully_differing_pairs_scalar(const uint16_t* codes, size_t n,
                                            int lanes, size_t row_lo,
                                            size_t row_hi) {
  const uint16_t mask = lane_mask(lanes);
  uint64_t total = 0;
  for (size_t i = row_lo; i < row_hi; ++i) {
    const uint16_t a = codes[i];
    for (size_t j = 0; j < n; ++j) {
      uint16_t x = static_cast<uint16_t>(a ^ codes[j]);
      // a lane is nonzero iff (x | x>>1) has its low bit set
      uint16_t y = static_cast<uint16_t>((x | (x >> 1)) & mask);
      total += (y == mask);
    }
  }
  return total;
}

uint64_t count_disjoint_pairs_scalar(const uint16_t* masks, size_t n,
                                     size_t row_lo, size_t row_hi) {
  uint64_t total = 0;
  for (size_t i = row_lo; i < row_hi; ++i) {
    const uint16_t a = masks[i];
    for (size_t j = 0; j < n; ++j) total += ((a & masks[j]) == 0);
  }
  return total;
}

uint64_t count_fully_differing_pairs(const uint16_t* codes, size_t n, int lanes,
                                     size_t row_lo, size_t row_hi) {
#if defined(__x86_64__) || defined(__i386__)
  if (active_isa() == Isa::Avx2)
    return count_fully_differing_pairs_avx2(codes, n, lanes, row_lo, row_hi);
#endif
  return count_fully_differing_pairs_scalar(codes, n, lanes, row_lo, row_hi);
}

uint64_t count_disjoint_pairs(const uint16_t* masks, size_t n, size_t row_lo,
                              size_t row_hi) {
#if defined(__x86_64__) || defined(__i386__)
  if (active_isa() == Isa::Avx2)
    return count_disjoint_pairs_avx2(masks, n, row_lo, row_hi);
#endif
  return count_disjoint_pairs_scalar(masks, n, row_lo, row_hi);
}

}  // namespace qcube::kernels
