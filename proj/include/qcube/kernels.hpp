#pragma once
// Pairwise-scan kernels behind the exact counters.  Colorings of a half-cube
// (up to 8 vertices) are packed 2 bits per vertex into a uint16_t code;
// independent sets are packed one bit per vertex.  Each kernel has a scalar
// reference implementation and an AVX2 variant selected at runtime; the two
// are equivalence-tested bit for bit.

#include <cstddef>
#include <cstdint>

namespace qcube::kernels {

enum class Isa { Scalar, Avx2 };

// Best ISA the running CPU supports.
Isa best_isa();

// Currently selected ISA (defaults to best_isa() on first query).
Isa active_isa();
void force_isa(Isa isa);

const char* isa_name(Isa isa);

// Number of ordered pairs (i,j) over rows [row_lo,row_hi) x [0,n) whose codes
// differ in every 2-bit lane, lanes in [1,8].  Row i==j never qualifies.
uint64_t count_fully_differing_pairs(const uint16_t* codes, size_t n,
                                     int lanes, size_t row_lo, size_t row_hi);

// Number of ordered pairs (i,j) over rows [row_lo,row_hi) x [0,n) with
// masks[i] & masks[j] == 0 (i == j included: the empty mask pairs with itself).
uint64_t count_disjoint_pairs(const uint16_t* masks, size_t n, size_t row_lo,
                              size_t row_hi);

// Reference implementations (always available, used as the equivalence oracle).
uint64_t count_fully_differing_pairs_scalar(const uint16_t* codes, size_t n,
                                            int lanes, size_t row_lo,
                                            size_t row_hi);
uint64_t count_disjoint_pairs_scalar(const uint16_t* masks, size_t n,
                                     size_t row_lo, size_t row_hi);

// AVX2 variants; calling them on a CPU without AVX2 is undefined.
uint64_t count_fully_differing_pairs_avx2(const uint16_t* codes, size_t n,
                                          int lanes, size_t row_lo,
                                          size_t row_hi);
uint64_t count_disjoint_pairs_avx2(const uint16_t* masks, size_t n,
                                   size_t row_lo, size_t row_hi);

}  // namespace qcube::kernels
