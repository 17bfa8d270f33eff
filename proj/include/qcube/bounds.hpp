#pragma once
// Exhaustive small-scale verification of the combinatorial and isoperimetric
// lemmas: compositions, rooted connected-subset counts, 2-linked censuses,
// minimum vertex boundaries and the Sapozhenko-style family censuses.

#include <optional>
#include <string>
#include <vector>

#include "qcube/bigint.hpp"
#include "qcube/config.hpp"
#include "qcube/counting.hpp"
#include "qcube/cube.hpp"

namespace qcube {

// 2^(m-1); cross-checked against exhaustive generation for m <= 20.
BigCount compositions_count(uint64_t m);
// Exhaustive generator used as the oracle (m <= 20).
BigCount compositions_count_exhaustive(uint64_t m);

struct BoundedCompositions {
  BigCount count;          // sum_{i<b} C(m-1,i)
  long double bound_log2;  // b*log2(e*m/b)
  bool below_bound;        // count < 2^bound_log2
};
BoundedCompositions compositions_bounded(uint64_t m, uint64_t b);

enum class LinkageGraph { Adjacency, TwoLinked };

struct ConnectedSubsetReport {
  BigCount count;            // exact, by enumeration
  long double tree_bound_log2;  // n*log2(e*Delta)
  uint64_t delta;            // Delta used (d or d^2)
  bool below_bound;
};

// n-vertex subsets containing `root` that are connected in the chosen
// auxiliary graph.  Guards: d <= 4, n <= 5.
ConnectedSubsetReport connected_subsets(CubeDim dim, Vertex root, uint64_t n,
                                        LinkageGraph linkage);

struct RootedCensus {
  BigCount count;          // even-side X, |X|=x, i_X<=b, all 2-comps meet Y
  long double bound_log2;  // log2(C(|Y|,b)) + c*x*log2(d)
};

// Exhaustive over even-side subsets; d <= 3.
RootedCensus rooted_two_linked_census(CubeDim dim, const VertexSet& Y,
                                      uint64_t x, uint64_t b,
                                      const Config& cfg = {});

struct MinBoundaryReport {
  std::optional<uint64_t> min;  // absent in ball-only mode
  VertexSet argmin_sample;
  uint64_t ball_value = 0;  // best |N(A)| over Hamming-ball-sandwiched A
  VertexSet ball_sample;
};

// Minimum |N(A)| over one-sided A with |A| = a.  Exhaustive when
// C(2^(d-1), a) is affordable (d <= 4, a <= 8), else ball-only.
MinBoundaryReport min_vertex_boundary(CubeDim dim, uint64_t a,
                                      int side_parity);

struct SapozhenkoCensus {
  BigCount count_G;                   // |{A in E 2-linked : |N(A)| = g}|
  std::optional<BigCount> count_H;    // with |B(A)| = b, when b given
  long double g_bound_log2;           // g - zeta*g/log2(d)
  std::optional<long double> h_bound_log2;  // d + g - b - zeta*g/log2(d)
};

// Exhaustive classification of all even-side subsets; d <= 3.  The bounds
// are report-only (their regime starts far above desk scale).
SapozhenkoCensus sapozhenko_census(CubeDim dim, uint64_t g,
                                   std::optional<uint64_t> b_opt,
                                   const Config& cfg = {});

// Full (g, b) -> |H(g,b)| map for family-containment checks; d <= 3.
std::vector<std::tuple<uint64_t, uint64_t, BigCount>> sapozhenko_table(
    CubeDim dim);

}  // namespace qcube
