#pragma once
// Closed-form and asymptotic expression evaluators: exact integers where the
// value is an integer, log2-space otherwise.  Nothing here asserts an
// asymptotic statement; comparisons against exact counts are report-only.

#include <optional>
#include <string>
#include <vector>

#include "qcube/bigint.hpp"
#include "qcube/config.hpp"
#include "qcube/cube.hpp"

namespace qcube {

struct LogValue {
  long double log2_value = 0;
  std::optional<BigCount> exact;  // present only when the value is an integer
};

enum class TheoremTarget { C4, C3, ISets };

// Right-hand sides 6e*2^N, 6e*2^(N/2), 2*sqrt(e)*2^(N/2).
LogValue theorem_value(TheoremTarget which, CubeDim dim);

// 6 * sum_{k=0}^{floor(N/d)} C(N,k) 2^(N-dk), exact.  The k range keeps every
// term integral; truncation only lowers the bound.
LogValue ideal_upper_bound(CubeDim dim);

// Exact-rational verification that ideal_upper_bound(d) < 6e*2^N
// (via the factorial partial sums of e).
bool ideal_upper_bound_below_6e2N(CubeDim dim);

// (2-4/q)-type flaw-rate factor of the coloring-count conjecture.
long double conjecture_f(int q, CubeDim dim);

// Conjectured C_q(Q_d) with the o(1) set to 0:
// (1+[q odd]) C(q,floor(q/2)) (floor(q/2)*ceil(q/2))^(N/2) exp(f(q)).
LogValue eg_conjecture_value(int q, CubeDim dim);

struct MpBound {
  bool first_branch = false;   // g = 0 and g_hat <= d^2/log d
  long double log2_value = 0;  // log2 of the evaluated bound
  long double aggregate_log2 = 0;  // the summed-form 2^(-zeta d/log d)
};

// Per-(g, g_hat) density bound with the implied constant replaced by zeta.
MpBound lemma_mp_bound(uint64_t g, uint64_t g_hat, CubeDim dim,
                       long double zeta);

struct RatioRow {
  int d;
  std::optional<BigCount> exact_count;
  std::optional<BigCount> ideal_count;  // d <= 3 only
  std::optional<BigCount> ideal_bound;
  std::optional<long double> theorem_log2;
  std::optional<long double> ratio_exact_to_theorem;
};

// Per-d comparison of exact counts against the closed forms; q in [2,4].
std::vector<RatioRow> ratio_report(int d_lo, int d_hi, int q,
                                   const Config& cfg = {});

std::string ratio_report_csv(const std::vector<RatioRow>& rows, int q);
std::string ratio_report_json(const std::vector<RatioRow>& rows, int q);

}  // namespace qcube
