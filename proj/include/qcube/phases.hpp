#pragma once
// The 4-color phase machinery: the six ordered equipartitions of the
// palette, agreement/flaw sets, main-phase classification, ideality and
// membership in the non-ideal class the template stage consumes.

#include <array>
#include <optional>
#include <string>

#include "qcube/config.hpp"
#include "qcube/counting.hpp"
#include "qcube/cube.hpp"

namespace qcube {

// Ordered equipartition (C,D) of {1,2,3,4}; C colors the even side.
// Exactly six values exist, ordered lexicographically by C.
struct Phase {
  std::array<uint8_t, 2> even_pair;  // C, sorted
  std::array<uint8_t, 2> odd_pair;   // D, sorted
  int index;                         // 0..5, position in the fixed order

  bool operator==(const Phase&) const = default;
  std::string name() const;  // e.g. "12|34"
};

const std::array<Phase, 6>& all_phases();
// The phase ({1,2},{3,4}).
const Phase& principal_phase();

struct PhaseReport {
  std::optional<Phase> phase;  // absent when min flaw count >= threshold
  VertexSet flaws;             // disagreement set for the reported phase
  uint64_t flaw_count = 0;
  long double threshold_used = 0;
  bool ideal = false;
  bool in_fstar = false;
  std::array<uint64_t, 6> all_flaw_counts{};  // per phase, fixed order

  std::string to_json() const;
};

// {v : (v even and f_v not in C) or (v odd and f_v not in D)}.
VertexSet flaw_set(const Coloring& f, const Phase& phase);

// Evaluates all six phases; reports the argmin phase (ties to the first in
// the fixed order) when its flaw count is below threshold(d), with ideality
// and F*-membership flags filled in.
PhaseReport main_phase(const Coloring& f, const Config& cfg = {});

// Main phase exists and all pairs of flaws are at Hamming distance >= 3.
bool is_ideal(const Coloring& f, const Config& cfg = {});

// Non-ideal, main phase ({1,2},{3,4}), and |N(X&E)| >= |N(X&O)|.
bool in_Fstar(const Coloring& f, const Config& cfg = {});

struct IdealCensus {
  CountResult census;    // exact number of ideal colorings
  BigCount upper_bound;  // closed-form bound 6*sum_k C(N,k) 2^(N-dk)
};

// Exhaustive classification, d<=3.
IdealCensus ideal_census(CubeDim dim, const Config& cfg = {});

// All members of F* at this dimension, in enumeration order (d<=3).
std::vector<Coloring> fstar_census(CubeDim dim, const Config& cfg = {});

}  // namespace qcube
