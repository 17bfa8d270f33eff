#pragma once
// Exact counting and enumeration of proper q-colorings and independent sets
// of Q_d, by two independent methods each.  These counters are the ground
// truth the rest of the toolkit is checked against.

#include <functional>
#include <string>
#include <vector>

#include "qcube/bigint.hpp"
#include "qcube/cube.hpp"

namespace qcube {

// Raised when an instance exceeds the hard enumeration guards.
struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proper q-coloring of Q_d; colors are 1..q in vertex-index order.
// Properness is validated at construction.
class Coloring {
 public:
  Coloring(CubeDim dim, int q, std::vector<uint8_t> colors);

  // Skips the properness check; for enumerators that guarantee it.
  static Coloring unchecked(CubeDim dim, int q, std::vector<uint8_t> colors);

  CubeDim dim() const { return dim_; }
  int q() const { return q_; }
  uint8_t at(Vertex v) const { return colors_[v]; }
  const std::vector<uint8_t>& colors() const { return colors_; }
  bool is_proper() const;

  // One line of 2^d color digits, vertex-index order.
  std::string to_digits() const;
  static Coloring from_digits(CubeDim dim, int q, const std::string& digits);

  bool operator==(const Coloring& o) const { return colors_ == o.colors_; }

 private:
  Coloring(CubeDim dim, int q, std::vector<uint8_t> colors, bool check);
  CubeDim dim_;
  int q_;
  std::vector<uint8_t> colors_;
};

struct CountResult {
  BigCount value;
  std::string method;
  double elapsed_ms = 0.0;
  int d = 0;
  int q = 0;  // 0 for independent-set counts

  std::string to_json() const;
};

// Exhaustive assignment enumeration with early properness pruning.
// Guards: q=2 up to d=4, q=3 up to d=3, q=4 up to d=3.
CountResult count_colorings_bruteforce(CubeDim dim, int q);

// Q_d = Q_{d-1} x K_2: counts ordered pairs of proper colorings of Q_{d-1}
// differing at every vertex.  Reaches d=4 for q<=4.  `threads` shards the
// outer row range; the result is bit-identical for any shard count.
CountResult count_colorings_product(CubeDim dim, int q, int threads = 1);

// Yields every proper coloring exactly once, in lexicographic order of the
// color sequence.  Same guards as brute force.
void for_each_proper_coloring(CubeDim dim, int q,
                              const std::function<void(const Coloring&)>& fn);
std::vector<Coloring> enumerate_colorings(CubeDim dim, int q);

// Exact i(Q_d), d<=4, by exhaustive subset scan.
CountResult count_independent_sets(CubeDim dim);
// Cross-check: i(Q_d) as the number of pairs (S0,S1) of disjoint independent
// sets of Q_{d-1}.
CountResult count_independent_sets_product(CubeDim dim, int threads = 1);

// Number of colorings agreeing with a 4-color phase everywhere: exactly 2^N.
BigCount count_pure_colorings(CubeDim dim);

// Packs a coloring 2 bits per vertex (color-1) into a uint16; needs n(d)<=8.
uint16_t pack_coloring(const Coloring& f);

}  // namespace qcube
