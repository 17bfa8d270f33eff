#pragma once
// The hypercube substrate: vertices of Q_d as d-bit integers, parity sides,
// neighborhoods, boundaries, closures, linkage components and Hamming balls.
//
// Vertex labeling convention: vertices are integers 0..2^d-1, coordinate i
// is bit i, XOR by (1<<i) flips coordinate i.  Sets iterate in increasing
// vertex order so every decomposition is deterministic.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcube/bigint.hpp"

namespace qcube {

using Vertex = uint32_t;

struct CubeDim {
  int d;

  explicit CubeDim(int dim) : d(dim) {
    if (dim < 1) throw std::invalid_argument("CubeDim: d must be >= 1");
    if (dim > 24) throw std::invalid_argument("CubeDim: d > 24 not supported");
  }
  uint64_t n() const { return uint64_t{1} << d; }        // vertex count 2^d
  uint64_t half() const { return uint64_t{1} << (d - 1); }
};

inline int parity(Vertex v) { return std::popcount(v) & 1; }
inline int hamming(Vertex a, Vertex b) { return std::popcount(a ^ b); }

enum class Side { Even, Odd, Mixed, Empty };

// A set of vertices of one Q_d, kept sorted ascending and duplicate-free.
struct VertexSet {
  std::vector<Vertex> verts;

  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> v);

  size_t size() const { return verts.size(); }
  bool empty() const { return verts.empty(); }
  bool contains(Vertex v) const;
  Side side() const;

  bool operator==(const VertexSet&) const = default;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);  // a subseteq b

// All vertices of the given parity side.
VertexSet full_side(CubeDim dim, int side_parity);

struct LinkageDecomposition {
  int k = 2;
  std::vector<VertexSet> components;  // ordered by smallest contained vertex
  size_t count() const { return components.size(); }  // i_X
};

void check_in_cube(const VertexSet& x, CubeDim dim);

// N(X): all vertices adjacent to some member of X.
VertexSet neighborhood(const VertexSet& x, CubeDim dim);

// N^2(X) = N(N(X)).
VertexSet second_neighborhood(const VertexSet& x, CubeDim dim);

// B(X) = {y : N(y) subseteq X}; X must be one-sided, result on the other side.
VertexSet interior(const VertexSet& x, CubeDim dim);

// |nabla(X,Y)|: number of edges with one end in X, the other in Y (disjoint).
BigCount boundary_edges(const VertexSet& x, const VertexSet& y, CubeDim dim);

// [A] = {x : N(x) subseteq N(A)}; A one-sided nonempty, result on A's side.
VertexSet closure(const VertexSet& a, CubeDim dim);

// Maximal k-linked subsets of a one-sided X (k-linked: joined by hops of
// Hamming distance <= k within the set).
LinkageDecomposition k_components(const VertexSet& x, int k, CubeDim dim);

// {w of the requested parity : hamming(v,w) <= r}.  r > d is clamped to d;
// *clamped reports it when non-null.
VertexSet hamming_ball(Vertex v, int r, CubeDim dim, int side_parity,
                       bool* clamped = nullptr);

}  // namespace qcube
