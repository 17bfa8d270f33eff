#include "qcube/cube.hpp"

#include <algorithm>

namespace qcube {

VertexSet::VertexSet(std::vector<Vertex> v) : verts(std::move(v)) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(verts.begin(), verts.end(), v);
}

Side VertexSet::side() const {
  if (verts.empty()) return Side::Empty;
  bool has_even = false, has_odd = false;
  for (Vertex v : verts) (parity(v) ? has_odd : has_even) = true;
  if (has_even && has_odd) return Side::Mixed;
  return has_even ? Side::Even : Side::Odd;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_union(a.verts.begin(), a.verts.end(), b.verts.begin(), b.verts.end(),
                 std::back_inserter(r.verts));
  return r;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.verts.begin(), a.verts.end(), b.verts.begin(),
                        b.verts.end(), std::back_inserter(r.verts));
  return r;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.verts.begin(), a.verts.end(), b.verts.begin(),
                      b.verts.end(), std::back_inserter(r.verts));
  return r;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  return set_intersect(a, b).empty();
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.verts.begin(), b.verts.end(), a.verts.begin(),
                       a.verts.end());
}

VertexSet full_side(CubeDim dim, int side_parity) {
  VertexSet r;
  for (Vertex v = 0; v < dim.n(); ++v)
    if (parity(v) == side_parity) r.verts.push_back(v);
  return r;
}

void check_in_cube(const VertexSet& x, CubeDim dim) {
  for (Vertex v : x.verts)
    if (v >= dim.n())
      throw std::invalid_argument("vertex set does not fit in Q_" +
                                  std::to_string(dim.d));
}

VertexSet neighborhood(const VertexSet& x, CubeDim dim) {
  check_in_cube(x, dim);
  std::vector<Vertex> out;
  out.reserve(x.size() * dim.d);
  for (Vertex v : x.verts)
    for (int i = 0; i < dim.d; ++i) out.push_back(v ^ (Vertex{1} << i));
  return VertexSet(std::move(out));
}

VertexSet second_neighborhood(const VertexSet& x, CubeDim dim) {
  if (x.empty()) return {};
  return neighborhood(neighborhood(x, dim), dim);
}

VertexSet interior(const VertexSet& x, CubeDim dim) {
  check_in_cube(x, dim);
  if (x.side() == Side::Mixed)
    throw std::invalid_argument("interior: input must be one-sided");
  if (x.empty()) return {};
  int opp = 1 - parity(x.verts[0]);
  VertexSet r;
  for (Vertex y = 0; y < dim.n(); ++y) {
    if (parity(y) != opp) continue;
    bool all_in = true;
    for (int i = 0; i < dim.d && all_in; ++i)
      all_in = x.contains(y ^ (Vertex{1} << i));
    if (all_in) r.verts.push_back(y);
  }
  return r;
}

BigCount boundary_edges(const VertexSet& x, const VertexSet& y, CubeDim dim) {
  check_in_cube(x, dim);
  check_in_cube(y, dim);
  if (!disjoint(x, y))
    throw std::invalid_argument("boundary_edges: X and Y must be disjoint");
  BigCount c = 0;
  for (Vertex v : x.verts)
    for (int i = 0; i < dim.d; ++i)
      if (y.contains(v ^ (Vertex{1} << i))) ++c;
  return c;
}

VertexSet closure(const VertexSet& a, CubeDim dim) {
  check_in_cube(a, dim);
  if (a.empty()) throw std::invalid_argument("closure: empty input");
  if (a.side() == Side::Mixed)
    throw std::invalid_argument("closure: input must be one-sided");
  VertexSet na = neighborhood(a, dim);
  int side = parity(a.verts[0]);
  VertexSet r;
  for (Vertex v = 0; v < dim.n(); ++v) {
    if (parity(v) != side) continue;
    bool in = true;
    for (int i = 0; i < dim.d && in; ++i) in = na.contains(v ^ (Vertex{1} << i));
    if (in) r.verts.push_back(v);
  }
  return r;
}

LinkageDecomposition k_components(const VertexSet& x, int k, CubeDim dim) {
  check_in_cube(x, dim);
  if (k < 1) throw std::invalid_argument("k_components: k must be >= 1");
  if (x.side() == Side::Mixed)
    throw std::invalid_argument("k_components: input must be one-sided");
  LinkageDecomposition out;
  out.k = k;
  std::vector<Vertex> remaining = x.verts;  // sorted
  std::vector<bool> used(remaining.size(), false);
  for (size_t s = 0; s < remaining.size(); ++s) {
    if (used[s]) continue;
    std::vector<Vertex> comp{remaining[s]};
    used[s] = true;
    std::vector<Vertex> stack{remaining[s]};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (size_t t = 0; t < remaining.size(); ++t) {
        if (used[t]) continue;
        if (hamming(u, remaining[t]) <= k) {
          used[t] = true;
          comp.push_back(remaining[t]);
          stack.push_back(remaining[t]);
        }
      }
    }
    out.components.push_back(VertexSet(std::move(comp)));
  }
  // seeds were taken in increasing order, so components are ordered by
  // smallest contained vertex already
  return out;
}

VertexSet hamming_ball(Vertex v, int r, CubeDim dim, int side_parity,
                       bool* clamped) {
  if (v >= dim.n()) throw std::invalid_argument("hamming_ball: vertex out of range");
  if (clamped) *clamped = r > dim.d;
  if (r > dim.d) r = dim.d;
  if (r < 0) throw std::invalid_argument("hamming_ball: negative radius");
  VertexSet out;
  for (Vertex w = 0; w < dim.n(); ++w)
    if (parity(w) == side_parity && hamming(v, w) <= r) out.verts.push_back(w);
  return out;
}

}  // namespace qcube
