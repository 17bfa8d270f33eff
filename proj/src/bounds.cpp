#include "qcube/bounds.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <set>

namespace qcube {

namespace {
const long double kE = 2.718281828459045235360287471352662498L;

// all subsets of `pool` of size `want`, visited in lexicographic order
template <class Fn>
void for_each_subset(const std::vector<Vertex>& pool, size_t want, Fn&& fn) {
  std::vector<size_t> idx(want);
  for (size_t i = 0; i < want; ++i) idx[i] = i;
  if (want > pool.size()) return;
  while (true) {
    std::vector<Vertex> sub(want);
    for (size_t i = 0; i < want; ++i) sub[i] = pool[idx[i]];
    fn(sub);
    size_t i = want;
    while (i > 0 && idx[i - 1] == pool.size() - want + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < want; ++j) idx[j] = idx[j - 1] + 1;
  }
}
}  // namespace

BigCount compositions_count(uint64_t m) {
  if (m < 1) throw std::invalid_argument("compositions_count: m >= 1");
  return pow2(m - 1);
}

BigCount compositions_count_exhaustive(uint64_t m) {
  if (m < 1 || m > 20)
    throw std::invalid_argument("compositions_count_exhaustive: 1 <= m <= 20");
  // recursive generation: first part 1..m, then compose the rest
  std::vector<BigCount> memo(m + 1, 0);
  memo[0] = 1;
  for (uint64_t s = 1; s <= m; ++s)
    for (uint64_t first = 1; first <= s; ++first) memo[s] += memo[s - first];
  return memo[m];
}

BoundedCompositions compositions_bounded(uint64_t m, uint64_t b) {
  if (b < 1 || 2 * b > m)
    throw std::invalid_argument("compositions_bounded: need 1 <= b <= m/2");
  BoundedCompositions out;
  out.count = 0;
  for (uint64_t i = 0; i < b; ++i) out.count += binomial(m - 1, i);
  out.bound_log2 =
      b * std::log2(kE * static_cast<long double>(m) / b);
  out.below_bound = log2_big(out.count) < out.bound_log2;
  return out;
}

ConnectedSubsetReport connected_subsets(CubeDim dim, Vertex root, uint64_t n,
                                        LinkageGraph linkage) {
  if (dim.d > 4 || n > 5)
    throw InstanceTooLarge(
        "instance too large: connected-subset enumeration needs d<=4, n<=5");
  if (n < 1) throw std::invalid_argument("connected_subsets: n >= 1");
  const int max_dist = linkage == LinkageGraph::Adjacency ? 1 : 2;
  // vertices of the auxiliary graph: the whole cube for adjacency, the
  // root's parity class for 2-linkage
  std::vector<Vertex> verts;
  for (Vertex v = 0; v < dim.n(); ++v)
    if (max_dist == 1 || parity(v) == parity(root)) verts.push_back(v);

  // canonical connected-subset enumeration: grow from the root, allowing
  // each new vertex only from the frontier of already-chosen ones, and
  // deduplicate via a sorted-set register
  std::set<std::vector<Vertex>> seen;
  std::vector<Vertex> cur{root};
  BigCount count = 0;
  auto rec = [&](auto&& self) -> void {
    std::vector<Vertex> key = cur;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    if (key.size() == n) {
      ++count;
      return;
    }
    for (Vertex w : verts) {
      if (std::find(cur.begin(), cur.end(), w) != cur.end()) continue;
      bool adjacent = false;
      for (Vertex u : cur)
        if (u != w && hamming(u, w) <= max_dist) { adjacent = true; break; }
      if (!adjacent) continue;
      cur.push_back(w);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);

  ConnectedSubsetReport out;
  out.count = count;
  out.delta = linkage == LinkageGraph::Adjacency
                  ? static_cast<uint64_t>(dim.d)
                  : static_cast<uint64_t>(dim.d) * dim.d;
  out.tree_bound_log2 =
      n * std::log2(kE * static_cast<long double>(out.delta));
  out.below_bound =
      count == 0 || log2_big(out.count) <= out.tree_bound_log2;
  return out;
}

RootedCensus rooted_two_linked_census(CubeDim dim, const VertexSet& Y,
                                      uint64_t x, uint64_t b,
                                      const Config& cfg) {
  if (dim.d > 3)
    throw InstanceTooLarge("instance too large: rooted census needs d <= 3");
  if (x < 1 || b < 1)
    throw std::invalid_argument("rooted_two_linked_census: x, b >= 1");
  const std::vector<Vertex> evens = full_side(dim, 0).verts;
  BigCount count = 0;
  for_each_subset(evens, x, [&](const std::vector<Vertex>& sub) {
    VertexSet X(sub);
    auto comps = k_components(X, 2, dim);
    if (comps.count() > b) return;
    for (const auto& c : comps.components)
      if (disjoint(c, Y)) return;
    ++count;
  });
  RootedCensus out;
  out.count = count;
  out.bound_log2 = log2_big(binomial(Y.size(), b)) +
                   cfg.linkage_exponent * x *
                       std::log2(static_cast<long double>(dim.d));
  return out;
}

MinBoundaryReport min_vertex_boundary(CubeDim dim, uint64_t a,
                                      int side_parity) {
  if (a < 1) throw std::invalid_argument("min_vertex_boundary: a >= 1");
  MinBoundaryReport out;
  const std::vector<Vertex> verts = full_side(dim, side_parity).verts;
  if (a > verts.size())
    throw std::invalid_argument("min_vertex_boundary: a exceeds side size");

  // canonical sandwiched sets about one center (the cube is vertex-transitive
  // within a side): ball of radius l plus a subset of the radius-(l+2) sphere
  const Vertex center = side_parity == 0 ? 0 : 1;
  uint64_t best_ball = UINT64_MAX;
  for (int l = 0; l <= dim.d; l += 2) {
    std::vector<Vertex> ball, sphere;
    for (Vertex v : verts) {
      int rho = hamming(center, v);
      if (rho <= l)
        ball.push_back(v);
      else if (rho == l + 2)
        sphere.push_back(v);
    }
    if (ball.size() > a || ball.size() + sphere.size() < a) continue;
    for_each_subset(sphere, a - ball.size(), [&](const std::vector<Vertex>& ex) {
      std::vector<Vertex> all = ball;
      all.insert(all.end(), ex.begin(), ex.end());
      VertexSet A(all);
      uint64_t nb = neighborhood(A, dim).size();
      if (nb < best_ball) {
        best_ball = nb;
        out.ball_sample = A;
      }
    });
  }
  out.ball_value = best_ball;

  const bool exhaustive = dim.d <= 4 && a <= 8;
  if (exhaustive) {
    uint64_t best = UINT64_MAX;
    for_each_subset(verts, a, [&](const std::vector<Vertex>& sub) {
      VertexSet A(sub);
      uint64_t nb = neighborhood(A, dim).size();
      if (nb < best) {
        best = nb;
        out.argmin_sample = A;
      }
    });
    out.min = best;
  }
  return out;
}

std::vector<std::tuple<uint64_t, uint64_t, BigCount>> sapozhenko_table(
    CubeDim dim) {
  if (dim.d > 3)
    throw InstanceTooLarge("instance too large: family census needs d <= 3");
  std::map<std::pair<uint64_t, uint64_t>, BigCount> table;
  const std::vector<Vertex> evens = full_side(dim, 0).verts;
  for (uint64_t r = 1; r <= evens.size(); ++r) {
    for_each_subset(evens, r, [&](const std::vector<Vertex>& sub) {
      VertexSet A(sub);
      if (k_components(A, 2, dim).count() != 1) return;  // must be 2-linked
      uint64_t g = neighborhood(A, dim).size();
      uint64_t b = interior(A, dim).size();
      table[{g, b}] += 1;
    });
  }
  std::vector<std::tuple<uint64_t, uint64_t, BigCount>> out;
  for (const auto& [gb, c] : table) out.emplace_back(gb.first, gb.second, c);
  return out;
}

SapozhenkoCensus sapozhenko_census(CubeDim dim, uint64_t g,
                                   std::optional<uint64_t> b_opt,
                                   const Config& cfg) {
  const auto table = sapozhenko_table(dim);
  SapozhenkoCensus out;
  out.count_G = 0;
  if (b_opt) out.count_H = 0;
  for (const auto& [tg, tb, c] : table) {
    if (tg != g) continue;
    out.count_G += c;
    if (b_opt && tb == *b_opt) *out.count_H += c;
  }
  const long double logd = std::log2(static_cast<long double>(dim.d));
  out.g_bound_log2 = static_cast<long double>(g) - cfg.zeta * g / logd;
  if (b_opt)
    out.h_bound_log2 = dim.d + static_cast<long double>(g) -
                       static_cast<long double>(*b_opt) - cfg.zeta * g / logd;
  return out;
}

}  // namespace qcube
