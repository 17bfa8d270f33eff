#include "qcube/counting.hpp"

#include <chrono>
#include <sstream>
#include <thread>

#include "qcube/kernels.hpp"

namespace qcube {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void check_enumeration_guard(CubeDim dim, int q) {
  if (q < 2 || q > 4)
    throw std::invalid_argument("palette size must be in [2,4]");
  const int max_d = (q == 2) ? 4 : 3;
  if (dim.d > max_d)
    throw InstanceTooLarge("instance too large: exhaustive enumeration of q=" +
                           std::to_string(q) + " colorings stops at d=" +
                           std::to_string(max_d));
}

// Shards [0,n) into `threads` row ranges and sums an exact per-range count.
uint64_t sharded_sum(size_t n, int threads,
                     const std::function<uint64_t(size_t, size_t)>& part) {
  if (threads <= 1 || n < 2) return part(0, n);
  std::vector<uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  const size_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    size_t lo = std::min(n, t * chunk), hi = std::min(n, (t + 1) * chunk);
    pool.emplace_back([&partial, &part, t, lo, hi] { partial[t] = part(lo, hi); });
  }
  for (auto& th : pool) th.join();
  uint64_t total = 0;
  for (uint64_t p : partial) total += p;
  return total;
}

}  // namespace

Coloring::Coloring(CubeDim dim, int q, std::vector<uint8_t> colors, bool check)
    : dim_(dim), q_(q), colors_(std::move(colors)) {
  if (q < 2) throw std::invalid_argument("palette size must be >= 2");
  if (colors_.size() != dim.n())
    throw std::invalid_argument("coloring length must be 2^d");
  for (uint8_t c : colors_)
    if (c < 1 || c > q)
      throw std::invalid_argument("color out of range [1,q]");
  if (check && !is_proper())
    throw std::invalid_argument("coloring is not proper");
}

Coloring::Coloring(CubeDim dim, int q, std::vector<uint8_t> colors)
    : Coloring(dim, q, std::move(colors), true) {}

Coloring Coloring::unchecked(CubeDim dim, int q, std::vector<uint8_t> colors) {
  return Coloring(dim, q, std::move(colors), false);
}

bool Coloring::is_proper() const {
  for (Vertex v = 0; v < dim_.n(); ++v)
    for (int i = 0; i < dim_.d; ++i) {
      Vertex w = v ^ (Vertex{1} << i);
      if (w > v) continue;
      if (colors_[v] == colors_[w]) return false;
    }
  return true;
}

std::string Coloring::to_digits() const {
  std::string s;
  s.reserve(colors_.size());
  for (uint8_t c : colors_) s.push_back(static_cast<char>('0' + c));
  return s;
}

Coloring Coloring::from_digits(CubeDim dim, int q, const std::string& digits) {
  std::vector<uint8_t> cols;
  cols.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '1' || ch > '9')
      throw std::invalid_argument("coloring digits must be 1..9");
    cols.push_back(static_cast<uint8_t>(ch - '0'));
  }
  return Coloring(dim, q, std::move(cols));
}

std::string CountResult::to_json() const {
  std::ostringstream os;
  os << "{\"d\": " << d << ", \"q\": " << q << ", \"method\": \"" << method
     << "\", \"value\": \"" << to_decimal(value) << "\", \"elapsed_ms\": "
     << elapsed_ms << "}";
  return os.str();
}

void for_each_proper_coloring(CubeDim dim, int q,
                              const std::function<void(const Coloring&)>& fn) {
  check_enumeration_guard(dim, q);
  const size_t n = dim.n();
  std::vector<uint8_t> col(n, 0);
  std::vector<std::vector<Vertex>> lower(n);  // neighbors with smaller index
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < dim.d; ++i) {
      Vertex w = v ^ (Vertex{1} << i);
      if (w < v) lower[v].push_back(w);
    }
  // iterative DFS in lexicographic order of the color sequence
  size_t v = 0;
  while (true) {
    if (v == n) {
      fn(Coloring::unchecked(dim, q, col));
      --v;
    }
    uint8_t next = col[v] + 1;
    col[v] = 0;
    bool advanced = false;
    for (uint8_t c = next; c <= q; ++c) {
      bool ok = true;
      for (Vertex w : lower[v])
        if (col[w] == c) { ok = false; break; }
      if (ok) {
        col[v] = c;
        ++v;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (v == 0) return;
      --v;
    }
  }
}

std::vector<Coloring> enumerate_colorings(CubeDim dim, int q) {
  std::vector<Coloring> out;
  for_each_proper_coloring(dim, q, [&](const Coloring& f) { out.push_back(f); });
  return out;
}

CountResult count_colorings_bruteforce(CubeDim dim, int q) {
  auto t0 = std::chrono::steady_clock::now();
  BigCount total = 0;
  for_each_proper_coloring(dim, q, [&](const Coloring&) { ++total; });
  return {total, "brute", ms_since(t0), dim.d, q};
}

uint16_t pack_coloring(const Coloring& f) {
  if (f.dim().n() > 8)
    throw std::invalid_argument("pack_coloring: needs 2^d <= 8 vertices");
  uint16_t code = 0;
  for (Vertex v = 0; v < f.dim().n(); ++v)
    code |= static_cast<uint16_t>((f.at(v) - 1) << (2 * v));
  return code;
}

CountResult count_colorings_product(CubeDim dim, int q, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  if (q < 2 || q > 4)
    throw std::invalid_argument("palette size must be in [2,4]");
  if (dim.d > 4)
    throw InstanceTooLarge(
        "instance too large: product method needs enumerable Q_{d-1}, d<=4");
  BigCount total = 0;
  if (dim.d == 1) {
    total = BigCount(q) * (q - 1);  // K_2
  } else {
    CubeDim sub(dim.d - 1);
    std::vector<uint16_t> codes;
    for_each_proper_coloring(sub, q, [&](const Coloring& f) {
      codes.push_back(pack_coloring(f));
    });
    const int lanes = static_cast<int>(sub.n());
    total = sharded_sum(codes.size(), threads, [&](size_t lo, size_t hi) {
      return kernels::count_fully_differing_pairs(codes.data(), codes.size(),
                                                  lanes, lo, hi);
    });
  }
  return {total, "product", ms_since(t0), dim.d, q};
}

CountResult count_independent_sets(CubeDim dim) {
  auto t0 = std::chrono::steady_clock::now();
  if (dim.d > 4)
    throw InstanceTooLarge("instance too large: i(Q_d) exhaustive scan, d<=4");
  const size_t n = dim.n();
  std::vector<uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < dim.d; ++i) adj[v] |= uint32_t{1} << (v ^ (Vertex{1} << i));
  BigCount total = 0;
  for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
    bool ok = true;
    for (uint64_t t = s; t; t &= t - 1) {
      Vertex v = static_cast<Vertex>(std::countr_zero(t));
      if (adj[v] & s) { ok = false; break; }
    }
    if (ok) ++total;
  }
  return {total, "exhaustive", ms_since(t0), dim.d, 0};
}

CountResult count_independent_sets_product(CubeDim dim, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  if (dim.d > 4)
    throw InstanceTooLarge("instance too large: i(Q_d) product recursion, d<=4");
  BigCount total = 0;
  if (dim.d == 1) {
    total = 3;
  } else {
    CubeDim sub(dim.d - 1);
    const size_t sn = sub.n();  // <= 8, masks fit uint16
    std::vector<uint32_t> adj(sn, 0);
    for (Vertex v = 0; v < sn; ++v)
      for (int i = 0; i < sub.d; ++i)
        adj[v] |= uint32_t{1} << (v ^ (Vertex{1} << i));
    std::vector<uint16_t> sets;
    for (uint32_t s = 0; s < (uint32_t{1} << sn); ++s) {
      bool ok = true;
      for (uint32_t t = s; t; t &= t - 1)
        if (adj[std::countr_zero(t)] & s) { ok = false; break; }
      if (ok) sets.push_back(static_cast<uint16_t>(s));
    }
    total = sharded_sum(sets.size(), threads, [&](size_t lo, size_t hi) {
      return kernels::count_disjoint_pairs(sets.data(), sets.size(), lo, hi);
    });
  }
  return {total, "product", ms_since(t0), dim.d, 0};
}

BigCount count_pure_colorings(CubeDim dim) { return pow2(dim.n()); }

}  // namespace qcube
