#include "qcube/phases.hpp"

#include <chrono>

#include <sstream>

#include "qcube/asymptotics.hpp"

namespace qcube {

std::string Phase::name() const {
  std::string s;
  s += static_cast<char>('0' + even_pair[0]);
  s += static_cast<char>('0' + even_pair[1]);
  s += '|';
  s += static_cast<char>('0' + odd_pair[0]);
  s += static_cast<char>('0' + odd_pair[1]);
  return s;
}

const std::array<Phase, 6>& all_phases() {
  static const std::array<Phase, 6> phases = [] {
    std::array<Phase, 6> out{};
    int idx = 0;
    for (uint8_t a = 1; a <= 4; ++a)
      for (uint8_t b = a + 1; b <= 4; ++b) {
        std::array<uint8_t, 2> c{a, b};
        std::array<uint8_t, 2> d{};
        int k = 0;
        for (uint8_t x = 1; x <= 4; ++x)
          if (x != a && x != b) d[k++] = x;
        out[idx] = Phase{c, d, idx};
        ++idx;
      }
    return out;
  }();
  return phases;
}

const Phase& principal_phase() { return all_phases()[0]; }

static bool in_pair(uint8_t c, const std::array<uint8_t, 2>& p) {
  return c == p[0] || c == p[1];
}

VertexSet flaw_set(const Coloring& f, const Phase& phase) {
  if (f.q() != 4)
    throw std::invalid_argument("flaw_set: phase machinery needs q = 4");
  VertexSet x;
  for (Vertex v = 0; v < f.dim().n(); ++v) {
    const auto& p = parity(v) == 0 ? phase.even_pair : phase.odd_pair;
    if (!in_pair(f.at(v), p)) x.verts.push_back(v);
  }
  return x;
}

PhaseReport main_phase(const Coloring& f, const Config& cfg) {
  if (f.q() != 4)
    throw std::invalid_argument("main_phase: phase machinery needs q = 4");
  PhaseReport r;
  r.threshold_used = cfg.threshold(f.dim().d);
  int best = 0;
  std::array<VertexSet, 6> flaws;
  for (int i = 0; i < 6; ++i) {
    flaws[i] = flaw_set(f, all_phases()[i]);
    r.all_flaw_counts[i] = flaws[i].size();
    if (flaws[i].size() < flaws[best].size()) best = i;  // ties keep first
  }
  if (static_cast<long double>(flaws[best].size()) < r.threshold_used) {
    r.phase = all_phases()[best];
    r.flaws = flaws[best];
    r.flaw_count = flaws[best].size();
    bool ideal = true;
    for (size_t i = 0; i < r.flaws.size() && ideal; ++i)
      for (size_t j = i + 1; j < r.flaws.size() && ideal; ++j)
        ideal = hamming(r.flaws.verts[i], r.flaws.verts[j]) >= 3;
    r.ideal = ideal;
    if (!ideal && best == 0) {
      VertexSet xe = set_intersect(r.flaws, full_side(f.dim(), 0));
      VertexSet xo = set_intersect(r.flaws, full_side(f.dim(), 1));
      r.in_fstar = neighborhood(xe, f.dim()).size() >=
                   neighborhood(xo, f.dim()).size();
    }
  }
  return r;
}

bool is_ideal(const Coloring& f, const Config& cfg) {
  return main_phase(f, cfg).ideal;
}

bool in_Fstar(const Coloring& f, const Config& cfg) {
  return main_phase(f, cfg).in_fstar;
}

IdealCensus ideal_census(CubeDim dim, const Config& cfg) {
  if (dim.d > 3)
    throw InstanceTooLarge("instance too large: ideal census needs d <= 3");
  auto t0 = std::chrono::steady_clock::now();
  BigCount n_ideal = 0;
  for_each_proper_coloring(dim, 4, [&](const Coloring& f) {
    if (main_phase(f, cfg).ideal) ++n_ideal;
  });
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  IdealCensus out;
  out.census = {n_ideal, "ideal-census", ms, dim.d, 4};
  out.upper_bound = ideal_upper_bound(dim).exact.value();
  return out;
}

std::vector<Coloring> fstar_census(CubeDim dim, const Config& cfg) {
  if (dim.d > 3)
    throw InstanceTooLarge("instance too large: F* census needs d <= 3");
  std::vector<Coloring> out;
  for_each_proper_coloring(dim, 4, [&](const Coloring& f) {
    if (in_Fstar(f, cfg)) out.push_back(f);
  });
  return out;
}

std::string PhaseReport::to_json() const {
  std::ostringstream os;
  os << "{\"phase\": ";
  if (phase)
    os << '"' << phase->name() << '"';
  else
    os << "null";
  os << ", \"flaw_count\": " << flaw_count << ", \"flaws\": [";
  for (size_t i = 0; i < flaws.size(); ++i)
    os << (i ? ", " : "") << flaws.verts[i];
  os << "], \"all_flaw_counts\": [";
  for (int i = 0; i < 6; ++i) os << (i ? ", " : "") << all_flaw_counts[i];
  os << "], \"ideal\": " << (ideal ? "true" : "false")
     << ", \"in_fstar\": " << (in_fstar ? "true" : "false") << "}";
  return os.str();
}

}  // namespace qcube
