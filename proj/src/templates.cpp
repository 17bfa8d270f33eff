#include "qcube/templates.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace qcube {

namespace {
VertexSet union_of(const std::vector<VertexSet>& comps) {
  VertexSet u;
  for (const auto& c : comps) u = set_union(u, c);
  return u;
}
}  // namespace

Template decompose(const Coloring& f, const Config& cfg) {
  const CubeDim dim = f.dim();
  const PhaseReport rep = main_phase(f, cfg);
  if (!rep.phase)
    throw std::invalid_argument("decompose: coloring has no main phase");
  if (rep.ideal) throw std::invalid_argument("decompose: coloring is ideal");
  if (rep.phase->index != 0)
    throw std::invalid_argument(
        "decompose: main phase is " + rep.phase->name() + ", not 12|34");
  if (!rep.in_fstar)
    throw std::invalid_argument(
        "decompose: even-side flaw neighborhood is smaller than odd-side");

  Template t{dim};
  t.flaws = rep.flaws;
  const VertexSet xe = set_intersect(t.flaws, full_side(dim, 0));
  const VertexSet xo = set_intersect(t.flaws, full_side(dim, 1));

  for (const auto& comp : k_components(xe, 2, dim).components)
    (comp.size() > 1 ? t.A_comps : t.A_hat_comps).push_back(comp);
  t.A = union_of(t.A_comps);
  t.A_hat = union_of(t.A_hat_comps);
  t.G = neighborhood(t.A, dim);
  t.G_hat = neighborhood(t.A_hat, dim);
  t.R = set_minus(full_side(dim, 1), set_union(t.G, t.G_hat));

  const VertexSet xr = set_intersect(xo, t.R);
  const VertexSet n2 = second_neighborhood(set_union(t.G, t.G_hat), dim);
  for (const auto& comp : k_components(xr, 2, dim).components) {
    if (!disjoint(comp, n2))
      t.P_comps.push_back(comp);
    else if (comp.size() > 1)
      t.Pbar_comps.push_back(comp);
    else
      t.Phat_comps.push_back(comp);
  }
  t.P = union_of(t.P_comps);
  t.Pbar = union_of(t.Pbar_comps);
  t.Phat = union_of(t.Phat_comps);
  t.Q = neighborhood(t.P, dim);
  t.Qbar = neighborhood(t.Pbar, dim);
  t.Qhat = neighborhood(t.Phat, dim);

  t.cutoff = cfg.cutoff(dim.d);
  auto split = [&](const std::vector<VertexSet>& comps, VertexSet& small,
                   VertexSet& large, size_t* i_small) {
    size_t cnt = 0;
    for (const auto& c : comps) {
      const bool is_small =
          static_cast<long double>(neighborhood(c, dim).size()) < t.cutoff;
      if (is_small) {
        small = set_union(small, c);
        ++cnt;
      } else {
        large = set_union(large, c);
      }
    }
    if (i_small) *i_small = cnt;
  };
  split(t.A_comps, t.A_small, t.A_large, &t.i_A_small);
  split(t.P_comps, t.P_small, t.P_large, &t.i_P_small);
  split(t.Pbar_comps, t.Pbar_small, t.Pbar_large, &t.i_Pbar_small);

  t.b = t.A_large.empty() ? 0 : interior(t.A_large, dim).size();
  t.g = t.G.size();
  t.g_hat = t.G_hat.size();

  const long double d = dim.d;
  t.exceptional = t.A.empty() && t.Pbar.empty() && t.P.empty() &&
                  static_cast<long double>(t.g_hat) <= d * d / std::log2(d);
  return t;
}

MonochromeReport verify_monochromatic(const Coloring& f, const Template& t) {
  MonochromeReport rep;
  if (flaw_set(f, principal_phase()) != t.flaws) {
    rep.all_pass = false;
    rep.checks.push_back({"template/coloring mismatch", false});
    return rep;
  }
  auto check_comp = [&](const VertexSet& z, const std::string& label) {
    std::set<uint8_t> zc, nc;
    for (Vertex v : z.verts) zc.insert(f.at(v));
    for (Vertex v : neighborhood(z, t.dim).verts) nc.insert(f.at(v));
    bool pass = zc.size() == 1 && nc.size() == 1;
    if (pass) {
      // bad odd component under phase 12|34 carries a color of {1,2} and
      // forces the swapped color on its (good) neighborhood
      uint8_t c = *zc.begin();
      uint8_t expect = c == 1 ? 2 : 1;
      pass = (c == 1 || c == 2) && *nc.begin() == expect;
    }
    rep.checks.push_back({label, pass});
    rep.all_pass = rep.all_pass && pass;
  };
  for (size_t i = 0; i < t.Pbar_comps.size(); ++i)
    check_comp(t.Pbar_comps[i], "Pbar[" + std::to_string(i) + "]");
  for (size_t i = 0; i < t.Phat_comps.size(); ++i)
    check_comp(t.Phat_comps[i], "Phat[" + std::to_string(i) + "]");
  for (size_t i = 0; i < t.P_comps.size(); ++i) {
    const bool small =
        static_cast<long double>(neighborhood(t.P_comps[i], t.dim).size()) <
        t.cutoff;
    if (small) check_comp(t.P_comps[i], "P_small[" + std::to_string(i) + "]");
  }
  return rep;
}

SFVerdict verify_SF(const SFPair& pair, const Template& t, CubeDim dim) {
  bool known = false;
  for (const auto& c : t.P_comps) known = known || c == pair.target_component;
  if (!known)
    throw std::invalid_argument(
        "verify_SF: target_component is not a P component of the template");
  const VertexSet& pi = pair.target_component;
  const VertexSet qi = neighborhood(pi, dim);
  SFVerdict v;
  v.containment =
      is_subset(closure(pi, dim), pair.S) && is_subset(pair.F, qi);
  const long double mindeg =
      dim.d - dim.d / std::log2(static_cast<long double>(dim.d));
  v.min_degree = true;
  for (Vertex u : pair.S.verts) {
    size_t deg = 0;
    for (int i = 0; i < dim.d; ++i)
      if (pair.F.contains(u ^ (Vertex{1} << i))) ++deg;
    if (static_cast<long double>(deg) < mindeg) {
      v.min_degree = false;
      break;
    }
  }
  const VertexSet q_small = neighborhood(t.P_small, dim);
  v.separation = disjoint(pair.S, set_union(t.G, t.G_hat)) &&
                 disjoint(pair.F, set_union(set_union(t.Qbar, t.Qhat), q_small));
  return v;
}

SFPair canonical_sf_pair(const Template& t, const VertexSet& p_comp,
                         CubeDim dim) {
  SFPair out;
  out.target_component = p_comp;
  out.S = set_minus(closure(p_comp, dim), set_union(t.G, t.G_hat));
  out.F = neighborhood(p_comp, dim);
  return out;
}

CostLedger template_cost_ledger(const Template& t, CubeDim dim,
                                const Config& cfg) {
  const long double d = dim.d;
  const long double logd = std::log2(d);
  const long double half = static_cast<long double>(dim.half());
  const long double zeta = cfg.zeta, C = cfg.big_o_const;
  const long double gbar = static_cast<long double>(t.g_bar());

  const long double a_s = t.A_small.size(), pbar_s = t.Pbar_small.size(),
                    p_s = t.P_small.size();
  const long double a_hat = t.A_hat.size(), p_hat = t.Phat.size();
  const long double g_s = t.A_small.empty()
                              ? 0
                              : neighborhood(t.A_small, dim).size();
  const long double g_l = t.A_large.empty()
                              ? 0
                              : neighborhood(t.A_large, dim).size();
  const long double q_s =
      t.P_small.empty() ? 0 : neighborhood(t.P_small, dim).size();
  const long double q_l =
      t.P_large.empty() ? 0 : neighborhood(t.P_large, dim).size();
  const long double qbar_s =
      t.Pbar_small.empty() ? 0 : neighborhood(t.Pbar_small, dim).size();
  const long double qbar_l =
      t.Pbar_large.empty() ? 0 : neighborhood(t.Pbar_large, dim).size();
  const long double qbar = t.Qbar.size(), qhat = t.Qhat.size();

  auto log2_binom = [](uint64_t n, uint64_t k) -> long double {
    const BigCount b = binomial(n, k);
    return b <= 1 ? 0.0L : log2_big(b);
  };

  // canonical S and F: closures resp. neighborhoods of the large P pieces
  VertexSet S, F;
  for (const auto& c : t.P_comps) {
    if (static_cast<long double>(neighborhood(c, dim).size()) < t.cutoff)
      continue;
    S = set_union(S, set_minus(closure(c, dim), set_union(t.G, t.G_hat)));
    F = set_union(F, neighborhood(c, dim));
  }
  const long double s = S.size();
  const VertexSet q_small_set = neighborhood(t.P_small, dim);
  // Q_small and F live on the even side, R on the odd side, so the pairs
  // are disjoint as boundary_edges requires
  const long double grad_qs_R = static_cast<long double>(
      static_cast<uint64_t>(boundary_edges(q_small_set, t.R, dim)));
  const long double grad_F_R =
      static_cast<long double>(static_cast<uint64_t>(boundary_edges(F, t.R, dim)));

  CostLedger ledger;
  ledger.emplace_back("size_params", gbar > 0 ? C * std::log2(gbar) : 0.0L);
  ledger.emplace_back("A_hat",
                      log2_binom(dim.half(), static_cast<uint64_t>(a_hat)));
  ledger.emplace_back("A_small", t.i_A_small * (d - 1) + C * a_s * logd);
  ledger.emplace_back("P_hat",
                      log2_binom(dim.half(), static_cast<uint64_t>(p_hat)));
  ledger.emplace_back("Pbar_small",
                      t.i_Pbar_small * (d - 1) + C * pbar_s * logd);
  ledger.emplace_back(
      "P_small",
      t.i_P_small == 0
          ? 0.0L
          : t.i_P_small * std::log2(std::exp(1.0L) * gbar * d * d /
                                    t.i_P_small) +
                C * p_s * logd);
  ledger.emplace_back("A_large",
                      g_l == 0 ? 0.0L : g_l - t.b - zeta * g_l / logd);
  ledger.emplace_back("Qbar_large",
                      qbar_l == 0 ? 0.0L : qbar_l - zeta * qbar_l / logd);
  ledger.emplace_back("SF_pairs", C * q_l * logd * logd / d);
  ledger.emplace_back("cheap_colors",
                      static_cast<long double>(t.P_comps.size() +
                                               t.Pbar_comps.size()) +
                          p_hat);
  // color-stage sums, reported as deltas from the trivial one-bit-per-vertex
  // baseline (so an empty template reads all zero)
  ledger.emplace_back("color_T_sum_delta",
                      t.g + t.b + t.g_hat + (gbar > 0 ? C * gbar / d : 0.0L) -
                          (t.g + t.g_hat + t.b));
  ledger.emplace_back("color_single_sum_delta",
                      s * std::log2(3.0L) - (gbar + s));
  ledger.emplace_back("color_even_sum_delta",
                      -(gbar + qbar + qhat + grad_qs_R / d + grad_F_R / d));
  ledger.emplace_back(
      "stage_total_delta",
      -(static_cast<long double>(t.g_hat) + qhat + g_s + g_l - t.b + qbar_s +
        qbar_l) +
          s * (std::log2(3.0L) - 1) -
          (grad_qs_R + grad_F_R) / d);
  return ledger;
}

static void json_set(std::ostringstream& os, const char* name,
                     const VertexSet& s, bool first = false) {
  if (!first) os << ", ";
  os << '"' << name << "\": [";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s.verts[i];
  os << ']';
}

std::string Template::to_json() const {
  std::ostringstream os;
  os << '{';
  json_set(os, "X", flaws, true);
  json_set(os, "A", A);
  json_set(os, "A_hat", A_hat);
  json_set(os, "G", G);
  json_set(os, "G_hat", G_hat);
  json_set(os, "R", R);
  json_set(os, "P", P);
  json_set(os, "Pbar", Pbar);
  json_set(os, "Phat", Phat);
  json_set(os, "Q", Q);
  json_set(os, "Qbar", Qbar);
  json_set(os, "Qhat", Qhat);
  json_set(os, "A_small", A_small);
  json_set(os, "A_large", A_large);
  json_set(os, "P_small", P_small);
  json_set(os, "P_large", P_large);
  json_set(os, "Pbar_small", Pbar_small);
  json_set(os, "Pbar_large", Pbar_large);
  os << ", \"cutoff\": " << static_cast<double>(cutoff)
     << ", \"i_A_small\": " << i_A_small << ", \"i_P_small\": " << i_P_small
     << ", \"i_Pbar_small\": " << i_Pbar_small << ", \"b\": " << b
     << ", \"g\": " << g << ", \"g_hat\": " << g_hat
     << ", \"exceptional\": " << (exceptional ? "true" : "false") << '}';
  return os.str();
}

std::string cost_ledger_json(const CostLedger& ledger) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < ledger.size(); ++i)
    os << (i ? ", " : "") << '"' << ledger[i].first
       << "\": " << static_cast<double>(ledger[i].second);
  os << '}';
  return os.str();
}

}  // namespace qcube
