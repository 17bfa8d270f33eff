#pragma once
// Template decomposition of a flawed coloring: even-side flaw components and
// their neighborhoods, the classification of the remaining odd-side flaws,
// small/large splits, and the derived verification and cost reports.

#include <string>
#include <vector>

#include "qcube/config.hpp"
#include "qcube/counting.hpp"
#include "qcube/cube.hpp"
#include "qcube/phases.hpp"

namespace qcube {

struct Template {
  CubeDim dim;
  VertexSet flaws;  // X

  // even side
  std::vector<VertexSet> A_comps;      // non-singleton 2-components of X&E
  std::vector<VertexSet> A_hat_comps;  // singleton 2-components of X&E
  VertexSet A, A_hat;                  // unions
  VertexSet G, G_hat;                  // N(A), N(A_hat)
  VertexSet R;                         // O minus (G union G_hat)

  // odd side, within R
  std::vector<VertexSet> P_comps;      // meet N^2(G union G_hat)
  std::vector<VertexSet> Pbar_comps;   // non-singletons that do not
  std::vector<VertexSet> Phat_comps;   // singletons that do not
  VertexSet P, Pbar, Phat;             // unions
  VertexSet Q, Qbar, Qhat;             // neighborhoods of the unions

  // small/large split (component small iff its neighborhood size < cutoff)
  long double cutoff = 0;
  VertexSet A_small, A_large;
  VertexSet P_small, P_large;
  VertexSet Pbar_small, Pbar_large;

  // scalar counts
  size_t i_A_small = 0;     // 2-components of A_small
  size_t i_P_small = 0;     // 2-components of P_small
  size_t i_Pbar_small = 0;  // 2-components of Pbar_small
  size_t b = 0;             // |B(A_large)|
  size_t g = 0, g_hat = 0;  // |G|, |G_hat|
  size_t g_bar() const { return g + g_hat; }

  // a = pbar = p = 0 and g_hat <= d^2/log d
  bool exceptional = false;

  std::string to_json() const;
};

// Candidate approximation pair for one of the template's P components.
struct SFPair {
  VertexSet S;
  VertexSet F;
  VertexSet target_component;  // one of the template's P_comps
};

// Requires f in F* (rejects otherwise, naming the failed condition).
Template decompose(const Coloring& f, const Config& cfg = {});

struct ComponentCheck {
  std::string label;
  bool pass;
};

struct MonochromeReport {
  bool all_pass = true;
  std::vector<ComponentCheck> checks;
};

// For every Pbar_i, Phat_i and small P_i: the component and its neighborhood
// are each monochromatic, and the component's color determines the
// neighborhood's color.
MonochromeReport verify_monochromatic(const Coloring& f, const Template& t);

struct SFVerdict {
  bool containment = false;   // S contains [P_i], F inside Q_i
  bool min_degree = false;    // deg_F(u) >= d - d/log2(d) for all u in S
  bool separation = false;    // S avoids G,G_hat; F avoids Qbar,Qhat,Q_small
  bool ok() const { return containment && min_degree && separation; }
};

SFVerdict verify_SF(const SFPair& pair, const Template& t, CubeDim dim);

// The canonical pair (S,F) = ([P_i] minus (G union G_hat), N(P_i)).
SFPair canonical_sf_pair(const Template& t, const VertexSet& p_comp,
                         CubeDim dim);

using CostLedger = std::vector<std::pair<std::string, long double>>;

// Evaluates every constant-free cost term with the configured O/Omega
// constants; reporting only, no inequality asserted.
CostLedger template_cost_ledger(const Template& t, CubeDim dim,
                                const Config& cfg = {});

std::string cost_ledger_json(const CostLedger& ledger);

}  // namespace qcube
