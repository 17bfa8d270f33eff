#pragma once
// Shannon entropy over finitely supported distributions, plus the
// coloring-ensemble decompositions the audits are built on.  Exhaustive
// uniform ensembles carry exact integer weights; entropies are evaluated in
// long double (64-bit mantissa) with a 1e-9 tolerance on inequalities.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcube/config.hpp"
#include "qcube/counting.hpp"
#include "qcube/cube.hpp"

namespace qcube {

struct FiniteDistribution {
  std::vector<long double> probs;  // nonnegative, sum to 1 within 1e-12
};

// H in bits; 0*log(1/0) is 0.  Throws on an invalid distribution.
long double entropy(const FiniteDistribution& dist);

// Joint distribution over labeled (x,y) pairs.
struct JointDistribution {
  std::vector<std::pair<int, int>> outcomes;  // distinct
  std::vector<long double> probs;
};

// H(X|Y), computed directly from the conditional decomposition (the chain
// rule H(X,Y)-H(Y) is the independent route used in tests).
long double conditional_entropy(const JointDistribution& joint);
long double joint_entropy(const JointDistribution& joint);
long double marginal_entropy_y(const JointDistribution& joint);

// Random vector over k coordinates.
struct TupleDistribution {
  std::vector<std::vector<int>> outcomes;  // distinct tuples, length k each
  std::vector<long double> probs;
};

// Fractional cover: subsets of [k] with weights, sum over A containing i = 1.
struct CoverWeights {
  std::vector<std::pair<std::vector<int>, long double>> entries;
};

struct ShearerResult {
  long double lhs = 0;  // H of the full vector
  long double rhs = 0;  // weighted sum of projected entropies
  bool holds = false;
};

ShearerResult shearer_check(const TupleDistribution& dist,
                            const CoverWeights& cover, int k,
                            long double tol = 1e-9L);

// Weighted family of proper colorings of one Q_d.
struct Ensemble {
  CubeDim dim;
  std::vector<Coloring> support;   // distinct
  std::vector<uint64_t> weights;   // positive

  static Ensemble uniform(CubeDim dim, std::vector<Coloring> colorings);
  uint64_t total_weight() const;
};

// Entropy of the restriction of f to the given vertices (ordered tuple).
long double restriction_entropy(const Ensemble& e, const VertexSet& verts);
// Entropy of the color at a single vertex.
long double vertex_entropy(const Ensemble& e, Vertex v);
// Entropy of the full coloring.
long double ensemble_entropy(const Ensemble& e);

struct TuRecord {
  long double t = 0;             // (1/d) H(f_{N_u}) + H(f_u | f(N_u))
  long double h_tuple = 0;       // H(f_{N_u}), the ordered color tuple
  long double h_image = 0;       // H(f(N_u)), the color set
  long double h_u_given_image = 0;
  long double main_part = 0;     // (1/d) H(f_{N_u}|f(N_u)) + H(f_u|f(N_u))
};

// u must be odd.
TuRecord t_u(const Ensemble& e, Vertex u, CubeDim dim);

struct AuditRecord {
  long double lhs = 0;       // H(f)
  long double t_sum = 0;     // sum over U of T(u)
  long double cond_sum = 0;  // sum over O minus U of H(f_u|f(N_u))
  long double even_sum = 0;  // sum over E of (1 - d_U(v)/d) H(f_v)
  long double rhs = 0;
  long double slack = 0;  // rhs - lhs
  bool holds = false;
  bool v_colors_fixed = false;
  std::optional<long double> refined_even_bound;  // N/2-|U|-|grad(V,O\U)|/d

  std::string to_json() const;
};

// Audits H(f) <= sum_U T(u) + sum_{O\U} H(f_u|f(N_u))
//              + sum_E (1-d_U(v)/d) H(f_v); U odd, V even; d <= 3.
AuditRecord decomposition_audit(const Ensemble& e, const VertexSet& U,
                                const VertexSet& V, CubeDim dim,
                                const Config& cfg = {});

}  // namespace qcube
