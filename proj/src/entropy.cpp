#include "qcube/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qcube {

namespace {

void validate_probs(const std::vector<long double>& probs) {
  long double sum = 0;
  for (long double p : probs) {
    if (p < 0 || !std::isfinite(p))
      throw std::invalid_argument("distribution has a negative probability");
    sum += p;
  }
  if (std::fabs(sum - 1.0L) > 1e-12L)
    throw std::invalid_argument("distribution does not sum to 1");
}

long double entropy_terms(const std::vector<long double>& probs) {
  long double h = 0;
  for (long double p : probs)
    if (p > 0) h -= p * std::log2(p);
  return h;
}

// entropy of a grouping given positive integer weights
long double entropy_of_counts(const std::map<std::vector<uint8_t>, uint64_t>& groups,
                              uint64_t total) {
  long double h = 0;
  const long double w = static_cast<long double>(total);
  for (const auto& [key, cnt] : groups) {
    long double p = static_cast<long double>(cnt) / w;
    h -= p * std::log2(p);
  }
  return h;
}

using Key = std::vector<uint8_t>;

}  // namespace

long double entropy(const FiniteDistribution& dist) {
  validate_probs(dist.probs);
  return entropy_terms(dist.probs);
}

long double joint_entropy(const JointDistribution& joint) {
  validate_probs(joint.probs);
  return entropy_terms(joint.probs);
}

long double marginal_entropy_y(const JointDistribution& joint) {
  validate_probs(joint.probs);
  std::map<int, long double> py;
  for (size_t i = 0; i < joint.probs.size(); ++i)
    py[joint.outcomes[i].second] += joint.probs[i];
  long double h = 0;
  for (const auto& [y, p] : py)
    if (p > 0) h -= p * std::log2(p);
  return h;
}

long double conditional_entropy(const JointDistribution& joint) {
  if (joint.outcomes.size() != joint.probs.size())
    throw std::invalid_argument("joint: outcomes/probs length mismatch");
  validate_probs(joint.probs);
  std::map<int, long double> py;
  for (size_t i = 0; i < joint.probs.size(); ++i)
    py[joint.outcomes[i].second] += joint.probs[i];
  long double h = 0;
  for (size_t i = 0; i < joint.probs.size(); ++i) {
    const long double pxy = joint.probs[i];
    if (pxy <= 0) continue;
    const long double cond = pxy / py[joint.outcomes[i].second];
    h -= pxy * std::log2(cond);
  }
  return h;
}

ShearerResult shearer_check(const TupleDistribution& dist,
                            const CoverWeights& cover, int k,
                            long double tol) {
  validate_probs(dist.probs);
  for (const auto& t : dist.outcomes)
    if (static_cast<int>(t.size()) != k)
      throw std::invalid_argument("shearer: tuple length != k");
  std::vector<long double> coord_sum(k, 0);
  for (const auto& [subset, alpha] : cover.entries) {
    if (alpha < 0) throw std::invalid_argument("shearer: negative cover weight");
    for (int i : subset) {
      if (i < 0 || i >= k)
        throw std::invalid_argument("shearer: cover coordinate out of range");
      coord_sum[i] += alpha;
    }
  }
  for (int i = 0; i < k; ++i)
    if (std::fabs(coord_sum[i] - 1.0L) > 1e-9L)
      throw std::invalid_argument(
          "shearer: weights do not form a fractional cover");

  ShearerResult r;
  {
    std::map<std::vector<int>, long double> full;
    for (size_t i = 0; i < dist.probs.size(); ++i)
      full[dist.outcomes[i]] += dist.probs[i];
    for (const auto& [t, p] : full)
      if (p > 0) r.lhs -= p * std::log2(p);
  }
  for (const auto& [subset, alpha] : cover.entries) {
    if (alpha == 0) continue;
    std::map<std::vector<int>, long double> proj;
    for (size_t i = 0; i < dist.probs.size(); ++i) {
      std::vector<int> key;
      key.reserve(subset.size());
      for (int c : subset) key.push_back(dist.outcomes[i][c]);
      proj[key] += dist.probs[i];
    }
    long double h = 0;
    for (const auto& [t, p] : proj)
      if (p > 0) h -= p * std::log2(p);
    r.rhs += alpha * h;
  }
  r.holds = r.lhs <= r.rhs + tol;
  return r;
}

Ensemble Ensemble::uniform(CubeDim dim, std::vector<Coloring> colorings) {
  Ensemble e{dim, std::move(colorings), {}};
  e.weights.assign(e.support.size(), 1);
  return e;
}

uint64_t Ensemble::total_weight() const {
  uint64_t w = 0;
  for (uint64_t x : weights) w += x;
  return w;
}

namespace {

// grouped weights for the restriction of f to `verts` (ordered)
std::map<Key, uint64_t> group_restriction(const Ensemble& e,
                                          const std::vector<Vertex>& verts) {
  std::map<Key, uint64_t> groups;
  for (size_t i = 0; i < e.support.size(); ++i) {
    Key key;
    key.reserve(verts.size());
    for (Vertex v : verts) key.push_back(e.support[i].at(v));
    groups[key] += e.weights[i];
  }
  return groups;
}

Key color_image(const Coloring& f, const std::vector<Vertex>& verts) {
  std::set<uint8_t> s;
  for (Vertex v : verts) s.insert(f.at(v));
  return Key(s.begin(), s.end());
}

}  // namespace

long double restriction_entropy(const Ensemble& e, const VertexSet& verts) {
  if (e.support.empty()) throw std::invalid_argument("empty ensemble");
  return entropy_of_counts(group_restriction(e, verts.verts),
                           e.total_weight());
}

long double vertex_entropy(const Ensemble& e, Vertex v) {
  return restriction_entropy(e, VertexSet{{v}});
}

long double ensemble_entropy(const Ensemble& e) {
  if (e.support.empty()) throw std::invalid_argument("empty ensemble");
  std::vector<Vertex> all(e.dim.n());
  for (Vertex v = 0; v < e.dim.n(); ++v) all[v] = v;
  return entropy_of_counts(group_restriction(e, all), e.total_weight());
}

TuRecord t_u(const Ensemble& e, Vertex u, CubeDim dim) {
  if (parity(u) != 1)
    throw std::invalid_argument("t_u: applies to odd vertices only");
  if (e.support.empty()) throw std::invalid_argument("empty ensemble");
  std::vector<Vertex> nu;
  for (int i = 0; i < dim.d; ++i) nu.push_back(u ^ (Vertex{1} << i));
  std::sort(nu.begin(), nu.end());

  const uint64_t W = e.total_weight();
  std::map<Key, uint64_t> tuple_groups, image_groups, u_image_groups,
      tuple_image_groups;
  for (size_t i = 0; i < e.support.size(); ++i) {
    const Coloring& f = e.support[i];
    Key tup;
    for (Vertex v : nu) tup.push_back(f.at(v));
    Key img = color_image(f, nu);
    tuple_groups[tup] += e.weights[i];
    image_groups[img] += e.weights[i];
    Key ui = img;
    ui.push_back(255);  // separator
    ui.push_back(f.at(u));
    u_image_groups[ui] += e.weights[i];
    Key ti = img;
    ti.push_back(255);
    ti.insert(ti.end(), tup.begin(), tup.end());
    tuple_image_groups[ti] += e.weights[i];
  }
  TuRecord r;
  r.h_tuple = entropy_of_counts(tuple_groups, W);
  r.h_image = entropy_of_counts(image_groups, W);
  // the image is a function of the tuple, so H(tuple|image) = H(tuple)-H(image)
  const long double h_tuple_given_image =
      entropy_of_counts(tuple_image_groups, W) - r.h_image;
  r.h_u_given_image = entropy_of_counts(u_image_groups, W) - r.h_image;
  const long double d = dim.d;
  r.t = r.h_tuple / d + r.h_u_given_image;
  r.main_part = h_tuple_given_image / d + r.h_u_given_image;
  return r;
}

AuditRecord decomposition_audit(const Ensemble& e, const VertexSet& U,
                                const VertexSet& V, CubeDim dim,
                                const Config& cfg) {
  if (dim.d > 3)
    throw InstanceTooLarge(
        "instance too large: decomposition audit needs d <= 3");
  if (e.support.empty()) throw std::invalid_argument("empty ensemble");
  for (Vertex u : U.verts)
    if (parity(u) != 1) throw std::invalid_argument("audit: U must be odd-side");
  for (Vertex v : V.verts)
    if (parity(v) != 0) throw std::invalid_argument("audit: V must be even-side");

  AuditRecord r;
  r.lhs = ensemble_entropy(e);
  for (Vertex u : U.verts) r.t_sum += t_u(e, u, dim).t;
  for (Vertex u : full_side(dim, 1).verts) {
    if (U.contains(u)) continue;
    r.cond_sum += t_u(e, u, dim).h_u_given_image;
  }
  const long double d = dim.d;
  for (Vertex v : full_side(dim, 0).verts) {
    size_t du = 0;
    for (int i = 0; i < dim.d; ++i)
      if (U.contains(v ^ (Vertex{1} << i))) ++du;
    r.even_sum += (1.0L - du / d) * vertex_entropy(e, v);
  }
  r.rhs = r.t_sum + r.cond_sum + r.even_sum;
  r.slack = r.rhs - r.lhs;
  r.holds = r.slack >= -cfg.entropy_tol;

  r.v_colors_fixed = true;
  for (Vertex v : V.verts)
    if (vertex_entropy(e, v) > 0) r.v_colors_fixed = false;
  if (r.v_colors_fixed && !V.empty()) {
    const VertexSet o_minus_u = set_minus(full_side(dim, 1), U);
    const long double grad = static_cast<long double>(
        static_cast<uint64_t>(boundary_edges(V, o_minus_u, dim)));
    r.refined_even_bound =
        static_cast<long double>(dim.half()) - U.size() - grad / d;
  }
  return r;
}

std::string AuditRecord::to_json() const {
  std::ostringstream os;
  os.precision(15);
  os << "{\"lhs_entropy\": " << static_cast<double>(lhs)
     << ", \"t_sum\": " << static_cast<double>(t_sum)
     << ", \"cond_sum\": " << static_cast<double>(cond_sum)
     << ", \"even_sum\": " << static_cast<double>(even_sum)
     << ", \"rhs\": " << static_cast<double>(rhs)
     << ", \"slack\": " << static_cast<double>(slack)
     << ", \"holds\": " << (holds ? "true" : "false")
     << ", \"v_colors_fixed\": " << (v_colors_fixed ? "true" : "false");
  if (refined_even_bound)
    os << ", \"refined_even_bound\": "
       << static_cast<double>(*refined_even_bound);
  os << "}";
  return os.str();
}

}  // namespace qcube
