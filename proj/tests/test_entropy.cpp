#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qcube/entropy.hpp"
#include "qcube/phases.hpp"

using namespace qcube;

namespace {
constexpr long double kTol = 1e-9L;
}

TEST_CASE("entropy of basic distributions") {
  CHECK(entropy({{1.0L}}) == doctest::Approx(0.0));
  CHECK(entropy({{0.5L, 0.5L}}) == doctest::Approx(1.0));
  CHECK(entropy({{0.25L, 0.25L, 0.25L, 0.25L}}) == doctest::Approx(2.0));
  CHECK(entropy({{0.5L, 0.25L, 0.25L}}) == doctest::Approx(1.5));
  // zero atoms contribute nothing
  CHECK(entropy({{0.5L, 0.5L, 0.0L}}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(entropy({{0.7L, 0.7L}}), std::invalid_argument);
  CHECK_THROWS_AS(entropy({{1.5L, -0.5L}}), std::invalid_argument);
}

TEST_CASE("conditional entropy matches the chain rule") {
  // correlated pair: P(0,0)=1/2, P(1,0)=1/4, P(1,1)=1/4
  JointDistribution j;
  j.outcomes = {{0, 0}, {1, 0}, {1, 1}};
  j.probs = {0.5L, 0.25L, 0.25L};
  long double direct = conditional_entropy(j);
  long double chained = joint_entropy(j) - marginal_entropy_y(j);
  CHECK(std::fabs(direct - chained) < kTol);
  // conditioning cannot increase entropy below zero
  CHECK(direct >= 0);
  // independent pair: H(X|Y) = H(X)
  JointDistribution ind;
  ind.outcomes = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  ind.probs = {0.25L, 0.25L, 0.25L, 0.25L};
  CHECK(conditional_entropy(ind) == doctest::Approx(1.0));
}

TEST_CASE("shearer with the pair cover on three coordinates") {
  // uniform distribution over {(0,0,0),(1,1,1)}: H = 1
  TupleDistribution dist;
  dist.outcomes = {{0, 0, 0}, {1, 1, 1}};
  dist.probs = {0.5L, 0.5L};
  CoverWeights cover;
  cover.entries = {{{0, 1}, 0.5L}, {{1, 2}, 0.5L}, {{0, 2}, 0.5L}};
  ShearerResult r = shearer_check(dist, cover, 3);
  CHECK(r.holds);
  CHECK(r.lhs == doctest::Approx(1.0));
  CHECK(r.rhs == doctest::Approx(1.5));

  // independent uniform bits attain equality
  TupleDistribution indep;
  for (int x = 0; x < 8; ++x)
    indep.outcomes.push_back({x & 1, x >> 1 & 1, x >> 2 & 1});
  indep.probs.assign(8, 0.125L);
  ShearerResult eq = shearer_check(indep, cover, 3);
  CHECK(eq.holds);
  CHECK(std::fabs(eq.lhs - eq.rhs) < kTol);

  // a non-cover is rejected
  CoverWeights bad;
  bad.entries = {{{0, 1}, 0.5L}};
  CHECK_THROWS_AS(shearer_check(dist, bad, 3), std::invalid_argument);
}

TEST_CASE("uniform coloring ensemble entropies") {
  CubeDim dim(2);
  Ensemble e = Ensemble::uniform(dim, enumerate_colorings(dim, 4));
  CHECK(e.total_weight() == 84);
  // the support is exhaustive and distinct, so H(f) = log2 84
  CHECK(ensemble_entropy(e) == doctest::Approx(std::log2(84.0)));
  // single-vertex marginal is uniform over the four colors by symmetry
  for (Vertex v = 0; v < 4; ++v)
    CHECK(vertex_entropy(e, v) == doctest::Approx(2.0));
  // restriction entropy is monotone in the restriction
  CHECK(restriction_entropy(e, VertexSet({0})) <=
        restriction_entropy(e, VertexSet({0, 1})) + kTol);
  CHECK(restriction_entropy(e, full_side(dim, 0)) <= ensemble_entropy(e) + kTol);
}

TEST_CASE("T(u) records at d=2") {
  CubeDim dim(2);
  Ensemble e = Ensemble::uniform(dim, enumerate_colorings(dim, 4));
  CHECK_THROWS_AS(t_u(e, 0, dim), std::invalid_argument);  // even vertex
  for (Vertex u : full_side(dim, 1).verts) {
    TuRecord r = t_u(e, u, dim);
    CHECK(r.h_tuple >= r.h_image - kTol);  // image is a function of the tuple
    CHECK(r.t == doctest::Approx(r.h_tuple / 2 + r.h_u_given_image));
    CHECK(r.main_part <= 2.0L + kTol);  // log|c| + log(4-|c|) <= 2
    CHECK(r.main_part >= 0);
  }
}

TEST_CASE("decomposition audit at d=2 and d=3") {
  for (int d = 2; d <= 3; ++d) {
    CubeDim dim(d);
    Ensemble e = Ensemble::uniform(dim, enumerate_colorings(dim, 4));
    VertexSet U = full_side(dim, 1);  // all odd vertices
    AuditRecord r = decomposition_audit(e, U, VertexSet(), dim);
    CHECK(r.holds);
    CHECK(r.slack >= -kTol);
    CHECK(r.lhs == doctest::Approx(d == 2 ? std::log2(84.0)
                                          : std::log2(2652.0)));
    // with U = O the even sum vanishes
    CHECK(r.even_sum == doctest::Approx(0.0));

    // empty U: the bound degenerates to conditional + full even terms
    AuditRecord r0 = decomposition_audit(e, VertexSet(), VertexSet(), dim);
    CHECK(r0.holds);
  }
}

TEST_CASE("audit input validation") {
  CubeDim dim(2);
  Ensemble e = Ensemble::uniform(dim, enumerate_colorings(dim, 4));
  CHECK_THROWS_AS(decomposition_audit(e, VertexSet({0}), VertexSet(), dim),
                  std::invalid_argument);  // U must be odd-side
  CHECK_THROWS_AS(decomposition_audit(e, VertexSet(), VertexSet({1}), dim),
                  std::invalid_argument);  // V must be even-side
  Ensemble big{CubeDim(4), {}, {}};
  CHECK_THROWS_AS(decomposition_audit(big, VertexSet(), VertexSet(), CubeDim(4)),
                  InstanceTooLarge);
}

TEST_CASE("refined even bound when V colors are pinned") {
  // condition the d=2 ensemble on vertex 0 having color 1
  CubeDim dim(2);
  std::vector<Coloring> pinned;
  for (const auto& f : enumerate_colorings(dim, 4))
    if (f.at(0) == 1) pinned.push_back(f);
  Ensemble e = Ensemble::uniform(dim, pinned);
  VertexSet U({1});
  AuditRecord r = decomposition_audit(e, U, VertexSet({0}), dim);
  CHECK(r.v_colors_fixed);
  REQUIRE(r.refined_even_bound.has_value());
  // N/2 - |U| - |grad(V, O\U)|/d = 2 - 1 - 1/2
  CHECK(*r.refined_even_bound == doctest::Approx(0.5));
  CHECK(r.holds);
}

TEST_CASE("audit json") {
  CubeDim dim(2);
  Ensemble e = Ensemble::uniform(dim, enumerate_colorings(dim, 4));
  AuditRecord r = decomposition_audit(e, full_side(dim, 1), VertexSet(), dim);
  std::string j = r.to_json();
  CHECK(j.find("\"slack\"") != std::string::npos);
  CHECK(j.find("\"holds\": true") != std::string::npos);
}
