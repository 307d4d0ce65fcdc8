#include "doctest.h"

#include <cmath>
#include <vector>

#include "icint/centrality.hpp"
#include "icint/errors.hpp"
#include "icint/graph.hpp"
#include "icint/rng.hpp"
#include "icint/spread.hpp"

using namespace icint;

namespace {

InfluenceGraph chain(double a, double b) {
  return InfluenceGraph(2, {{0, 1, 1.0}}, {a, b});
}

}  // namespace

TEST_CASE("2-node chain closed form: C_A(u) = a(1-b)") {
  CentralityVector cv = solve_linear_system(chain(0.6, 0.2));
  REQUIRE(cv.converged);
  CHECK(cv.c_a[0] == doctest::Approx(0.48).epsilon(1e-12));
  CHECK(cv.c_a[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cv.residual < 1e-10);
}

TEST_CASE("3-node path closed form: C_A(u) = 0.375") {
  InfluenceGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {0.5, 0.5, 0.5});
  CentralityVector cv = solve_linear_system(g);
  REQUIRE(cv.converged);
  CHECK(cv.c_a[0] == doctest::Approx(0.375).epsilon(1e-12));
}

TEST_CASE("all-zero alphas give a zero centrality vector") {
  InfluenceGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {0.0, 0.0, 0.0});
  CentralityVector cv = solve_linear_system(g);
  REQUIRE(cv.converged);
  for (double c : cv.c_a) CHECK(c == 0.0);
  for (double p : cv.activation) CHECK(p == 0.0);
}

TEST_CASE("column residuals meet tolerance on random normalized graphs") {
  rng::SplitMix gen(5);
  for (int t = 0; t < 10; ++t) {
    std::vector<RawEdge> edges;
    std::size_t n = 6 + gen.next_below(6);
    for (std::size_t e = 0; e < 2 * n; ++e) {
      NodeId u = static_cast<NodeId>(gen.next_below(n));
      NodeId v = static_cast<NodeId>(gen.next_below(n));
      if (u != v) edges.push_back({u, v, 0.2 + gen.next_unit()});
    }
    std::vector<double> alphas;
    for (std::size_t i = 0; i < n; ++i)
      alphas.push_back(gen.next_in(0.05, 0.95));
    InfluenceGraph g = normalize_weighted_cascade(
        InfluenceGraph(n, std::move(edges), std::move(alphas)));
    CentralityVector cv = solve_linear_system(g);
    REQUIRE(cv.converged);
    CHECK(cv.residual < 1e-10);
    // contraction-rate iteration bound for alpha_min > 0
    double amin = *std::min_element(g.alphas().begin(), g.alphas().end());
    CHECK(cv.iterations <=
          static_cast<int>(std::ceil(std::log(1e-10) / std::log(1 - amin))) +
              1);
  }
}

TEST_CASE("star: C_A of the hub equals its one-hop engagement") {
  InfluenceGraph g(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}},
                   {0.7, 0.3, 0.5, 0.9});
  CentralityVector cv = solve_linear_system(g);
  REQUIRE(cv.converged);
  CHECK(cv.c_a[0] == doctest::Approx(one_hop_engagement(g, 0)).epsilon(1e-12));
}

TEST_CASE("nonlinear fixed point on the chain") {
  ActivationProbabilities ap = solve_nonlinear_fixed_point(chain(0.6, 0.2));
  REQUIRE(ap.converged);
  CHECK(ap.p[0] == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(ap.p[1] == doctest::Approx(0.68).epsilon(1e-10));
}

TEST_CASE("nonlinear fixed point vanishes with zero alphas") {
  InfluenceGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {0.0, 0.0, 0.0});
  ActivationProbabilities ap = solve_nonlinear_fixed_point(g);
  REQUIRE(ap.converged);
  for (double p : ap.p) CHECK(p == 0.0);
}

TEST_CASE("single in-edge graphs: nonlinear equals linear activation") {
  // every node has at most one in-edge, so the product collapses to one
  // factor and the two systems are the same
  InfluenceGraph g(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}},
                   {0.4, 0.3, 0.6, 0.2});
  CentralityVector cv = solve_linear_system(g);
  ActivationProbabilities ap = solve_nonlinear_fixed_point(g);
  REQUIRE(cv.converged);
  REQUIRE(ap.converged);
  for (NodeId v = 0; v < 4; ++v)
    CHECK(ap.p[v] == doctest::Approx(cv.activation[v]).epsilon(1e-9));
}

TEST_CASE("ranking orders the chain and ties break by id") {
  std::vector<NodeId> top = rank_by_centrality(chain(0.6, 0.2), 2);
  CHECK(top == std::vector<NodeId>{0, 1});

  InfluenceGraph flat(4, {{0, 1, 1.0}}, std::vector<double>(4, 0.0));
  CHECK(rank_by_centrality(flat, 3) == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("high-alpha hub outranks low-alpha leaves") {
  InfluenceGraph g(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}},
                   {0.9, 0.1, 0.1, 0.1});
  CHECK(rank_by_centrality(g, 1) == std::vector<NodeId>{0});
}

TEST_CASE("non-convergence surfaces as an error") {
  // slow contraction plus a starved iteration budget
  InfluenceGraph g(2, {{0, 1, 1.0}, {1, 0, 1.0}}, {0.01, 0.01});
  SolverOptions opts;
  opts.max_iter = 2;
  CentralityVector cv = solve_linear_system(g, opts);
  CHECK(!cv.converged);
  CHECK_THROWS_AS(rank_by_centrality(g, 1, opts), NotConvergedError);
}

TEST_CASE("derived iteration cap reflects the contraction rate") {
  InfluenceGraph g(2, {{0, 1, 1.0}}, {0.5, 0.5});
  CHECK(default_max_iter(g, 1e-10) >= 1000);
  InfluenceGraph z(2, {{0, 1, 1.0}}, {0.0, 0.5});
  CHECK(default_max_iter(z, 1e-10) == 100000);
}
