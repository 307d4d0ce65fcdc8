#include "doctest.h"

#include <vector>

#include "icint/errors.hpp"
#include "icint/experiments.hpp"
#include "icint/graph.hpp"
#include "icint/reference.hpp"
#include "icint/rng.hpp"
#include "icint/seed_selection.hpp"

using namespace icint;

namespace {

InfluenceGraph random_graph(rng::SplitMix& gen, std::size_t n,
                            std::size_t max_edges) {
  std::vector<RawEdge> edges;
  std::size_t want = gen.next_below(max_edges + 1);
  for (std::size_t t = 0; t < want; ++t) {
    NodeId u = static_cast<NodeId>(gen.next_below(n));
    NodeId v = static_cast<NodeId>(gen.next_below(n));
    if (u == v) continue;
    edges.push_back({u, v, gen.next_unit()});
  }
  std::vector<double> alphas;
  for (std::size_t i = 0; i < n; ++i) alphas.push_back(gen.next_unit());
  return InfluenceGraph(n, std::move(edges), std::move(alphas));
}

bool traces_equal(const SeedTrace& a, const SeedTrace& b) {
  return a.seeds == b.seeds && a.marginal_gain == b.marginal_gain &&
         a.cumulative_spread == b.cumulative_spread;
}

}  // namespace

TEST_CASE("chain picks the upstream node first") {
  InfluenceGraph g(2, {{0, 1, 1.0}}, {0.6, 0.2});
  SeedTrace t = greedy(g, 1, {12, 4000, DiffusionMode::ICInt});
  CHECK(t.seeds == std::vector<NodeId>{0});
  CHECK(t.marginal_gain[0] == doctest::Approx(0.48).epsilon(0.2));
}

TEST_CASE("org tree baseline selects the director first") {
  InfluenceGraph g = make_org_tree(0.0);
  SeedTrace t = greedy(g, 1, {7, 3200, DiffusionMode::ICInt});
  CHECK(t.seeds == std::vector<NodeId>{kOrgTreeD});
}

TEST_CASE("all-zero alphas degenerate to the id tie-break") {
  InfluenceGraph g(5, {{0, 1, 1.0}, {1, 2, 1.0}},
                   std::vector<double>(5, 0.0));
  SeedTrace t = greedy(g, 3, {3, 100, DiffusionMode::ICInt});
  CHECK(t.seeds == std::vector<NodeId>{0, 1, 2});
  for (double gain : t.marginal_gain) CHECK(gain == 0.0);
}

TEST_CASE("k validation") {
  InfluenceGraph g(2, {{0, 1, 0.5}}, {0.5, 0.5});
  SamplerConfig cfg{0, 10, DiffusionMode::ICInt};
  CHECK_THROWS_AS(greedy(g, 0, cfg), InvalidKError);
  CHECK_THROWS_AS(greedy(g, 3, cfg), InvalidKError);
  CHECK_THROWS_AS(lazy_greedy(g, 3, cfg), InvalidKError);
}

TEST_CASE("trace invariants: distinct seeds, non-decreasing cumulative") {
  rng::SplitMix gen(404);
  for (int t = 0; t < 10; ++t) {
    InfluenceGraph g = random_graph(gen, 12, 30);
    SeedTrace tr = greedy(g, 5, {gen.next_u64(), 200, DiffusionMode::ICInt});
    CHECK(tr.seeds.size() == 5);
    std::vector<NodeId> sorted = tr.seeds;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (std::size_t i = 1; i < tr.cumulative_spread.size(); ++i)
      CHECK(tr.cumulative_spread[i] >= tr.cumulative_spread[i - 1]);
    for (double gain : tr.marginal_gain) CHECK(gain >= 0.0);
  }
}

TEST_CASE("marginal gains are non-increasing on the fixed sample set") {
  rng::SplitMix gen(72);
  for (int t = 0; t < 10; ++t) {
    InfluenceGraph g = random_graph(gen, 10, 25);
    SeedTrace tr = greedy(g, 6, {gen.next_u64(), 400, DiffusionMode::ICInt});
    for (std::size_t i = 1; i < tr.marginal_gain.size(); ++i)
      CHECK(tr.marginal_gain[i] <= tr.marginal_gain[i - 1] + 1e-12);
  }
}

TEST_CASE("lazy and eager traces are byte-identical on 50 random instances") {
  rng::SplitMix gen(2024);
  for (int t = 0; t < 50; ++t) {
    InfluenceGraph g = random_graph(gen, 8, 20);
    SamplerConfig cfg{gen.next_u64(), 150, DiffusionMode::ICInt};
    std::size_t k = 1 + gen.next_below(5);
    SeedTrace eager = greedy(g, k, cfg);
    SeedTrace lazy = lazy_greedy(g, k, cfg);
    CHECK(traces_equal(eager, lazy));
    CHECK(lazy.evaluations <= eager.evaluations);
    CHECK(eager.evaluations <= k * g.num_nodes());
  }
}

TEST_CASE("lazy matches eager on the org tree at k=3") {
  InfluenceGraph g = make_org_tree(0.0);
  SamplerConfig cfg{5, 3200, DiffusionMode::ICInt};
  CHECK(traces_equal(greedy(g, 3, cfg), lazy_greedy(g, 3, cfg)));
}

TEST_CASE("serial reference pipeline agrees bit-for-bit") {
  rng::SplitMix gen(88);
  for (int t = 0; t < 10; ++t) {
    InfluenceGraph g = random_graph(gen, 8, 20);
    SamplerConfig cfg{gen.next_u64(), 120, DiffusionMode::ICInt};
    NodeSet seeds{0, 3};
    SpreadEstimate fast = estimate_spread(g, seeds, cfg);
    SpreadEstimate ref = reference_estimate_spread(g, seeds, cfg);
    CHECK(fast.mean == ref.mean);
    CHECK(fast.std_error == ref.std_error);
    CHECK(traces_equal(greedy(g, 3, cfg), reference_greedy(g, 3, cfg)));
  }
}

TEST_CASE("single-node ranking orders the chain and breaks ties by id") {
  InfluenceGraph chain(2, {{0, 1, 1.0}}, {0.6, 0.2});
  auto ranked = top_k_by_single_spread(chain, 2, {9, 2000,
                                                  DiffusionMode::ICInt});
  CHECK(ranked[0].first == 0);
  CHECK(ranked[1].first == 1);
  CHECK(ranked[1].second == 0.0);

  InfluenceGraph flat(4, {{2, 3, 1.0}}, std::vector<double>(4, 0.0));
  auto ties = top_k_by_single_spread(flat, 4, {9, 100, DiffusionMode::ICInt});
  for (NodeId v = 0; v < 4; ++v) CHECK(ties[v].first == v);
}

TEST_CASE("star hub ranks first under equal alphas") {
  InfluenceGraph star(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}},
                      std::vector<double>(4, 0.4));
  auto ranked = top_k_by_single_spread(star, 1, {3, 3000,
                                                 DiffusionMode::ICInt});
  CHECK(ranked[0].first == 0);
}

TEST_CASE("spread curve matches sequential estimates of seed prefixes") {
  InfluenceGraph g = make_org_tree(0.1);
  SamplerConfig cfg{17, 800, DiffusionMode::ICInt};
  SeedTrace tr = greedy(g, 3, cfg);
  auto curve = evaluate_spread_curve(g, tr.seeds, cfg);
  REQUIRE(curve.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(curve[i].mean == doctest::Approx(tr.cumulative_spread[i])
                               .epsilon(1e-12));
    CHECK(curve[i].std_error >= 0.0);
  }
}
