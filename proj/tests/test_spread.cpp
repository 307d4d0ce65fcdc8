#include "doctest.h"

#include <cmath>
#include <vector>

#include "icint/errors.hpp"
#include "icint/graph.hpp"
#include "icint/rng.hpp"
#include "icint/sampling.hpp"
#include "icint/spread.hpp"

using namespace icint;

namespace {

InfluenceGraph chain_uv() {
  return InfluenceGraph(2, {{0, 1, 1.0}}, {0.6, 0.2});
}

// Random graph small enough for the enumeration oracle.
InfluenceGraph random_small_graph(rng::SplitMix& gen, std::size_t n = 4,
                                  std::size_t max_edges = 8) {
  std::vector<RawEdge> edges;
  std::size_t want = gen.next_below(max_edges + 1);
  for (std::size_t t = 0; t < want; ++t) {
    NodeId u = static_cast<NodeId>(gen.next_below(n));
    NodeId v = static_cast<NodeId>(gen.next_below(n));
    if (u == v) continue;
    bool dup = false;
    for (const RawEdge& e : edges) dup |= (e.src == u && e.dst == v);
    if (dup) continue;  // duplicates merge by sum and could exceed 1
    edges.push_back({u, v, gen.next_unit()});
  }
  std::vector<double> alphas;
  for (std::size_t i = 0; i < n; ++i) alphas.push_back(gen.next_unit());
  return InfluenceGraph(n, std::move(edges), std::move(alphas));
}

NodeSet subset_of(std::size_t n, unsigned mask) {
  NodeSet s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1u << i)) s.push_back(static_cast<NodeId>(i));
  return s;
}

}  // namespace

TEST_CASE("exact spread on the 2-node chain is 0.48") {
  CHECK(exact_spread(chain_uv(), {0}, DiffusionMode::ICInt) ==
        doctest::Approx(0.48).epsilon(1e-12));
}

TEST_CASE("exact spread on the 2-leaf star is 0.5") {
  InfluenceGraph g(3, {{0, 1, 1.0}, {0, 2, 1.0}}, {0.5, 0.5, 0.5});
  CHECK(exact_spread(g, {0}, DiffusionMode::ICInt) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("empty seed set has zero spread") {
  CHECK(exact_spread(chain_uv(), {}, DiffusionMode::ICInt) == 0.0);
  CHECK(exact_spread(chain_uv(), {}, DiffusionMode::PlainIC) == 0.0);
  SamplerConfig cfg{0, 100, DiffusionMode::ICInt};
  CHECK(estimate_spread(chain_uv(), {}, cfg).mean == 0.0);
}

TEST_CASE("all-zero and all-one alphas kill the intrinsic objective") {
  rng::SplitMix gen(21);
  for (int t = 0; t < 10; ++t) {
    InfluenceGraph base = random_small_graph(gen);
    for (double a : {0.0, 1.0}) {
      InfluenceGraph g = with_alphas(
          base, std::vector<double>(base.num_nodes(), a));
      for (unsigned mask = 0; mask < 16; ++mask)
        CHECK(exact_spread(g, subset_of(4, mask), DiffusionMode::ICInt) ==
              0.0);
    }
  }
}

TEST_CASE("plain IC on the chain and on the full seed set") {
  InfluenceGraph g(2, {{0, 1, 1.0}}, {0.0, 0.0});
  CHECK(exact_spread(g, {0}, DiffusionMode::PlainIC) == 1.0);
  CHECK(exact_spread(g, {0, 1}, DiffusionMode::PlainIC) == 0.0);
  SamplerConfig cfg{5, 200, DiffusionMode::PlainIC};
  CHECK(estimate_spread_ic(g, {0}, cfg).mean == 1.0);
}

TEST_CASE("Monte Carlo estimate agrees with the oracle at 4 standard errors") {
  rng::SplitMix gen(77);
  for (int t = 0; t < 20; ++t) {
    InfluenceGraph g = random_small_graph(gen);
    NodeSet seeds = subset_of(4, static_cast<unsigned>(gen.next_below(16)));
    for (DiffusionMode mode :
         {DiffusionMode::ICInt, DiffusionMode::PlainIC}) {
      SamplerConfig cfg{gen.next_u64(), 10000, mode};
      SpreadEstimate est = estimate_spread(g, seeds, cfg);
      double exact = exact_spread(g, seeds, mode);
      double tol = 4.0 * est.std_error + 1e-12;
      CHECK(std::abs(est.mean - exact) <= tol);
    }
  }
}

TEST_CASE("IC dominates IC-Int for single seeds") {
  // Only guaranteed for singletons: for larger S the two modes exclude
  // different node sets from the count (IC-Int omits only the intrinsically
  // activated seeds), so e.g. S = V gives 0 under IC but can stay positive
  // under IC-Int. The curve-level dominance check lives in the acceptance
  // suite, where seed counts are small relative to the graph.
  rng::SplitMix gen(31);
  for (int t = 0; t < 20; ++t) {
    InfluenceGraph g = random_small_graph(gen);
    for (NodeId v = 0; v < 4; ++v)
      CHECK(exact_spread(g, {v}, DiffusionMode::PlainIC) >=
            exact_spread(g, {v}, DiffusionMode::ICInt) - 1e-12);
  }
}

TEST_CASE("dummy-transformed plain IC reproduces IC-Int exactly") {
  rng::SplitMix gen(55);
  for (int t = 0; t < 50; ++t) {
    InfluenceGraph g = random_small_graph(gen);
    DummyGraph dg = dummy_transform(g);
    for (unsigned mask = 0; mask < 16; ++mask) {
      NodeSet seeds = subset_of(4, mask);
      CHECK(exact_spread(g, seeds, DiffusionMode::ICInt) ==
            exact_spread_dummy_seeded(dg, seeds));
    }
  }
}

TEST_CASE("submodularity holds exhaustively on random 4-node graphs") {
  rng::SplitMix gen(101);
  for (int t = 0; t < 25; ++t) {
    InfluenceGraph g = random_small_graph(gen);
    for (unsigned s = 0; s < 16; ++s)
      for (unsigned tmask = 0; tmask < 16; ++tmask) {
        if ((s & tmask) != s) continue;  // need S subset of T
        for (NodeId v = 0; v < 4; ++v) {
          if (tmask & (1u << v)) continue;
          double gs = exact_spread(g, subset_of(4, s | (1u << v)),
                                   DiffusionMode::ICInt) -
                      exact_spread(g, subset_of(4, s), DiffusionMode::ICInt);
          double gt = exact_spread(g, subset_of(4, tmask | (1u << v)),
                                   DiffusionMode::ICInt) -
                      exact_spread(g, subset_of(4, tmask),
                                   DiffusionMode::ICInt);
          CHECK(gs >= gt - 1e-9);
        }
      }
  }
}

TEST_CASE("one-hop engagement formula and DAG lower bound") {
  CHECK(one_hop_engagement(chain_uv(), 0) == doctest::Approx(0.48));
  CHECK(one_hop_engagement(chain_uv(), 1) == 0.0);
  InfluenceGraph zero_alpha(2, {{0, 1, 1.0}}, {0.0, 0.5});
  CHECK(one_hop_engagement(zero_alpha, 0) == 0.0);

  // three-node path: multi-hop terms only add on top of the one-hop value
  InfluenceGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {0.5, 0.5, 0.5});
  for (NodeId v = 0; v < 3; ++v)
    CHECK(one_hop_engagement(path, v) <=
          exact_spread(path, {v}, DiffusionMode::ICInt) + 1e-12);
}

TEST_CASE("oracle rejects instances beyond the enumeration budget") {
  std::vector<RawEdge> edges;
  for (NodeId u = 0; u < 6; ++u)
    for (NodeId v = 0; v < 6; ++v)
      if (u != v) edges.push_back({u, v, 0.5});
  InfluenceGraph g(6, std::move(edges), std::vector<double>(6, 0.5));
  CHECK_THROWS_AS(exact_spread(g, {0, 1, 2, 3, 4, 5}, DiffusionMode::ICInt),
                  BudgetExceededError);
}
