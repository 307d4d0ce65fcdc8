#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "icint/estimation.hpp"
#include "icint/graph.hpp"

using namespace icint;

namespace {

InteractionLog make_log(std::size_t n) {
  InteractionLog log;
  log.n_nodes = n;
  log.intrinsic_count.assign(n, 0);
  log.pair_count.resize(n);
  return log;
}

// In-memory provider for snowball fixtures.
class MapProvider : public FollowerProvider {
 public:
  MapProvider(std::vector<std::string> users,
              std::vector<std::vector<std::string>> adj)
      : users_(std::move(users)), adj_(std::move(adj)) {}

  std::vector<std::string> followers(const std::string& user) const override {
    for (std::size_t i = 0; i < users_.size(); ++i)
      if (users_[i] == user) return adj_[i];
    return {};
  }
  std::vector<std::string> universe() const override { return users_; }

 private:
  std::vector<std::string> users_;
  std::vector<std::vector<std::string>> adj_;
};

}  // namespace

TEST_CASE("alpha and weight point estimates") {
  InteractionLog log = make_log(3);
  log.intrinsic_count[0] = 5;
  log.pair_count[0] = {{1, 3}, {2, 2}};
  ParameterEstimate est = estimate_parameters(log);
  CHECK(est.alphas[0] == doctest::Approx(0.5).epsilon(1e-12));
  double w1 = -1, w2 = -1;
  for (const RawEdge& e : est.weights) {
    if (e.src == 1 && e.dst == 0) w1 = e.weight;
    if (e.src == 2 && e.dst == 0) w2 = e.weight;
  }
  CHECK(w1 == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(w2 == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("boundary estimates: pure spreader and pure creator") {
  InteractionLog log = make_log(2);
  log.pair_count[0] = {{1, 4}};  // k=0, gamma=4
  log.intrinsic_count[1] = 7;    // k=7, gamma=0
  ParameterEstimate est = estimate_parameters(log);
  CHECK(est.alphas[0] == 0.0);
  CHECK(est.alphas[1] == 1.0);
  for (const RawEdge& e : est.weights) CHECK(e.dst != 1);
  CHECK(est.no_activity.empty());
}

TEST_CASE("no-activity nodes get the default alpha and a flag") {
  InteractionLog log = make_log(2);
  log.intrinsic_count[0] = 1;
  ParameterEstimate est = estimate_parameters(log, 0.25);
  CHECK(est.no_activity == std::vector<NodeId>{1});
  CHECK(est.alphas[1] == 0.25);
}

TEST_CASE("alpha is monotone in both count arguments") {
  for (std::uint64_t k = 1; k < 6; ++k)
    for (std::uint64_t gamma = 1; gamma < 6; ++gamma) {
      auto alpha_of = [](std::uint64_t ki, std::uint64_t gi) {
        InteractionLog log = make_log(2);
        log.intrinsic_count[0] = ki;
        log.pair_count[0] = {{1, gi}};
        return estimate_parameters(log).alphas[0];
      };
      CHECK(alpha_of(k + 1, gamma) > alpha_of(k, gamma));
      CHECK(alpha_of(k, gamma + 1) < alpha_of(k, gamma));
    }
}

TEST_CASE("estimates always form a valid normalized graph") {
  InteractionLog log = make_log(4);
  log.intrinsic_count = {3, 0, 9, 0};
  log.pair_count[0] = {{1, 2}, {2, 1}};
  log.pair_count[1] = {{3, 5}};
  ParameterEstimate est = estimate_parameters(log);
  InfluenceGraph g(4, est.weights, est.alphas);
  CHECK(g.is_normalized());
}

TEST_CASE("interaction graph applies +1 smoothing before normalizing") {
  FollowEdgeList follows;
  follows.nodes = {"a", "b", "c"};
  follows.edges = {{1, 0}, {2, 0}};  // a follows b and c
  InteractionLog log = make_log(3);
  log.pair_count[0] = {{1, 3}, {2, 0}};
  InteractionGraphResult res = build_interaction_graph(follows, log);
  EdgeId ba = res.raw.find_edge(1, 0);
  EdgeId ca = res.raw.find_edge(2, 0);
  CHECK(res.raw.edge(ba).weight == 4.0);
  CHECK(res.raw.edge(ca).weight == 1.0);
  CHECK(res.graph.edge(ba).weight == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(res.graph.edge(ca).weight == doctest::Approx(0.2).epsilon(1e-12));
  // smoothed gamma = 5, k = 0
  CHECK(res.graph.alpha(0) == 0.0);
}

TEST_CASE("empty interaction log yields uniform rows") {
  FollowEdgeList follows;
  follows.nodes = {"a", "b", "c", "d"};
  follows.edges = {{1, 0}, {2, 0}, {3, 0}};
  InteractionGraphResult res =
      build_interaction_graph(follows, make_log(4));
  for (EdgeId e = 0; e < res.graph.num_edges(); ++e) {
    CHECK(res.raw.edge(e).weight == 1.0);
    CHECK(res.graph.edge(e).weight == doctest::Approx(1.0 / 3).epsilon(1e-12));
  }
}

TEST_CASE("interaction pairs without a follow edge are dropped and counted") {
  FollowEdgeList follows;
  follows.nodes = {"a", "b", "c"};
  follows.edges = {{1, 0}};
  InteractionLog log = make_log(3);
  log.pair_count[0] = {{1, 2}, {2, 9}};  // no a-follows-c edge
  InteractionGraphResult res = build_interaction_graph(follows, log);
  CHECK(res.dropped_pairs == 1);
  CHECK(res.graph.num_edges() == 1);
}

TEST_CASE("snowball expansion without pruning pressure reaches the target") {
  // mutual-follow ring: expanded arcs keep every member above the floor
  std::vector<std::string> users;
  std::vector<std::vector<std::string>> adj;
  for (int i = 0; i < 30; ++i) users.push_back("u" + std::to_string(i));
  for (int i = 0; i < 30; ++i)
    adj.push_back({users[(i + 29) % 30], users[(i + 1) % 30]});
  MapProvider provider(users, adj);
  SnowballConfig cfg;
  cfg.k_in = 2;
  cfg.k_out = 1;
  cfg.target_nodes = 10;
  FollowEdgeList out = snowball_sample(provider, "u0", cfg);
  CHECK(out.reached_target);
  CHECK(out.nodes.size() >= 10);
  // every retained node satisfies the out-degree floor
  std::vector<std::size_t> outdeg(out.nodes.size(), 0);
  for (auto& [u, v] : out.edges) ++outdeg[u];
  for (std::size_t d : outdeg) CHECK(d >= cfg.k_out);
}

TEST_CASE("recursive pruning removes weak nodes and their dependents") {
  // "w" has out-degree 1; removing it drops "x" below the floor too
  MapProvider provider({"s", "a", "b", "w", "x"},
                       {{"a", "b"},       // s's followers
                        {"s", "b"},       // a
                        {"s", "a"},       // b
                        {"x"},            // w: out-degree 1, pruned
                        {"w", "s"}});     // x: loses w in the recursive pass
  SnowballConfig cfg;
  cfg.k_in = 5;
  cfg.k_out = 2;
  cfg.target_nodes = 50;  // exhausts the provider instead
  cfg.max_rounds = 5;
  FollowEdgeList out = snowball_sample(provider, "s", cfg);
  CHECK(!out.reached_target);
  for (const std::string& n : out.nodes) {
    CHECK(n != "w");
  }
  std::vector<std::size_t> outdeg(out.nodes.size(), 0);
  for (auto& [u, v] : out.edges) ++outdeg[u];
  for (std::size_t d : outdeg) CHECK(d >= cfg.k_out);
}

TEST_CASE("snowball sampling is deterministic in its seed") {
  std::vector<std::string> users;
  std::vector<std::vector<std::string>> adj;
  for (int i = 0; i < 20; ++i) users.push_back("n" + std::to_string(i));
  for (int i = 0; i < 20; ++i)
    adj.push_back({users[(i + 7) % 20], users[(i + 3) % 20]});
  MapProvider provider(users, adj);
  SnowballConfig cfg;
  cfg.k_in = 3;
  cfg.k_out = 1;
  cfg.target_nodes = 12;
  cfg.injection_seed = 99;
  FollowEdgeList a = snowball_sample(provider, "n0", cfg);
  FollowEdgeList b = snowball_sample(provider, "n0", cfg);
  CHECK(a.nodes == b.nodes);
  CHECK(a.edges == b.edges);
}

TEST_CASE("tsv follower provider round-trips a fixture file") {
  std::string path = "follow_fixture_test.tsv";
  {
    std::ofstream out(path);
    out << "user\tfollower\n";
    out << "a\tb\n";
    out << "a\tc\n";
    out << "b\ta\n";
  }
  TsvFollowerProvider provider(path);
  CHECK(provider.followers("a") == std::vector<std::string>{"b", "c"});
  CHECK(provider.followers("b") == std::vector<std::string>{"a"});
  CHECK(provider.followers("zzz").empty());
  std::remove(path.c_str());
}
