#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "icint/graph.hpp"
#include "icint/types.hpp"

namespace icint {

/// Interaction counts over an id-mapped node universe: k_i intrinsic events
/// per node and gamma_(j,i) directed interaction counts (node i engaging with
/// content from node j).
struct InteractionLog {
  std::size_t n_nodes = 0;
  std::vector<std::uint64_t> intrinsic_count;              // k_i
  std::vector<std::vector<std::pair<NodeId, std::uint64_t>>> pair_count;
  // pair_count[i] = {(j, gamma_(j,i)), ...}

  std::uint64_t gamma(NodeId i) const {
    std::uint64_t g = 0;
    for (auto& [j, c] : pair_count[i]) g += c;
    return g;
  }
};

struct ParameterEstimate {
  std::vector<double> alphas;
  std::vector<RawEdge> weights;     // already row-normalized (w_ij = g_ji/g_i)
  std::vector<NodeId> no_activity;  // nodes with k = gamma = 0
};

/// Maximum-likelihood estimates: alpha_i = k_i/(gamma_i + k_i) and
/// w_ij = gamma_(j,i)/gamma_i. Nodes with no activity at all are flagged and
/// assigned default_alpha with an empty weight row.
ParameterEstimate estimate_parameters(const InteractionLog& log,
                                      double default_alpha = 0.5);

/// Offline stand-in for a follower-lookup service. Lookups are pure.
class FollowerProvider {
 public:
  virtual ~FollowerProvider() = default;
  virtual std::vector<std::string> followers(const std::string& user) const = 0;
  virtual std::vector<std::string> universe() const = 0;
};

/// Backed by a `user<TAB>follower` TSV adjacency file.
class TsvFollowerProvider : public FollowerProvider {
 public:
  explicit TsvFollowerProvider(const std::string& path);
  std::vector<std::string> followers(const std::string& user) const override;
  std::vector<std::string> universe() const override;

 private:
  std::vector<std::string> users_;  // insertion order
  std::vector<std::vector<std::string>> adj_;
};

struct SnowballConfig {
  std::size_t k_in = 15;
  std::size_t k_out = 11;
  std::size_t target_nodes = 100;
  std::size_t max_rounds = 20;
  std::uint64_t injection_seed = 0;  // for random seed users on empty frontier
};

struct FollowEdgeList {
  std::vector<std::string> nodes;  // label per dense id
  std::vector<std::pair<NodeId, NodeId>> edges;  // (u, v): v follows u
  bool reached_target = true;  // false when the provider was exhausted
  std::size_t rounds = 0;
};

/// Frontier-expansion snowball sampler over a follower provider: repeatedly
/// expand the k_in highest-in-degree frontier users, then recursively prune
/// nodes with out-degree < k_out, resuming expansion (up to max_rounds) when
/// pruning shrinks the graph below target.
FollowEdgeList snowball_sample(const FollowerProvider& provider,
                               const std::string& seed_user,
                               const SnowballConfig& cfg);

struct InteractionGraphResult {
  InfluenceGraph raw;                // smoothed weights, pre-normalization
  InfluenceGraph graph;              // weighted-cascade normalized
  std::size_t dropped_pairs = 0;     // interaction pairs without a follow edge
  std::vector<NodeId> no_activity;
};

/// Follow graph + interaction counts -> influence graph: raw edge weight is
/// 1 + interaction count (smoothing applied before gamma as well), alphas
/// from estimate_parameters.
InteractionGraphResult build_interaction_graph(const FollowEdgeList& follows,
                                               const InteractionLog& log,
                                               double default_alpha = 0.5);

}  // namespace icint
