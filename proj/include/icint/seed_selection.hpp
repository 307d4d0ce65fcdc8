#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "icint/graph.hpp"
#include "icint/sampling.hpp"
#include "icint/spread.hpp"
#include "icint/types.hpp"

namespace icint {

struct SeedTrace {
  std::vector<NodeId> seeds;
  std::vector<double> marginal_gain;      // expected activations gained per step
  std::vector<double> cumulative_spread;  // sigma estimate after each step
  std::uint64_t evaluations = 0;          // spread evaluations performed
};

/// Greedy hill climbing over a fixed sample set: the n samples are generated
/// once and reused for every step and candidate, so the sample-averaged
/// objective is deterministic and lazy evaluation is exactly equivalent.
/// Ties break toward the lowest node id. Honors cfg.mode.
SeedTrace greedy(const InfluenceGraph& g, std::size_t k,
                 const SamplerConfig& cfg);

/// CELF-style accelerator over the same objective; returns a trace identical
/// to greedy() with typically far fewer evaluations.
SeedTrace lazy_greedy(const InfluenceGraph& g, std::size_t k,
                      const SamplerConfig& cfg);

inline SeedTrace greedy_icint(const InfluenceGraph& g, std::size_t k,
                              const SamplerConfig& cfg) {
  return greedy(g, k, cfg);
}

inline SeedTrace lazy_greedy_icint(const InfluenceGraph& g, std::size_t k,
                                   const SamplerConfig& cfg) {
  return lazy_greedy(g, k, cfg);
}

/// Cumulative sigma estimates (with standard errors) for every prefix of an
/// ordered seed list, over one shared sample set.
std::vector<SpreadEstimate> evaluate_spread_curve(
    const InfluenceGraph& g, const std::vector<NodeId>& seeds_in_order,
    const SamplerConfig& cfg);

/// Nodes ranked by the Monte Carlo estimate of sigma({v}), descending, ties
/// by ascending node id. All single-node spreads share one sample set.
std::vector<std::pair<NodeId, double>> top_k_by_single_spread(
    const InfluenceGraph& g, std::size_t k, const SamplerConfig& cfg);

}  // namespace icint
