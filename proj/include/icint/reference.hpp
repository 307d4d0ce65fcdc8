#pragma once

#include "icint/seed_selection.hpp"
#include "icint/spread.hpp"

namespace icint {

/// Serial reference implementations. These regenerate each sample from its
/// counter and recompute every spread from scratch, with no incremental
/// caching and no OpenMP. They must agree bit-for-bit with the optimized
/// paths; the test suite and the benchmark hold them to that.

SpreadEstimate reference_estimate_spread(const InfluenceGraph& g,
                                         const NodeSet& seeds,
                                         const SamplerConfig& cfg);

SeedTrace reference_greedy(const InfluenceGraph& g, std::size_t k,
                           const SamplerConfig& cfg);

}  // namespace icint
