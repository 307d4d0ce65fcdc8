#pragma once

#include <cstdint>
#include <vector>

#include "icint/graph.hpp"
#include "icint/sampling.hpp"
#include "icint/types.hpp"

namespace icint {

struct SpreadEstimate {
  double mean = 0.0;
  std::uint32_t n_samples = 0;
  double std_error = 0.0;
};

/// Monte Carlo estimate of sigma(S) under cfg.mode. In ICInt mode the sources
/// of each sample are the intrinsically activated members of S and only those
/// are excluded from the count; in PlainIC mode sources = excluded = S.
SpreadEstimate estimate_spread(const InfluenceGraph& g, const NodeSet& seeds,
                               const SamplerConfig& cfg);

SpreadEstimate estimate_spread_icint(const InfluenceGraph& g,
                                     const NodeSet& seeds,
                                     const SamplerConfig& cfg);

SpreadEstimate estimate_spread_ic(const InfluenceGraph& g, const NodeSet& seeds,
                                  const SamplerConfig& cfg);

/// Exact expectation of the same functional by enumerating live/dead states
/// of every edge reachable from the seeds (and intrinsic on/off states of the
/// seeds in ICInt mode). Throws BudgetExceededError when the enumeration
/// would exceed 2^24 outcomes.
double exact_spread(const InfluenceGraph& g, const NodeSet& seeds,
                    DiffusionMode mode);

/// Exact plain-IC spread on a dummy-transformed graph seeded at the dummies
/// of `seeds`, counting original nodes outside the per-outcome intrinsically
/// activated set. Matches exact_spread(g, seeds, ICInt) outcome-for-outcome.
double exact_spread_dummy_seeded(const DummyGraph& dg, const NodeSet& seeds);

/// Eq.-style one-hop engagement: alpha_s * sum over out-neighbors r of
/// (1 - alpha_r) * w[r][s].
double one_hop_engagement(const InfluenceGraph& g, NodeId s);

}  // namespace icint
