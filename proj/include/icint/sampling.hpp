#pragma once

#include <cstdint>
#include <vector>

#include "icint/graph.hpp"
#include "icint/types.hpp"

namespace icint {

struct SamplerConfig {
  std::uint64_t master_seed = 0;
  std::uint32_t n_samples = 1000;
  DiffusionMode mode = DiffusionMode::ICInt;
};

/// One Monte Carlo realization. Draws are stored as raw uniforms so the same
/// sample serves any alpha assignment; liveness is a comparison against the
/// mode-dependent edge probability.
struct LiveEdgeSample {
  std::uint32_t sample_index = 0;
  std::vector<double> edge_draws;  // one uniform per edge id
  std::vector<double> node_draws;  // one uniform per node id
};

LiveEdgeSample generate_sample(const InfluenceGraph& g,
                               const SamplerConfig& cfg, std::uint32_t index);

inline bool edge_live(const LiveEdgeSample& s, const InfluenceGraph& g,
                      DiffusionMode mode, EdgeId e) {
  return s.edge_draws[e] < edge_probability(g, mode, e);
}

inline bool intrinsically_active(const LiveEdgeSample& s,
                                 const InfluenceGraph& g, NodeId v) {
  return s.node_draws[v] < g.alpha(v);
}

/// Subset of candidate_set whose intrinsic draw succeeds in this sample.
NodeSet intrinsically_active(const LiveEdgeSample& s,
                             const NodeSet& candidate_set,
                             const InfluenceGraph& g);

/// Number of nodes outside `excluded` reachable from `sources` via live
/// edges. Sources are reachable from themselves.
int reachable_count(const LiveEdgeSample& s, const InfluenceGraph& g,
                    DiffusionMode mode, const NodeSet& sources,
                    const NodeSet& excluded);

/// Precompiled batch of samples for the hot Monte Carlo loops: per-sample
/// edge-liveness and intrinsic-activity bits, fixed at construction for the
/// config's mode and the graph's alphas.
class SampleBatch {
 public:
  SampleBatch(const InfluenceGraph& g, const SamplerConfig& cfg);

  std::uint32_t n_samples() const { return n_samples_; }

  // Strides are padded to whole 64-bit words so each sample owns its words
  // and generation parallelizes without synchronization.

  bool live(std::uint32_t sample, EdgeId e) const {
    std::size_t bit = static_cast<std::size_t>(sample) * edge_stride_ + e;
    return (live_bits_[bit >> 6] >> (bit & 63)) & 1u;
  }

  bool active(std::uint32_t sample, NodeId v) const {
    std::size_t bit = static_cast<std::size_t>(sample) * node_stride_ + v;
    return (active_bits_[bit >> 6] >> (bit & 63)) & 1u;
  }

 private:
  std::uint32_t n_samples_;
  std::size_t edge_stride_;
  std::size_t node_stride_;
  std::vector<std::uint64_t> live_bits_;
  std::vector<std::uint64_t> active_bits_;
};

}  // namespace icint
