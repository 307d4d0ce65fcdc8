#include "icint/sampling.hpp"

#include <algorithm>

#include "icint/rng.hpp"

namespace icint {

LiveEdgeSample generate_sample(const InfluenceGraph& g,
                               const SamplerConfig& cfg, std::uint32_t index) {
  LiveEdgeSample s;
  s.sample_index = index;
  s.edge_draws.resize(g.num_edges());
  s.node_draws.resize(g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    s.edge_draws[e] =
        rng::uniform01(cfg.master_seed, index, e, rng::kEdgePhase);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    s.node_draws[v] =
        rng::uniform01(cfg.master_seed, index, v, rng::kNodePhase);
  return s;
}

NodeSet intrinsically_active(const LiveEdgeSample& s,
                             const NodeSet& candidate_set,
                             const InfluenceGraph& g) {
  NodeSet out;
  for (NodeId v : candidate_set)
    if (intrinsically_active(s, g, v)) out.push_back(v);
  return out;
}

int reachable_count(const LiveEdgeSample& s, const InfluenceGraph& g,
                    DiffusionMode mode, const NodeSet& sources,
                    const NodeSet& excluded) {
  std::vector<char> visited(g.num_nodes(), 0);
  std::vector<NodeId> stack;
  for (NodeId v : sources) {
    if (!visited[v]) {
      visited[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(u)) {
      NodeId v = g.edge(e).dst;
      if (!visited[v] && edge_live(s, g, mode, e)) {
        visited[v] = 1;
        stack.push_back(v);
      }
    }
  }
  int count = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (visited[v]) ++count;
  for (NodeId v : excluded)
    if (visited[v]) --count;
  return count;
}

namespace {
std::size_t pad64(std::size_t n) { return (n + 63) & ~std::size_t{63}; }
}  // namespace

SampleBatch::SampleBatch(const InfluenceGraph& g, const SamplerConfig& cfg)
    : n_samples_(cfg.n_samples),
      edge_stride_(pad64(g.num_edges())),
      node_stride_(pad64(g.num_nodes())) {
  live_bits_.assign(static_cast<std::size_t>(n_samples_) * edge_stride_ / 64, 0);
  active_bits_.assign(static_cast<std::size_t>(n_samples_) * node_stride_ / 64, 0);

  std::vector<double> edge_p(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    edge_p[e] = edge_probability(g, cfg.mode, e);

  const std::size_t n_edges = g.num_edges();
  const std::size_t n_nodes = g.num_nodes();
#pragma omp parallel for schedule(static)
  for (long long si = 0; si < static_cast<long long>(n_samples_); ++si) {
    auto s = static_cast<std::uint32_t>(si);
    for (EdgeId e = 0; e < n_edges; ++e) {
      if (rng::uniform01(cfg.master_seed, s, e, rng::kEdgePhase) < edge_p[e]) {
        std::size_t bit = static_cast<std::size_t>(s) * edge_stride_ + e;
        live_bits_[bit >> 6] |= (1ULL << (bit & 63));
      }
    }
    for (NodeId v = 0; v < n_nodes; ++v) {
      if (rng::uniform01(cfg.master_seed, s, v, rng::kNodePhase) < g.alpha(v)) {
        std::size_t bit = static_cast<std::size_t>(s) * node_stride_ + v;
        active_bits_[bit >> 6] |= (1ULL << (bit & 63));
      }
    }
  }
}

}  // namespace icint
