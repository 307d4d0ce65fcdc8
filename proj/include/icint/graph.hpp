#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "icint/types.hpp"

namespace icint {

struct Edge {
  NodeId src;
  NodeId dst;
  double weight;  // w[dst][src]: probability that active src activates dst
};

struct RawEdge {
  NodeId src;
  NodeId dst;
  double weight;
};

/// Directed influence graph. Immutable after construction; edges are stored
/// in canonical (src, dst) order so edge ids are stable across ingestion
/// orders. Parallel edges are merged by summing weights, self-loops rejected.
class InfluenceGraph {
 public:
  InfluenceGraph(std::size_t num_nodes, std::vector<RawEdge> raw_edges,
                 std::vector<double> alphas,
                 std::vector<std::string> labels = {});

  std::size_t num_nodes() const { return alphas_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  double alpha(NodeId v) const { return alphas_[v]; }
  const std::vector<double>& alphas() const { return alphas_; }

  // Edge ids leaving u, sorted by destination.
  std::span<const EdgeId> out_edges(NodeId u) const {
    return {in_order_.data() + out_offsets_[u],
            out_offsets_[u + 1] - out_offsets_[u]};
  }

  // Edge ids entering v, sorted by source.
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {by_dst_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  std::size_t out_degree(NodeId u) const {
    return out_offsets_[u + 1] - out_offsets_[u];
  }
  std::size_t in_degree(NodeId v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }

  // Edge id of (u, v) or kInvalidNode-like sentinel; binary search over out row.
  EdgeId find_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Row-stochastic check: every in-row sums to 1 within tol, in-degree-0 rows
  // are empty.
  bool is_normalized(double tol = 1e-9) const;

 private:
  std::vector<Edge> edges_;             // sorted by (src, dst)
  std::vector<EdgeId> in_order_;        // identity permutation, CSR payload
  std::vector<EdgeId> by_dst_;          // edge ids sorted by (dst, src)
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<double> alphas_;
  std::vector<std::string> labels_;
};

/// Weighted-cascade normalization: each nonempty in-row is scaled to sum
/// to 1. Throws NegativeWeightError / ZeroRowError.
InfluenceGraph normalize_weighted_cascade(const InfluenceGraph& raw);

/// (1 - alpha[v]) * w[v][u]. Throws MissingEdgeError if (u, v) is absent.
double effective_edge_probability(const InfluenceGraph& g, NodeId u, NodeId v);

/// Mode-dependent live probability of edge e.
inline double edge_probability(const InfluenceGraph& g, DiffusionMode mode,
                               EdgeId e) {
  const Edge& ed = g.edge(e);
  return mode == DiffusionMode::ICInt ? (1.0 - g.alpha(ed.dst)) * ed.weight
                                      : ed.weight;
}

/// IC-Int to plain-IC reduction: node i gains a dummy i_D with the single
/// edge i_D -> i of weight alpha[i]; original edges carry their effective
/// probabilities. The result is meant to be evaluated under PlainIC with
/// dummy nodes as seeds.
struct DummyGraph {
  InfluenceGraph graph;
  std::size_t n_original;

  NodeId dummy_of(NodeId i) const {
    return static_cast<NodeId>(i + n_original);
  }
  bool is_dummy(NodeId v) const { return v >= n_original; }
};

DummyGraph dummy_transform(const InfluenceGraph& g);

/// Same topology and weights, different alpha assignment.
InfluenceGraph with_alphas(const InfluenceGraph& g, std::vector<double> alphas);

}  // namespace icint
