#include "icint/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icint/errors.hpp"

namespace icint {

InfluenceGraph::InfluenceGraph(std::size_t num_nodes,
                               std::vector<RawEdge> raw_edges,
                               std::vector<double> alphas,
                               std::vector<std::string> labels)
    : alphas_(std::move(alphas)), labels_(std::move(labels)) {
  if (alphas_.size() != num_nodes)
    throw ValidationError("alpha vector size does not match node count");
  for (double a : alphas_)
    if (!(a >= 0.0 && a <= 1.0))
      throw ValidationError("alpha out of [0,1]: " + std::to_string(a));
  if (labels_.empty()) {
    labels_.reserve(num_nodes);
    for (std::size_t i = 0; i < num_nodes; ++i)
      labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != num_nodes)
    throw ValidationError("label vector size does not match node count");

  std::sort(raw_edges.begin(), raw_edges.end(),
            [](const RawEdge& a, const RawEdge& b) {
              return a.src != b.src ? a.src < b.src : a.dst < b.dst;
            });
  edges_.reserve(raw_edges.size());
  for (const RawEdge& re : raw_edges) {
    if (re.src >= num_nodes || re.dst >= num_nodes)
      throw ValidationError("edge endpoint out of range");
    if (re.src == re.dst)
      throw ValidationError("self-loop on node " + std::to_string(re.src));
    if (re.weight < 0.0)
      throw NegativeWeightError("negative edge weight on (" +
                                std::to_string(re.src) + "," +
                                std::to_string(re.dst) + ")");
    if (!edges_.empty() && edges_.back().src == re.src &&
        edges_.back().dst == re.dst) {
      edges_.back().weight += re.weight;  // merge parallel edges
    } else {
      edges_.push_back({re.src, re.dst, re.weight});
    }
  }

  out_offsets_.assign(num_nodes + 1, 0);
  in_offsets_.assign(num_nodes + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
  }
  for (std::size_t i = 0; i < num_nodes; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  in_order_.resize(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) in_order_[e] = e;

  by_dst_ = in_order_;
  std::sort(by_dst_.begin(), by_dst_.end(), [this](EdgeId a, EdgeId b) {
    return edges_[a].dst != edges_[b].dst ? edges_[a].dst < edges_[b].dst
                                          : edges_[a].src < edges_[b].src;
  });
}

EdgeId InfluenceGraph::find_edge(NodeId u, NodeId v) const {
  auto row = out_edges(u);
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [this](EdgeId e, NodeId d) {
                               return edges_[e].dst < d;
                             });
  if (it != row.end() && edges_[*it].dst == v) return *it;
  return static_cast<EdgeId>(-1);
}

bool InfluenceGraph::is_normalized(double tol) const {
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (in_degree(v) == 0) continue;
    double sum = 0.0;
    for (EdgeId e : in_edges(v)) sum += edges_[e].weight;
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

InfluenceGraph normalize_weighted_cascade(const InfluenceGraph& raw) {
  if (raw.num_nodes() == 0) throw ValidationError("empty graph");
  std::vector<double> row_sum(raw.num_nodes(), 0.0);
  for (const Edge& e : raw.edges()) {
    if (e.weight < 0.0)
      throw NegativeWeightError("negative raw weight on (" +
                                std::to_string(e.src) + "," +
                                std::to_string(e.dst) + ")");
    row_sum[e.dst] += e.weight;
  }
  for (NodeId v = 0; v < raw.num_nodes(); ++v) {
    if (raw.in_degree(v) > 0 && row_sum[v] == 0.0)
      throw ZeroRowError("in-row of node " + std::to_string(v) +
                         " sums to zero");
  }
  std::vector<RawEdge> scaled;
  scaled.reserve(raw.num_edges());
  for (const Edge& e : raw.edges())
    scaled.push_back({e.src, e.dst, e.weight / row_sum[e.dst]});
  return InfluenceGraph(raw.num_nodes(), std::move(scaled), raw.alphas(),
                        raw.labels());
}

double effective_edge_probability(const InfluenceGraph& g, NodeId u, NodeId v) {
  EdgeId e = g.find_edge(u, v);
  if (e == static_cast<EdgeId>(-1))
    throw MissingEdgeError("no edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
  return (1.0 - g.alpha(v)) * g.edge(e).weight;
}

DummyGraph dummy_transform(const InfluenceGraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<RawEdge> edges;
  edges.reserve(g.num_edges() + n);
  for (const Edge& e : g.edges())
    edges.push_back({e.src, e.dst, (1.0 - g.alpha(e.dst)) * e.weight});
  for (NodeId i = 0; i < n; ++i)
    edges.push_back({static_cast<NodeId>(i + n), i, g.alpha(i)});

  std::vector<double> alphas(2 * n, 0.0);
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (NodeId i = 0; i < n; ++i) labels.push_back(g.label(i));
  for (NodeId i = 0; i < n; ++i) labels.push_back(g.label(i) + "_D");

  return DummyGraph{InfluenceGraph(2 * n, std::move(edges), std::move(alphas),
                                   std::move(labels)),
                    n};
}

InfluenceGraph with_alphas(const InfluenceGraph& g,
                           std::vector<double> alphas) {
  std::vector<RawEdge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({e.src, e.dst, e.weight});
  return InfluenceGraph(g.num_nodes(), std::move(edges), std::move(alphas),
                        g.labels());
}

}  // namespace icint
