#include "icint/spread.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icint/errors.hpp"

namespace icint {

namespace {

// Mean and sample-standard-deviation / sqrt(n) from per-sample counts,
// accumulated in sample order so results are thread-count independent.
SpreadEstimate summarize(const std::vector<int>& counts) {
  SpreadEstimate est;
  est.n_samples = static_cast<std::uint32_t>(counts.size());
  long long total = 0;
  for (int c : counts) total += c;
  est.mean = static_cast<double>(total) / counts.size();
  if (counts.size() > 1) {
    double ss = 0.0;
    for (int c : counts) {
      double d = c - est.mean;
      ss += d * d;
    }
    double var = ss / (counts.size() - 1);
    est.std_error = std::sqrt(var / counts.size());
  }
  return est;
}

}  // namespace

SpreadEstimate estimate_spread(const InfluenceGraph& g, const NodeSet& seeds,
                               const SamplerConfig& cfg) {
  SampleBatch batch(g, cfg);
  const std::size_t n = g.num_nodes();
  std::vector<int> counts(cfg.n_samples, 0);

#pragma omp parallel
  {
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t cur = 0;
    std::vector<NodeId> stack;
#pragma omp for schedule(static)
    for (long long si = 0; si < static_cast<long long>(cfg.n_samples); ++si) {
      auto s = static_cast<std::uint32_t>(si);
      ++cur;
      int n_sources = 0;
      stack.clear();
      for (NodeId v : seeds) {
        if (cfg.mode == DiffusionMode::ICInt && !batch.active(s, v)) continue;
        if (stamp[v] != cur) {
          stamp[v] = cur;
          stack.push_back(v);
          ++n_sources;
        }
      }
      int visited = n_sources;
      while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (EdgeId e : g.out_edges(u)) {
          NodeId v = g.edge(e).dst;
          if (stamp[v] != cur && batch.live(s, e)) {
            stamp[v] = cur;
            stack.push_back(v);
            ++visited;
          }
        }
      }
      counts[s] = visited - n_sources;
    }
  }
  return summarize(counts);
}

SpreadEstimate estimate_spread_icint(const InfluenceGraph& g,
                                     const NodeSet& seeds,
                                     const SamplerConfig& cfg) {
  if (cfg.mode != DiffusionMode::ICInt)
    throw ValidationError("estimate_spread_icint requires ICInt mode");
  return estimate_spread(g, seeds, cfg);
}

SpreadEstimate estimate_spread_ic(const InfluenceGraph& g, const NodeSet& seeds,
                                  const SamplerConfig& cfg) {
  if (cfg.mode != DiffusionMode::PlainIC)
    throw ValidationError("estimate_spread_ic requires PlainIC mode");
  return estimate_spread(g, seeds, cfg);
}

namespace {

// Edges with positive live probability whose source is reachable from the
// seeds through such edges; states of all other edges cannot affect the
// count, so they are summed out of the enumeration.
std::vector<EdgeId> relevant_edges(const InfluenceGraph& g,
                                   const NodeSet& seeds, DiffusionMode mode) {
  std::vector<char> reach(g.num_nodes(), 0);
  std::vector<NodeId> stack;
  for (NodeId v : seeds) {
    // An ICInt seed with alpha 0 is never a source.
    if (mode == DiffusionMode::ICInt && g.alpha(v) <= 0.0) continue;
    if (!reach[v]) {
      reach[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(u)) {
      if (edge_probability(g, mode, e) <= 0.0) continue;
      NodeId v = g.edge(e).dst;
      if (!reach[v]) {
        reach[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (reach[g.edge(e).src] && edge_probability(g, mode, e) > 0.0)
      out.push_back(e);
  return out;
}

// Reachable-node count from `sources` over the live subset of `edge_list`
// given by `mask`, minus excluded-and-reached nodes.
int masked_reach_count(const InfluenceGraph& g,
                       const std::vector<EdgeId>& edge_list,
                       std::uint32_t mask, const std::vector<NodeId>& sources,
                       const std::vector<char>& excluded,
                       std::vector<std::uint32_t>& stamp, std::uint32_t cur,
                       std::vector<NodeId>& stack,
                       std::vector<std::uint32_t>& edge_stamp) {
  for (std::size_t i = 0; i < edge_list.size(); ++i)
    edge_stamp[edge_list[i]] = (mask >> i) & 1u ? cur : 0;
  stack.clear();
  int count = 0;
  for (NodeId v : sources) {
    if (stamp[v] != cur) {
      stamp[v] = cur;
      stack.push_back(v);
      if (!excluded[v]) ++count;
    }
  }
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(u)) {
      NodeId v = g.edge(e).dst;
      if (stamp[v] != cur && edge_stamp[e] == cur) {
        stamp[v] = cur;
        stack.push_back(v);
        if (!excluded[v]) ++count;
      }
    }
  }
  return count;
}

}  // namespace

double exact_spread(const InfluenceGraph& g, const NodeSet& seeds,
                    DiffusionMode mode) {
  if (seeds.empty()) return 0.0;
  const std::vector<EdgeId> edge_list = relevant_edges(g, seeds, mode);
  const std::size_t n_intrinsic =
      mode == DiffusionMode::ICInt ? seeds.size() : 0;
  if (edge_list.size() + n_intrinsic > 24)
    throw BudgetExceededError("enumeration budget exceeded: " +
                              std::to_string(edge_list.size()) + " edges + " +
                              std::to_string(n_intrinsic) + " seeds > 24");

  std::vector<double> edge_p(edge_list.size());
  for (std::size_t i = 0; i < edge_list.size(); ++i)
    edge_p[i] = edge_probability(g, mode, edge_list[i]);

  std::vector<std::uint32_t> stamp(g.num_nodes(), 0);
  std::vector<std::uint32_t> edge_stamp(g.num_edges(), 0);
  std::vector<NodeId> stack;
  std::vector<char> excluded(g.num_nodes(), 0);
  std::uint32_t cur = 0;

  double total = 0.0;
  const std::uint32_t n_source_masks =
      mode == DiffusionMode::ICInt ? (1u << seeds.size()) : 1u;
  std::vector<NodeId> sources;
  for (std::uint32_t smask = 0; smask < n_source_masks; ++smask) {
    double sp = 1.0;
    sources.clear();
    std::fill(excluded.begin(), excluded.end(), 0);
    if (mode == DiffusionMode::ICInt) {
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        double a = g.alpha(seeds[i]);
        if ((smask >> i) & 1u) {
          sp *= a;
          sources.push_back(seeds[i]);
          excluded[seeds[i]] = 1;
        } else {
          sp *= 1.0 - a;
        }
      }
    } else {
      sources = seeds;
      for (NodeId v : seeds) excluded[v] = 1;
    }
    if (sp == 0.0) continue;
    if (sources.empty()) continue;  // count is 0 for every edge outcome

    for (std::uint32_t emask = 0; emask < (1u << edge_list.size()); ++emask) {
      double ep = 1.0;
      for (std::size_t i = 0; i < edge_list.size(); ++i)
        ep *= (emask >> i) & 1u ? edge_p[i] : 1.0 - edge_p[i];
      if (ep == 0.0) continue;
      ++cur;
      int c = masked_reach_count(g, edge_list, emask, sources, excluded, stamp,
                                 cur, stack, edge_stamp);
      total += sp * ep * c;
    }
  }
  return total;
}

double exact_spread_dummy_seeded(const DummyGraph& dg, const NodeSet& seeds) {
  const InfluenceGraph& g = dg.graph;
  if (seeds.empty()) return 0.0;
  NodeSet dummy_seeds;
  for (NodeId v : seeds) dummy_seeds.push_back(dg.dummy_of(v));
  std::vector<EdgeId> all_relevant =
      relevant_edges(g, dummy_seeds, DiffusionMode::PlainIC);

  // Split into dummy edges (one per seed, in seed order) and original edges
  // (edge-id order). The liveness of a dummy edge is the seed's intrinsic
  // activation; enumerating it as the outer loop mirrors the IC-Int oracle.
  std::vector<EdgeId> dummy_list, edge_list;
  for (EdgeId e : all_relevant)
    (dg.is_dummy(g.edge(e).src) ? dummy_list : edge_list).push_back(e);
  if (edge_list.size() + seeds.size() > 24)
    throw BudgetExceededError("enumeration budget exceeded: " +
                              std::to_string(edge_list.size()) + " edges + " +
                              std::to_string(seeds.size()) + " seeds > 24");

  std::vector<double> edge_p(edge_list.size());
  for (std::size_t i = 0; i < edge_list.size(); ++i)
    edge_p[i] = g.edge(edge_list[i]).weight;

  std::vector<std::uint32_t> stamp(g.num_nodes(), 0);
  std::vector<std::uint32_t> edge_stamp(g.num_edges(), 0);
  std::vector<NodeId> stack;
  std::vector<char> excluded(g.num_nodes(), 0);
  std::uint32_t cur = 0;

  double total = 0.0;
  std::vector<NodeId> sources;
  for (std::uint32_t smask = 0; smask < (1u << dummy_list.size()); ++smask) {
    double sp = 1.0;
    sources.clear();
    std::fill(excluded.begin(), excluded.end(), 0);
    for (std::size_t i = 0; i < dummy_list.size(); ++i) {
      const Edge& de = g.edge(dummy_list[i]);
      if ((smask >> i) & 1u) {
        sp *= de.weight;  // alpha of the seed
        sources.push_back(de.dst);
        excluded[de.dst] = 1;
      } else {
        sp *= 1.0 - de.weight;
      }
    }
    if (sp == 0.0) continue;
    if (sources.empty()) continue;

    for (std::uint32_t emask = 0; emask < (1u << edge_list.size()); ++emask) {
      double ep = 1.0;
      for (std::size_t i = 0; i < edge_list.size(); ++i)
        ep *= (emask >> i) & 1u ? edge_p[i] : 1.0 - edge_p[i];
      if (ep == 0.0) continue;
      ++cur;
      int c = masked_reach_count(g, edge_list, emask, sources, excluded, stamp,
                                 cur, stack, edge_stamp);
      total += sp * ep * c;
    }
  }
  return total;
}

double one_hop_engagement(const InfluenceGraph& g, NodeId s) {
  double sum = 0.0;
  for (EdgeId e : g.out_edges(s)) {
    const Edge& ed = g.edge(e);
    sum += (1.0 - g.alpha(ed.dst)) * ed.weight;
  }
  return g.alpha(s) * sum;
}

}  // namespace icint
