#include "icint/estimation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "icint/errors.hpp"
#include "icint/rng.hpp"

namespace icint {

ParameterEstimate estimate_parameters(const InteractionLog& log,
                                      double default_alpha) {
  ParameterEstimate out;
  out.alphas.resize(log.n_nodes);
  for (NodeId i = 0; i < log.n_nodes; ++i) {
    const std::uint64_t k = log.intrinsic_count[i];
    const std::uint64_t gamma = log.gamma(i);
    if (k == 0 && gamma == 0) {
      out.no_activity.push_back(i);
      out.alphas[i] = default_alpha;
      continue;
    }
    out.alphas[i] =
        static_cast<double>(k) / static_cast<double>(gamma + k);
    for (auto& [j, c] : log.pair_count[i]) {
      out.weights.push_back(
          {j, i, static_cast<double>(c) / static_cast<double>(gamma)});
    }
  }
  return out;
}

TsvFollowerProvider::TsvFollowerProvider(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open follower file: " + path);
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, users_.size());
    if (fresh) {
      users_.push_back(name);
      adj_.emplace_back();
    }
    return it->second;
  };
  std::string line;
  std::getline(in, line);  // header: user<TAB>follower
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ValidationError("malformed follower line: " + line);
    std::size_t u = intern(line.substr(0, tab));
    intern(line.substr(tab + 1));
    adj_[u].push_back(line.substr(tab + 1));
  }
}

std::vector<std::string> TsvFollowerProvider::followers(
    const std::string& user) const {
  for (std::size_t i = 0; i < users_.size(); ++i)
    if (users_[i] == user) return adj_[i];
  return {};
}

std::vector<std::string> TsvFollowerProvider::universe() const {
  return users_;
}

namespace {

struct SnowballState {
  std::vector<std::string> nodes;
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::vector<NodeId>> out_adj;
  std::vector<std::size_t> in_degree;
  std::vector<char> removed;

  NodeId intern(const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<NodeId>(nodes.size()));
    if (fresh) {
      nodes.push_back(name);
      out_adj.emplace_back();
      in_degree.push_back(0);
      removed.push_back(0);
    }
    return it->second;
  }

  std::size_t live_count() const {
    std::size_t c = 0;
    for (char r : removed) c += !r;
    return c;
  }
};

}  // namespace

FollowEdgeList snowball_sample(const FollowerProvider& provider,
                               const std::string& seed_user,
                               const SnowballConfig& cfg) {
  if (cfg.k_in < 1) throw ValidationError("k_in must be >= 1");
  if (cfg.target_nodes < 1) throw ValidationError("target_nodes must be >= 1");

  SnowballState st;
  std::vector<NodeId> frontier;  // insertion order
  rng::SplitMix inject_rng(cfg.injection_seed);
  const std::vector<std::string> universe = provider.universe();

  NodeId seed = st.intern(seed_user);
  frontier.push_back(seed);

  FollowEdgeList out;
  bool exhausted = false;
  for (std::size_t round = 0; round < cfg.max_rounds && !exhausted; ++round) {
    out.rounds = round + 1;
    // Expansion until the live graph reaches the target size.
    while (st.live_count() < cfg.target_nodes) {
      if (frontier.empty()) {
        // Inject a random unseen user from the provider's universe.
        std::vector<const std::string*> unseen;
        for (const std::string& u : universe)
          if (!st.index.count(u)) unseen.push_back(&u);
        if (unseen.empty()) {
          exhausted = true;
          break;
        }
        NodeId injected =
            st.intern(*unseen[inject_rng.next_below(unseen.size())]);
        frontier.push_back(injected);
      }
      // Up to k_in frontier users with the highest current in-degree,
      // ties by insertion order.
      std::vector<NodeId> picked = frontier;
      std::stable_sort(picked.begin(), picked.end(),
                       [&st](NodeId a, NodeId b) {
                         return st.in_degree[a] > st.in_degree[b];
                       });
      if (picked.size() > cfg.k_in) picked.resize(cfg.k_in);
      {
        std::unordered_set<NodeId> drop(picked.begin(), picked.end());
        std::erase_if(frontier, [&drop](NodeId v) { return drop.count(v); });
      }
      for (NodeId u : picked) {
        // a pruned node picked from the frontier rejoins; expansion gives it
        // the out-degree it needs to survive the next pruning pass
        st.removed[u] = 0;
        for (const std::string& fname : provider.followers(st.nodes[u])) {
          bool fresh = !st.index.count(fname);
          NodeId v = st.intern(fname);
          if (v == u) continue;
          if (std::find(st.out_adj[u].begin(), st.out_adj[u].end(), v) ==
              st.out_adj[u].end()) {
            st.out_adj[u].push_back(v);
            ++st.in_degree[v];
          }
          if (st.removed[v]) {
            // a node pruned in an earlier round re-enters like a fresh one
            st.removed[v] = 0;
            fresh = true;
          }
          if (fresh) frontier.push_back(v);
        }
      }
      // Each pass consumes the picked frontier nodes; when expansion stalls
      // the frontier drains and the injection branch above takes over.
    }
    // Prune even a partial graph so the out-degree floor always holds.
    // Recursively remove nodes with out-degree < k_out.
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::size_t> out_deg(st.nodes.size(), 0);
      for (NodeId u = 0; u < st.nodes.size(); ++u) {
        if (st.removed[u]) continue;
        for (NodeId v : st.out_adj[u])
          if (!st.removed[v]) ++out_deg[u];
      }
      for (NodeId u = 0; u < st.nodes.size(); ++u) {
        if (!st.removed[u] && out_deg[u] < cfg.k_out) {
          st.removed[u] = 1;
          changed = true;
        }
      }
    }
    // Pruned nodes stay in the frontier: re-expansion can bring them back.
    if (exhausted || st.live_count() >= cfg.target_nodes) break;
  }

  out.reached_target = st.live_count() >= cfg.target_nodes;

  // Compact to the surviving nodes.
  std::vector<NodeId> remap(st.nodes.size(), kInvalidNode);
  for (NodeId v = 0; v < st.nodes.size(); ++v) {
    if (!st.removed[v]) {
      remap[v] = static_cast<NodeId>(out.nodes.size());
      out.nodes.push_back(st.nodes[v]);
    }
  }
  for (NodeId u = 0; u < st.nodes.size(); ++u) {
    if (st.removed[u]) continue;
    for (NodeId v : st.out_adj[u])
      if (!st.removed[v]) out.edges.emplace_back(remap[u], remap[v]);
  }
  return out;
}

InteractionGraphResult build_interaction_graph(const FollowEdgeList& follows,
                                               const InteractionLog& log,
                                               double default_alpha) {
  const std::size_t n = follows.nodes.size();
  if (log.n_nodes != n)
    throw ValidationError("interaction log node count does not match graph");

  // Smoothed pair counts restricted to follow edges; off-graph pairs dropped.
  InteractionLog smoothed;
  smoothed.n_nodes = n;
  smoothed.intrinsic_count = log.intrinsic_count;
  smoothed.pair_count.resize(n);
  std::size_t dropped = 0;
  std::vector<std::unordered_map<NodeId, std::uint64_t>> raw_pairs(n);
  for (NodeId i = 0; i < n; ++i)
    for (auto& [j, c] : log.pair_count[i]) raw_pairs[i][j] = c;

  for (auto& [u, v] : follows.edges) {
    auto it = raw_pairs[v].find(u);
    std::uint64_t c = it == raw_pairs[v].end() ? 0 : it->second;
    if (it != raw_pairs[v].end()) raw_pairs[v].erase(it);
    smoothed.pair_count[v].push_back({u, 1 + c});
  }
  for (NodeId i = 0; i < n; ++i) dropped += raw_pairs[i].size();

  ParameterEstimate est = estimate_parameters(smoothed, default_alpha);

  std::vector<RawEdge> raw_edges;
  raw_edges.reserve(follows.edges.size());
  for (NodeId i = 0; i < n; ++i)
    for (auto& [j, c] : smoothed.pair_count[i])
      raw_edges.push_back({j, i, static_cast<double>(c)});

  InfluenceGraph raw(n, raw_edges, est.alphas, follows.nodes);
  InfluenceGraph norm = normalize_weighted_cascade(raw);
  return InteractionGraphResult{std::move(raw), std::move(norm), dropped,
                                std::move(est.no_activity)};
}

}  // namespace icint
