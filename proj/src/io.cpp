#include "icint/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "icint/errors.hpp"

namespace icint {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  return in;
}

struct Interner {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;

  NodeId get(const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<NodeId>(labels.size()));
    if (fresh) labels.push_back(name);
    return it->second;
  }
};

}  // namespace

InfluenceGraph load_graph(const std::string& edge_path,
                          const std::string& node_path, double default_alpha) {
  Interner ids;
  struct NamedEdge {
    NodeId src, dst;
    double weight;
  };
  std::vector<NamedEdge> named;
  {
    std::ifstream in = open_or_throw(edge_path);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto cols = split_tabs(line);
      if (cols.size() != 3)
        throw ValidationError("malformed edge line: " + line);
      NodeId s = ids.get(cols[0]);
      NodeId d = ids.get(cols[1]);
      named.push_back({s, d, std::stod(cols[2])});
    }
  }

  std::unordered_map<NodeId, double> alpha_by_id;
  if (!node_path.empty()) {
    std::ifstream in = open_or_throw(node_path);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto cols = split_tabs(line);
      if (cols.size() != 2)
        throw ValidationError("malformed node line: " + line);
      alpha_by_id[ids.get(cols[0])] = std::stod(cols[1]);
    }
  }

  const std::size_t n = ids.labels.size();
  if (n == 0) throw ValidationError("graph file has no nodes");
  std::vector<double> alphas(n, default_alpha);
  for (auto& [v, a] : alpha_by_id) alphas[v] = a;
  std::vector<RawEdge> edges;
  edges.reserve(named.size());
  for (const NamedEdge& e : named) edges.push_back({e.src, e.dst, e.weight});
  return InfluenceGraph(n, std::move(edges), std::move(alphas),
                        std::move(ids.labels));
}

void write_edge_tsv(const InfluenceGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << "src\tdst\tweight\n";
  std::ostringstream buf;
  buf.precision(17);
  for (const Edge& e : g.edges()) {
    buf.str("");
    buf << g.label(e.src) << '\t' << g.label(e.dst) << '\t' << e.weight
        << '\n';
    out << buf.str();
  }
}

void write_node_tsv(const InfluenceGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << "node\talpha\n";
  std::ostringstream buf;
  buf.precision(17);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    buf.str("");
    buf << g.label(v) << '\t' << g.alpha(v) << '\n';
    out << buf.str();
  }
}

FollowEdgeList load_follow_edges(const std::string& path) {
  Interner ids;
  FollowEdgeList fl;
  std::ifstream in = open_or_throw(path);
  std::string line;
  std::getline(in, line);  // header: user<TAB>follower
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 2)
      throw ValidationError("malformed follower line: " + line);
    NodeId u = ids.get(cols[0]);
    NodeId v = ids.get(cols[1]);
    fl.edges.emplace_back(u, v);
  }
  fl.nodes = std::move(ids.labels);
  return fl;
}

LoadedInteractions load_interactions(const std::vector<std::string>& labels,
                                     const std::string& interactions_path,
                                     const std::string& intrinsic_path) {
  std::unordered_map<std::string, NodeId> index;
  for (NodeId v = 0; v < labels.size(); ++v) index[labels[v]] = v;

  LoadedInteractions out;
  out.log.n_nodes = labels.size();
  out.log.intrinsic_count.assign(labels.size(), 0);
  out.log.pair_count.resize(labels.size());

  if (!interactions_path.empty()) {
    std::ifstream in = open_or_throw(interactions_path);
    std::string line;
    std::getline(in, line);  // header: followee<TAB>follower<TAB>count
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto cols = split_tabs(line);
      if (cols.size() != 3)
        throw ValidationError("malformed interaction line: " + line);
      auto ju = index.find(cols[0]);
      auto iu = index.find(cols[1]);
      if (ju == index.end() || iu == index.end()) {
        ++out.dropped_rows;
        continue;
      }
      out.log.pair_count[iu->second].push_back(
          {ju->second, std::stoull(cols[2])});
    }
  }
  if (!intrinsic_path.empty()) {
    std::ifstream in = open_or_throw(intrinsic_path);
    std::string line;
    std::getline(in, line);  // header: user<TAB>intrinsic_count
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto cols = split_tabs(line);
      if (cols.size() != 2)
        throw ValidationError("malformed intrinsic line: " + line);
      auto it = index.find(cols[0]);
      if (it == index.end()) {
        ++out.dropped_rows;
        continue;
      }
      out.log.intrinsic_count[it->second] = std::stoull(cols[1]);
    }
  }
  return out;
}

void write_follow_edges_tsv(const FollowEdgeList& fl, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << "user\tfollower\n";
  for (auto& [u, v] : fl.edges)
    out << fl.nodes[u] << '\t' << fl.nodes[v] << '\n';
}

}  // namespace icint
