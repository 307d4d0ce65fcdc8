#pragma once

#include <string>
#include <vector>

#include "icint/estimation.hpp"
#include "icint/graph.hpp"

namespace icint {

/// Edge file: TSV `src<TAB>dst<TAB>weight` with raw nonnegative weights.
/// Node file: TSV `node<TAB>alpha`; nodes absent from it get default_alpha.
/// Node ids are assigned densely in order of first appearance (edge file
/// first, then node file).
InfluenceGraph load_graph(const std::string& edge_path,
                          const std::string& node_path,
                          double default_alpha = 0.5);

void write_edge_tsv(const InfluenceGraph& g, const std::string& path);
void write_node_tsv(const InfluenceGraph& g, const std::string& path);

/// Follower adjacency: TSV `user<TAB>follower` -> follow edge list over
/// first-appearance ids.
FollowEdgeList load_follow_edges(const std::string& path);

/// Interaction log files, mapped onto an existing label set. Interaction
/// rows naming unknown users are dropped (counted in dropped_rows).
struct LoadedInteractions {
  InteractionLog log;
  std::size_t dropped_rows = 0;
};
LoadedInteractions load_interactions(const std::vector<std::string>& labels,
                                     const std::string& interactions_path,
                                     const std::string& intrinsic_path);

void write_follow_edges_tsv(const FollowEdgeList& fl, const std::string& path);

}  // namespace icint
