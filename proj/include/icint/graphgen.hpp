#pragma once

#include <cstdint>

#include "icint/graph.hpp"

namespace icint {

struct PowerLawConfig {
  std::size_t n_nodes = 1000;
  double exponent = 2.5;     // out-degree distribution tail
  std::size_t min_degree = 1;
  std::size_t max_degree = 0;  // 0: n_nodes / 10
  std::uint64_t seed = 0;
  double default_alpha = 0.5;
};

/// Random directed graph with power-law out-degrees, distinct uniform
/// targets, and uniform (0,1] raw weights. Deterministic in the seed.
InfluenceGraph gen_power_law_graph(const PowerLawConfig& cfg);

}  // namespace icint
