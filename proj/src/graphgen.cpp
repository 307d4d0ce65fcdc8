#include "icint/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "icint/errors.hpp"
#include "icint/rng.hpp"

namespace icint {

InfluenceGraph gen_power_law_graph(const PowerLawConfig& cfg) {
  if (cfg.n_nodes < 2) throw ValidationError("need at least 2 nodes");
  const std::size_t max_deg =
      cfg.max_degree > 0 ? cfg.max_degree
                         : std::max<std::size_t>(cfg.n_nodes / 10, 2);
  if (cfg.min_degree < 1 || cfg.min_degree > max_deg)
    throw ValidationError("degree bounds invalid");
  rng::SplitMix gen(cfg.seed);

  // Inverse-CDF draw from a truncated continuous power law, floored.
  auto draw_degree = [&]() {
    double u = gen.next_unit();
    double a = 1.0 - cfg.exponent;
    double lo = std::pow(static_cast<double>(cfg.min_degree), a);
    double hi = std::pow(static_cast<double>(max_deg) + 1.0, a);
    double d = std::pow(lo + u * (hi - lo), 1.0 / a);
    auto deg = static_cast<std::size_t>(d);
    return std::clamp(deg, cfg.min_degree, max_deg);
  };

  std::vector<RawEdge> edges;
  std::unordered_set<NodeId> picked;
  for (NodeId u = 0; u < cfg.n_nodes; ++u) {
    std::size_t deg = draw_degree();
    picked.clear();
    while (picked.size() < deg) {
      auto v = static_cast<NodeId>(gen.next_below(cfg.n_nodes));
      if (v == u || picked.count(v)) continue;
      picked.insert(v);
      // Weight in (0,1]; strictly positive so normalization never hits a
      // zero row.
      edges.push_back({u, v, 1.0 - gen.next_unit()});
    }
  }
  return InfluenceGraph(cfg.n_nodes, std::move(edges),
                        std::vector<double>(cfg.n_nodes, cfg.default_alpha));
}

}  // namespace icint
