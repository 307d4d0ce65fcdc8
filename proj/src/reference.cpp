#include "icint/reference.hpp"

#include <algorithm>
#include <cmath>

#include "icint/errors.hpp"

namespace icint {

namespace {

long long total_count(const InfluenceGraph& g, const NodeSet& seeds,
                      const SamplerConfig& cfg) {
  long long total = 0;
  for (std::uint32_t s = 0; s < cfg.n_samples; ++s) {
    LiveEdgeSample sample = generate_sample(g, cfg, s);
    NodeSet sources = cfg.mode == DiffusionMode::ICInt
                          ? intrinsically_active(sample, seeds, g)
                          : seeds;
    total += reachable_count(sample, g, cfg.mode, sources, sources);
  }
  return total;
}

}  // namespace

SpreadEstimate reference_estimate_spread(const InfluenceGraph& g,
                                         const NodeSet& seeds,
                                         const SamplerConfig& cfg) {
  std::vector<int> counts(cfg.n_samples, 0);
  for (std::uint32_t s = 0; s < cfg.n_samples; ++s) {
    LiveEdgeSample sample = generate_sample(g, cfg, s);
    NodeSet sources = cfg.mode == DiffusionMode::ICInt
                          ? intrinsically_active(sample, seeds, g)
                          : seeds;
    counts[s] = reachable_count(sample, g, cfg.mode, sources, sources);
  }
  SpreadEstimate est;
  est.n_samples = cfg.n_samples;
  long long total = 0;
  for (int c : counts) total += c;
  est.mean = static_cast<double>(total) / counts.size();
  if (counts.size() > 1) {
    double ss = 0.0;
    for (int c : counts) {
      double d = c - est.mean;
      ss += d * d;
    }
    est.std_error = std::sqrt(ss / (counts.size() - 1) / counts.size());
  }
  return est;
}

SeedTrace reference_greedy(const InfluenceGraph& g, std::size_t k,
                           const SamplerConfig& cfg) {
  if (k < 1 || k > g.num_nodes()) throw InvalidKError("k out of range");
  SeedTrace trace;
  NodeSet seeds;
  long long current_total = 0;
  std::vector<char> selected(g.num_nodes(), 0);

  for (std::size_t step = 0; step < k; ++step) {
    NodeId best = kInvalidNode;
    long long best_gain = 0;
    bool have_best = false;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (selected[v]) continue;
      NodeSet trial = seeds;
      trial.insert(std::lower_bound(trial.begin(), trial.end(), v), v);
      long long gain = total_count(g, trial, cfg) - current_total;
      ++trace.evaluations;
      if (!have_best || gain > best_gain) {
        best = v;
        best_gain = gain;
        have_best = true;
      }
    }
    selected[best] = 1;
    seeds.insert(std::lower_bound(seeds.begin(), seeds.end(), best), best);
    current_total += best_gain;
    trace.seeds.push_back(best);
    trace.marginal_gain.push_back(static_cast<double>(best_gain) /
                                  cfg.n_samples);
    trace.cumulative_spread.push_back(static_cast<double>(current_total) /
                                      cfg.n_samples);
  }
  return trace;
}

}  // namespace icint
