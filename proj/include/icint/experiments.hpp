#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icint/graph.hpp"
#include "icint/rng.hpp"
#include "icint/types.hpp"

namespace icint {

/// 23-node organization tree: Director D, managers M1/M2, ten employees per
/// manager. alpha(D) = 0.95 - delta, alpha(M1) = 0.25 + delta, everyone else
/// 0.25; weights are the standard assignment (D's in-edges 0.5 each, manager
/// rows 0.5 from D plus 0.05 per employee, employee rows 1.0 from their
/// manager). Node 0 is D, 1 is M1, 2 is M2.
InfluenceGraph make_org_tree(double delta = 0.0);

constexpr NodeId kOrgTreeD = 0;
constexpr NodeId kOrgTreeM1 = 1;
constexpr NodeId kOrgTreeM2 = 2;

struct OrgSweepRow {
  double delta;
  double sigma_d;
  double se_d;
  double sigma_m1;
  double se_m1;
};

std::vector<OrgSweepRow> run_orgtree_sweep(const std::vector<double>& deltas,
                                           std::uint32_t n_samples,
                                           std::uint64_t seed);

struct AlphaPolicy {
  enum class Kind { Fixed, UniformRange, OutDegreeProportional };
  Kind kind = Kind::Fixed;
  double fixed = 0.5;
  double lo = 0.0;
  double hi = 1.0;
  std::string name() const;
};

AlphaPolicy parse_alpha_policy(const std::string& text);

/// One alpha vector per policy draw; out-degree proportional is
/// deterministic: alpha_i = d_out(i) / max_j d_out(j).
std::vector<double> assign_alphas(const InfluenceGraph& g,
                                  const AlphaPolicy& policy,
                                  rng::SplitMix& gen);

struct AlphaExperimentResult {
  std::vector<AlphaPolicy> policies;
  // curves[policy][run][step] = cumulative spread after step+1 seeds
  std::vector<std::vector<std::vector<double>>> curves;
  std::vector<std::vector<double>> mean_curve;  // per policy, per step
};

AlphaExperimentResult run_alpha_experiment(const InfluenceGraph& topology,
                                           const std::vector<AlphaPolicy>& policies,
                                           std::size_t n_runs, std::size_t k,
                                           std::uint32_t n_samples,
                                           std::uint64_t seed);

struct IcVsIcIntResult {
  std::vector<double> ic_curve;                   // cumulative, k steps
  std::vector<double> ic_curve_se;                // per-step sigma std error
  std::vector<std::vector<double>> icint_curves;  // per run
  std::vector<std::vector<double>> icint_curve_se;
  std::vector<double> overlap_percent;  // top-k seed-set overlap per run
};

/// Plain-IC greedy once, then n_runs IC-Int greedy passes with alpha
/// redrawn from U[0,1] per run; reports curves and top-k seed overlaps.
IcVsIcIntResult run_ic_vs_icint(const InfluenceGraph& topology, std::size_t k,
                                std::size_t n_runs, std::uint32_t n_samples,
                                std::uint64_t seed);

}  // namespace icint
