#include "icint/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "icint/errors.hpp"
#include "icint/seed_selection.hpp"
#include "icint/spread.hpp"

namespace icint {

InfluenceGraph make_org_tree(double delta) {
  constexpr std::size_t kEmployeesPerManager = 10;
  const std::size_t n = 3 + 2 * kEmployeesPerManager;
  std::vector<RawEdge> edges;
  std::vector<double> alphas(n, 0.25);
  std::vector<std::string> labels(n);

  alphas[kOrgTreeD] = 0.95 - delta;
  alphas[kOrgTreeM1] = 0.25 + delta;
  labels[kOrgTreeD] = "D";
  labels[kOrgTreeM1] = "M1";
  labels[kOrgTreeM2] = "M2";

  // Managers influence the Director equally.
  edges.push_back({kOrgTreeM1, kOrgTreeD, 0.5});
  edges.push_back({kOrgTreeM2, kOrgTreeD, 0.5});
  // Each manager row: 0.5 from D and 0.05 from each of their ten employees.
  edges.push_back({kOrgTreeD, kOrgTreeM1, 0.5});
  edges.push_back({kOrgTreeD, kOrgTreeM2, 0.5});
  for (std::size_t i = 0; i < kEmployeesPerManager; ++i) {
    auto e1 = static_cast<NodeId>(3 + i);
    auto e2 = static_cast<NodeId>(3 + kEmployeesPerManager + i);
    labels[e1] = "E" + std::to_string(i + 1);
    labels[e2] = "E" + std::to_string(kEmployeesPerManager + i + 1);
    edges.push_back({e1, kOrgTreeM1, 0.05});
    edges.push_back({e2, kOrgTreeM2, 0.05});
    // Employee rows carry weight 1.0 from their manager.
    edges.push_back({kOrgTreeM1, e1, 1.0});
    edges.push_back({kOrgTreeM2, e2, 1.0});
  }
  return InfluenceGraph(n, std::move(edges), std::move(alphas),
                        std::move(labels));
}

std::vector<OrgSweepRow> run_orgtree_sweep(const std::vector<double>& deltas,
                                           std::uint32_t n_samples,
                                           std::uint64_t seed) {
  std::vector<OrgSweepRow> rows;
  for (double delta : deltas) {
    InfluenceGraph g = make_org_tree(delta);
    SamplerConfig cfg{seed, n_samples, DiffusionMode::ICInt};
    SpreadEstimate d = estimate_spread_icint(g, {kOrgTreeD}, cfg);
    SpreadEstimate m1 = estimate_spread_icint(g, {kOrgTreeM1}, cfg);
    rows.push_back({delta, d.mean, d.std_error, m1.mean, m1.std_error});
  }
  return rows;
}

std::string AlphaPolicy::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Fixed:
      os << "fixed:" << fixed;
      break;
    case Kind::UniformRange:
      os << "uniform:" << lo << "," << hi;
      break;
    case Kind::OutDegreeProportional:
      os << "outdeg";
      break;
  }
  return os.str();
}

AlphaPolicy parse_alpha_policy(const std::string& text) {
  AlphaPolicy p;
  if (text == "outdeg") {
    p.kind = AlphaPolicy::Kind::OutDegreeProportional;
    return p;
  }
  auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (head == "fixed" && colon != std::string::npos) {
    p.kind = AlphaPolicy::Kind::Fixed;
    p.fixed = std::stod(text.substr(colon + 1));
    if (p.fixed < 0.0 || p.fixed > 1.0)
      throw ValidationError("fixed alpha out of [0,1]");
    return p;
  }
  if (head == "uniform" && colon != std::string::npos) {
    auto comma = text.find(',', colon);
    if (comma == std::string::npos)
      throw ValidationError("uniform policy needs lo,hi: " + text);
    p.kind = AlphaPolicy::Kind::UniformRange;
    p.lo = std::stod(text.substr(colon + 1, comma - colon - 1));
    p.hi = std::stod(text.substr(comma + 1));
    if (!(0.0 <= p.lo && p.lo <= p.hi && p.hi <= 1.0))
      throw ValidationError("uniform range out of order or out of [0,1]");
    return p;
  }
  throw ValidationError("unknown alpha policy: " + text);
}

std::vector<double> assign_alphas(const InfluenceGraph& g,
                                  const AlphaPolicy& policy,
                                  rng::SplitMix& gen) {
  std::vector<double> alphas(g.num_nodes());
  switch (policy.kind) {
    case AlphaPolicy::Kind::Fixed:
      std::fill(alphas.begin(), alphas.end(), policy.fixed);
      break;
    case AlphaPolicy::Kind::UniformRange:
      for (double& a : alphas) a = gen.next_in(policy.lo, policy.hi);
      break;
    case AlphaPolicy::Kind::OutDegreeProportional: {
      std::size_t max_deg = 0;
      for (NodeId v = 0; v < g.num_nodes(); ++v)
        max_deg = std::max(max_deg, g.out_degree(v));
      for (NodeId v = 0; v < g.num_nodes(); ++v)
        alphas[v] = max_deg == 0
                        ? 0.0
                        : static_cast<double>(g.out_degree(v)) / max_deg;
      break;
    }
  }
  return alphas;
}

AlphaExperimentResult run_alpha_experiment(
    const InfluenceGraph& topology, const std::vector<AlphaPolicy>& policies,
    std::size_t n_runs, std::size_t k, std::uint32_t n_samples,
    std::uint64_t seed) {
  AlphaExperimentResult out;
  out.policies = policies;
  out.curves.resize(policies.size());
  out.mean_curve.assign(policies.size(), std::vector<double>(k, 0.0));

  for (std::size_t pi = 0; pi < policies.size(); ++pi) {
    for (std::size_t run = 0; run < n_runs; ++run) {
      rng::SplitMix gen(rng::counter_hash(seed, pi, run, 0x616C7068ULL));
      InfluenceGraph g =
          with_alphas(topology, assign_alphas(topology, policies[pi], gen));
      SamplerConfig cfg{gen.next_u64(), n_samples, DiffusionMode::ICInt};
      SeedTrace trace = lazy_greedy(g, k, cfg);
      out.curves[pi].push_back(trace.cumulative_spread);
      for (std::size_t s = 0; s < k; ++s)
        out.mean_curve[pi][s] += trace.cumulative_spread[s];
    }
    for (double& m : out.mean_curve[pi]) m /= n_runs;
  }
  return out;
}

IcVsIcIntResult run_ic_vs_icint(const InfluenceGraph& topology, std::size_t k,
                                std::size_t n_runs, std::uint32_t n_samples,
                                std::uint64_t seed) {
  IcVsIcIntResult out;
  SamplerConfig ic_cfg{rng::mix64(seed), n_samples, DiffusionMode::PlainIC};
  SeedTrace ic_trace = lazy_greedy(topology, k, ic_cfg);
  for (const SpreadEstimate& e :
       evaluate_spread_curve(topology, ic_trace.seeds, ic_cfg)) {
    out.ic_curve.push_back(e.mean);
    out.ic_curve_se.push_back(e.std_error);
  }

  for (std::size_t run = 0; run < n_runs; ++run) {
    rng::SplitMix gen(rng::counter_hash(seed, run, 0, 0x69636963ULL));
    std::vector<double> alphas(topology.num_nodes());
    for (double& a : alphas) a = gen.next_unit();
    InfluenceGraph g = with_alphas(topology, std::move(alphas));
    SamplerConfig cfg{gen.next_u64(), n_samples, DiffusionMode::ICInt};
    SeedTrace trace = lazy_greedy(g, k, cfg);
    std::vector<double> curve, se;
    for (const SpreadEstimate& e :
         evaluate_spread_curve(g, trace.seeds, cfg)) {
      curve.push_back(e.mean);
      se.push_back(e.std_error);
    }
    out.icint_curves.push_back(std::move(curve));
    out.icint_curve_se.push_back(std::move(se));

    std::size_t inter = 0;
    for (NodeId v : trace.seeds)
      inter += std::count(ic_trace.seeds.begin(), ic_trace.seeds.end(), v);
    out.overlap_percent.push_back(100.0 * inter / k);
  }
  return out;
}

}  // namespace icint
