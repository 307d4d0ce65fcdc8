// Command-line front end: reproducible experiment pipelines over the library.
// All payloads are deterministic for a given --seed (no timing, no thread
// count in the output), so reruns are byte-identical.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "icint/centrality.hpp"
#include "icint/errors.hpp"
#include "icint/estimation.hpp"
#include "icint/experiments.hpp"
#include "icint/graph.hpp"
#include "icint/graphgen.hpp"
#include "icint/io.hpp"
#include "icint/rank_compare.hpp"
#include "icint/sampling.hpp"
#include "icint/seed_selection.hpp"
#include "icint/spread.hpp"

namespace {

using nlohmann::json;
using namespace icint;

constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::uint32_t samples = 1000;
  int threads = 0;
  std::string output;  // empty: stdout
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw ValidationError("cannot write file: " + g.output);
  out << text;
}

// config string excludes --threads and --output on purpose: neither may
// influence the payload.
json metadata(const std::string& command, const GlobalOpts& g,
              const std::string& config) {
  return {{"tool", "icint"},
          {"version", kVersion},
          {"command", command},
          {"seed", g.seed},
          {"config_hash", hex64(fnv1a64(command + "|" + config))}};
}

void emit_json(const GlobalOpts& g, const std::string& command,
               const std::string& config, json result) {
  json payload = {{"metadata", metadata(command, g, config)},
                  {"result", std::move(result)}};
  emit(g, payload.dump(2) + "\n");
}

DiffusionMode parse_mode(const std::string& text) {
  if (text == "ic") return DiffusionMode::PlainIC;
  if (text == "icint") return DiffusionMode::ICInt;
  throw ValidationError("unknown mode: " + text + " (expected ic|icint)");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

NodeId node_by_label(const InfluenceGraph& g, const std::string& label) {
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (g.label(v) == label) return v;
  throw ValidationError("unknown node label: " + label);
}

NodeSet parse_seed_set(const InfluenceGraph& g, const std::string& text) {
  NodeSet seeds;
  for (const std::string& label : split_csv(text))
    seeds.push_back(node_by_label(g, label));
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return seeds;
}

json labels_of(const InfluenceGraph& g, const std::vector<NodeId>& nodes) {
  json out = json::array();
  for (NodeId v : nodes) out.push_back(g.label(v));
  return out;
}

struct GraphArgs {
  std::string edges;
  std::string nodes;
  double default_alpha = 0.5;

  void attach(CLI::App* cmd, bool nodes_needed = true) {
    cmd->add_option("--graph", edges, "edge TSV (src<TAB>dst<TAB>weight)")
        ->required();
    auto* n = cmd->add_option("--nodes", nodes, "node TSV (node<TAB>alpha)");
    (void)nodes_needed;
    (void)n;
    cmd->add_option("--default-alpha", default_alpha,
                    "alpha for nodes missing from --nodes");
  }

  InfluenceGraph load() const {
    return load_graph(edges, nodes, default_alpha);
  }

  std::string config() const {
    std::ostringstream os;
    os << "graph=" << edges << ";nodes=" << nodes
       << ";default_alpha=" << default_alpha;
    return os.str();
  }
};

json trace_json(const InfluenceGraph& g, const SeedTrace& t) {
  return {{"seeds", labels_of(g, t.seeds)},
          {"ranking", labels_of(g, t.seeds)},
          {"marginal_gain", t.marginal_gain},
          {"cumulative_spread", t.cumulative_spread},
          {"evaluations", t.evaluations}};
}

int run(int argc, char** argv) {
  CLI::App app{"influence mining toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "master RNG seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Monte Carlo sample count")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0: runtime default)");
  app.add_option("--output", g.output, "output path (default: stdout)");

  // normalize
  auto* normalize = app.add_subcommand(
      "normalize", "weighted-cascade normalize an edge list");
  GraphArgs norm_in;
  norm_in.attach(normalize);
  std::string norm_out_edges, norm_out_nodes;
  normalize->add_option("--out-edges", norm_out_edges, "normalized edge TSV")
      ->required();
  normalize->add_option("--out-nodes", norm_out_nodes, "node TSV copy");

  // spread
  auto* spread = app.add_subcommand("spread", "estimate sigma(S)");
  GraphArgs spread_in;
  spread_in.attach(spread);
  std::string spread_seeds, spread_mode = "icint";
  bool spread_exact = false;
  spread->add_option("--seeds", spread_seeds, "comma-separated node labels")
      ->required();
  spread->add_option("--mode", spread_mode, "ic|icint")->capture_default_str();
  spread->add_flag("--exact", spread_exact, "exact enumeration oracle");

  // greedy
  auto* greedy_cmd = app.add_subcommand("greedy", "greedy seed selection");
  GraphArgs greedy_in;
  greedy_in.attach(greedy_cmd);
  std::size_t greedy_k = 1;
  std::string greedy_mode = "icint";
  bool greedy_lazy = false;
  greedy_cmd->add_option("--k", greedy_k, "number of seeds")->required();
  greedy_cmd->add_option("--mode", greedy_mode, "ic|icint")
      ->capture_default_str();
  greedy_cmd->add_flag("--lazy", greedy_lazy, "lazy evaluation");

  // centrality
  auto* centrality_cmd =
      app.add_subcommand("centrality", "activation centrality ranking");
  GraphArgs cent_in;
  cent_in.attach(centrality_cmd);
  std::size_t cent_k = 10;
  SolverOptions cent_opts;
  centrality_cmd->add_option("--k", cent_k, "ranking depth")
      ->capture_default_str();
  centrality_cmd->add_option("--tol", cent_opts.tol, "solver tolerance")
      ->capture_default_str();
  centrality_cmd->add_option("--max-iter", cent_opts.max_iter,
                             "iteration cap (<=0: derived)");

  // compare
  auto* compare = app.add_subcommand("compare", "compare two rankings");
  std::string cmp_a, cmp_b, cmp_ks = "10,20,30,50";
  double cmp_p = 0.9;
  compare->add_option("--a", cmp_a, "first ranking JSON")->required();
  compare->add_option("--b", cmp_b, "second ranking JSON")->required();
  compare->add_option("--k", cmp_ks, "comma-separated depths")
      ->capture_default_str();
  compare->add_option("--rbo-p", cmp_p, "RBO persistence")
      ->capture_default_str();

  // ingest
  auto* ingest = app.add_subcommand(
      "ingest", "estimate graph parameters from activity logs");
  std::string ing_follows, ing_interactions, ing_intrinsic;
  std::string ing_out_edges, ing_out_nodes;
  double ing_alpha = 0.5;
  ingest->add_option("--followers", ing_follows, "user<TAB>follower TSV")
      ->required();
  ingest->add_option("--interactions", ing_interactions,
                     "followee<TAB>follower<TAB>count TSV");
  ingest->add_option("--intrinsic", ing_intrinsic,
                     "user<TAB>intrinsic_count TSV");
  ingest->add_option("--out-edges", ing_out_edges, "normalized edge TSV")
      ->required();
  ingest->add_option("--out-nodes", ing_out_nodes, "node alpha TSV")
      ->required();
  ingest->add_option("--default-alpha", ing_alpha,
                     "alpha for nodes with no activity");

  // sample-graph
  auto* sample_graph =
      app.add_subcommand("sample-graph", "snowball-sample a follow graph");
  std::string sg_follows, sg_seed_user, sg_out_edges;
  SnowballConfig sg_cfg;
  sample_graph->add_option("--followers", sg_follows, "full follow TSV")
      ->required();
  sample_graph->add_option("--seed-user", sg_seed_user, "starting user")
      ->required();
  sample_graph->add_option("--target", sg_cfg.target_nodes, "node target")
      ->capture_default_str();
  sample_graph->add_option("--k-in", sg_cfg.k_in, "frontier picks per round")
      ->capture_default_str();
  sample_graph->add_option("--k-out", sg_cfg.k_out, "out-degree floor")
      ->capture_default_str();
  sample_graph->add_option("--max-rounds", sg_cfg.max_rounds, "round cap")
      ->capture_default_str();
  sample_graph->add_option("--out-edges", sg_out_edges, "sampled follow TSV")
      ->required();

  // orgtree-sweep
  auto* orgtree = app.add_subcommand(
      "orgtree-sweep", "single-node spread sweep on the built-in org tree");
  double ot_min = 0.05, ot_max = 0.45, ot_step = 0.05;
  orgtree->add_option("--delta-min", ot_min)->capture_default_str();
  orgtree->add_option("--delta-max", ot_max)->capture_default_str();
  orgtree->add_option("--delta-step", ot_step)->capture_default_str();

  // alpha-experiment
  auto* alpha_exp = app.add_subcommand(
      "alpha-experiment", "greedy spread under alpha assignment policies");
  GraphArgs ae_in;
  ae_in.attach(alpha_exp);
  std::vector<std::string> ae_policies;
  std::size_t ae_runs = 10, ae_k = 30;
  alpha_exp
      ->add_option("--policy", ae_policies,
                   "fixed:x | uniform:lo,hi | outdeg (repeatable)")
      ->required();
  alpha_exp->add_option("--runs", ae_runs, "alpha draws per policy")
      ->capture_default_str();
  alpha_exp->add_option("--k", ae_k, "seeds per run")->capture_default_str();

  // ic-vs-icint
  auto* icvs = app.add_subcommand(
      "ic-vs-icint", "plain-IC curve vs randomized intrinsic-activation runs");
  GraphArgs icvs_in;
  icvs_in.attach(icvs);
  std::size_t icvs_runs = 10, icvs_k = 30;
  icvs->add_option("--runs", icvs_runs, "random alpha draws")
      ->capture_default_str();
  icvs->add_option("--k", icvs_k, "seeds per run")->capture_default_str();

  // gen-graph
  auto* gen = app.add_subcommand("gen-graph", "random power-law graph");
  PowerLawConfig gen_cfg;
  std::string gen_out_edges, gen_out_nodes;
  gen->add_option("--n", gen_cfg.n_nodes, "node count")->capture_default_str();
  gen->add_option("--exponent", gen_cfg.exponent, "out-degree tail exponent")
      ->capture_default_str();
  gen->add_option("--min-degree", gen_cfg.min_degree)->capture_default_str();
  gen->add_option("--max-degree", gen_cfg.max_degree, "0: n/10")
      ->capture_default_str();
  gen->add_option("--alpha", gen_cfg.default_alpha, "uniform alpha value")
      ->capture_default_str();
  gen->add_option("--out-edges", gen_out_edges)->required();
  gen->add_option("--out-nodes", gen_out_nodes);

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

  if (*normalize) {
    InfluenceGraph graph = normalize_weighted_cascade(norm_in.load());
    write_edge_tsv(graph, norm_out_edges);
    if (!norm_out_nodes.empty()) write_node_tsv(graph, norm_out_nodes);
    emit_json(g, "normalize", norm_in.config(),
              {{"n_nodes", graph.num_nodes()},
               {"n_edges", graph.num_edges()},
               {"normalized", true}});
    return 0;
  }

  if (*spread) {
    InfluenceGraph graph = spread_in.load();
    DiffusionMode mode = parse_mode(spread_mode);
    NodeSet seeds = parse_seed_set(graph, spread_seeds);
    std::ostringstream cfg;
    cfg << spread_in.config() << ";seeds=" << spread_seeds
        << ";mode=" << spread_mode << ";samples=" << g.samples
        << ";exact=" << spread_exact << ";seed=" << g.seed;
    json result;
    if (spread_exact) {
      result = {{"mean", exact_spread(graph, seeds, mode)},
                {"exact", true}};
    } else {
      SpreadEstimate est =
          estimate_spread(graph, seeds, {g.seed, g.samples, mode});
      result = {{"mean", est.mean},
                {"std_error", est.std_error},
                {"n_samples", est.n_samples}};
    }
    emit_json(g, "spread", cfg.str(), std::move(result));
    return 0;
  }

  if (*greedy_cmd) {
    InfluenceGraph graph = greedy_in.load();
    SamplerConfig cfg{g.seed, g.samples, parse_mode(greedy_mode)};
    SeedTrace trace = greedy_lazy ? lazy_greedy(graph, greedy_k, cfg)
                                  : greedy(graph, greedy_k, cfg);
    std::ostringstream c;
    c << greedy_in.config() << ";k=" << greedy_k << ";mode=" << greedy_mode
      << ";lazy=" << greedy_lazy << ";samples=" << g.samples
      << ";seed=" << g.seed;
    emit_json(g, "greedy", c.str(), trace_json(graph, trace));
    return 0;
  }

  if (*centrality_cmd) {
    InfluenceGraph graph = cent_in.load();
    if (!graph.is_normalized())
      throw ValidationError("centrality requires a normalized graph");
    CentralityVector cv = solve_linear_system(graph, cent_opts);
    if (!cv.converged) throw NotConvergedError(cv.residual, cv.iterations);
    std::vector<NodeId> top = rank_by_centrality(graph, cent_k, cent_opts);
    json c_a = json::object();
    for (NodeId v = 0; v < graph.num_nodes(); ++v)
      c_a[graph.label(v)] = cv.c_a[v];
    std::ostringstream c;
    c << cent_in.config() << ";k=" << cent_k << ";tol=" << cent_opts.tol
      << ";max_iter=" << cent_opts.max_iter;
    emit_json(g, "centrality", c.str(),
              {{"c_a", std::move(c_a)},
               {"top_k", labels_of(graph, top)},
               {"ranking", labels_of(graph, top)},
               {"converged", cv.converged},
               {"iterations", cv.iterations}});
    return 0;
  }

  if (*compare) {
    auto load_ranking = [](const std::string& path) {
      std::ifstream in(path);
      if (!in) throw ValidationError("cannot open file: " + path);
      json j = json::parse(in, nullptr, false);
      if (j.is_discarded())
        throw ValidationError("invalid JSON ranking file: " + path);
      const json* r = nullptr;
      if (j.contains("result") && j["result"].contains("ranking"))
        r = &j["result"]["ranking"];
      else if (j.contains("ranking"))
        r = &j["ranking"];
      else
        throw ValidationError("no ranking field in " + path);
      return r->get<std::vector<std::string>>();
    };
    std::vector<std::string> ra = load_ranking(cmp_a);
    std::vector<std::string> rb = load_ranking(cmp_b);
    std::unordered_map<std::string, NodeId> intern;
    auto to_ids = [&intern](const std::vector<std::string>& labels) {
      std::vector<NodeId> ids;
      for (const std::string& s : labels) {
        auto [it, fresh] =
            intern.emplace(s, static_cast<NodeId>(intern.size()));
        (void)fresh;
        ids.push_back(it->second);
      }
      return ids;
    };
    std::vector<NodeId> ia = to_ids(ra), ib = to_ids(rb);
    json rows = json::array();
    for (const std::string& ks : split_csv(cmp_ks)) {
      std::size_t k = std::stoull(ks);
      if (k == 0) throw InvalidKError("k must be positive");
      std::vector<NodeId> pa(ia.begin(),
                             ia.begin() + std::min(k, ia.size()));
      std::vector<NodeId> pb(ib.begin(),
                             ib.begin() + std::min(k, ib.size()));
      rows.push_back({{"k", k},
                      {"jaccard", jaccard(pa, pb)},
                      {"rbo", rbo(pa, pb, cmp_p)}});
    }
    std::ostringstream c;
    c << "a=" << cmp_a << ";b=" << cmp_b << ";k=" << cmp_ks
      << ";rbo_p=" << cmp_p;
    emit_json(g, "compare", c.str(), {{"rows", std::move(rows)}});
    return 0;
  }

  if (*ingest) {
    FollowEdgeList follows = load_follow_edges(ing_follows);
    LoadedInteractions loaded =
        load_interactions(follows.nodes, ing_interactions, ing_intrinsic);
    InteractionGraphResult built =
        build_interaction_graph(follows, loaded.log, ing_alpha);
    write_edge_tsv(built.graph, ing_out_edges);
    write_node_tsv(built.graph, ing_out_nodes);
    std::ostringstream c;
    c << "followers=" << ing_follows << ";interactions=" << ing_interactions
      << ";intrinsic=" << ing_intrinsic << ";default_alpha=" << ing_alpha;
    emit_json(g, "ingest", c.str(),
              {{"n_nodes", built.graph.num_nodes()},
               {"n_edges", built.graph.num_edges()},
               {"dropped_pairs", built.dropped_pairs},
               {"dropped_rows", loaded.dropped_rows},
               {"no_activity", built.no_activity.size()}});
    return 0;
  }

  if (*sample_graph) {
    TsvFollowerProvider provider(sg_follows);
    sg_cfg.injection_seed = g.seed;
    FollowEdgeList sampled = snowball_sample(provider, sg_seed_user, sg_cfg);
    write_follow_edges_tsv(sampled, sg_out_edges);
    std::ostringstream c;
    c << "followers=" << sg_follows << ";seed_user=" << sg_seed_user
      << ";target=" << sg_cfg.target_nodes << ";k_in=" << sg_cfg.k_in
      << ";k_out=" << sg_cfg.k_out << ";max_rounds=" << sg_cfg.max_rounds
      << ";seed=" << g.seed;
    emit_json(g, "sample-graph", c.str(),
              {{"n_nodes", sampled.nodes.size()},
               {"n_edges", sampled.edges.size()},
               {"rounds", sampled.rounds},
               {"reached_target", sampled.reached_target}});
    return 0;
  }

  if (*orgtree) {
    if (ot_step <= 0) throw ValidationError("delta step must be positive");
    std::vector<double> deltas;
    for (double d = ot_min; d <= ot_max + 1e-12; d += ot_step)
      deltas.push_back(d);
    auto rows = run_orgtree_sweep(deltas, g.samples, g.seed);
    std::ostringstream c;
    c << "delta_min=" << ot_min << ";delta_max=" << ot_max
      << ";delta_step=" << ot_step << ";samples=" << g.samples
      << ";seed=" << g.seed;
    std::ostringstream csv;
    csv.precision(17);
    csv << "# tool=icint version=" << kVersion
        << " command=orgtree-sweep seed=" << g.seed
        << " config_hash=" << hex64(fnv1a64("orgtree-sweep|" + c.str()))
        << "\n";
    csv << "delta,sigma_d,se_d,sigma_m1,se_m1\n";
    for (const auto& r : rows)
      csv << r.delta << ',' << r.sigma_d << ',' << r.se_d << ','
          << r.sigma_m1 << ',' << r.se_m1 << '\n';
    emit(g, csv.str());
    return 0;
  }

  if (*alpha_exp) {
    InfluenceGraph graph = ae_in.load();
    std::vector<AlphaPolicy> policies;
    for (const std::string& p : ae_policies)
      policies.push_back(parse_alpha_policy(p));
    AlphaExperimentResult res = run_alpha_experiment(
        graph, policies, ae_runs, ae_k, g.samples, g.seed);
    json per_policy = json::array();
    for (std::size_t i = 0; i < policies.size(); ++i)
      per_policy.push_back({{"policy", policies[i].name()},
                            {"mean_curve", res.mean_curve[i]},
                            {"curves", res.curves[i]}});
    std::ostringstream c;
    c << ae_in.config() << ";runs=" << ae_runs << ";k=" << ae_k
      << ";samples=" << g.samples << ";seed=" << g.seed;
    for (const auto& p : policies) c << ";policy=" << p.name();
    emit_json(g, "alpha-experiment", c.str(),
              {{"policies", std::move(per_policy)}});
    return 0;
  }

  if (*icvs) {
    InfluenceGraph graph = icvs_in.load();
    IcVsIcIntResult res =
        run_ic_vs_icint(graph, icvs_k, icvs_runs, g.samples, g.seed);
    std::ostringstream c;
    c << icvs_in.config() << ";runs=" << icvs_runs << ";k=" << icvs_k
      << ";samples=" << g.samples << ";seed=" << g.seed;
    emit_json(g, "ic-vs-icint", c.str(),
              {{"ic_curve", res.ic_curve},
               {"ic_curve_se", res.ic_curve_se},
               {"icint_curves", res.icint_curves},
               {"icint_curve_se", res.icint_curve_se},
               {"overlap_percent", res.overlap_percent}});
    return 0;
  }

  if (*gen) {
    gen_cfg.seed = g.seed;
    InfluenceGraph graph = gen_power_law_graph(gen_cfg);
    write_edge_tsv(graph, gen_out_edges);
    if (!gen_out_nodes.empty()) write_node_tsv(graph, gen_out_nodes);
    std::ostringstream c;
    c << "n=" << gen_cfg.n_nodes << ";exponent=" << gen_cfg.exponent
      << ";min_degree=" << gen_cfg.min_degree
      << ";max_degree=" << gen_cfg.max_degree
      << ";alpha=" << gen_cfg.default_alpha << ";seed=" << g.seed;
    emit_json(g, "gen-graph", c.str(),
              {{"n_nodes", graph.num_nodes()},
               {"n_edges", graph.num_edges()}});
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const icint::NotConvergedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const icint::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
