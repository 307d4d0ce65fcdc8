#include "icint/seed_selection.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "icint/errors.hpp"

namespace icint {

namespace {

// Per-sample incremental state for the fixed sample set. For each sample we
// keep the set R of nodes reachable from the current sources. The marginal
// count of candidate v in one sample is |R_v \ R| - 1 when v's intrinsic draw
// succeeds (every path from v to a node outside R avoids R, so a traversal
// that skips R visits exactly R_v \ R), and 0 otherwise.
class GreedyEngine {
 public:
  GreedyEngine(const InfluenceGraph& g, const SamplerConfig& cfg)
      : g_(g),
        mode_(cfg.mode),
        batch_(g, cfg),
        n_samples_(cfg.n_samples),
        reached_(static_cast<std::size_t>(cfg.n_samples) * g.num_nodes(), 0),
        n_sources_(cfg.n_samples, 0),
        reach_count_(cfg.n_samples, 0),
        reach_total_(0) {}

  // Total marginal count of v over all samples. Non-positive for nodes whose
  // activation only removes themselves from the counted set.
  long long gain_of(NodeId v) {
    long long total = 0;
#pragma omp parallel reduction(+ : total)
    {
      std::vector<NodeId> stack;
      std::vector<char> mark(g_.num_nodes(), 0);
      std::vector<NodeId> touched;
#pragma omp for schedule(static)
      for (long long si = 0; si < static_cast<long long>(n_samples_); ++si) {
        auto s = static_cast<std::uint32_t>(si);
        if (mode_ == DiffusionMode::ICInt && !batch_.active(s, v)) continue;
        total += sample_gain(s, v, stack, mark, touched);
      }
    }
    return total;
  }

  // Commit v as the next seed: grow each sample's reached set.
  void commit(NodeId v) {
    const std::size_t n = g_.num_nodes();
    long long added = 0;
#pragma omp parallel reduction(+ : added)
    {
      std::vector<NodeId> stack;
#pragma omp for schedule(static)
      for (long long si = 0; si < static_cast<long long>(n_samples_); ++si) {
        auto s = static_cast<std::uint32_t>(si);
        if (mode_ == DiffusionMode::ICInt && !batch_.active(s, v)) continue;
        ++n_sources_[s];
        char* reached = reached_.data() + static_cast<std::size_t>(s) * n;
        if (reached[v]) {
          continue;
        }
        stack.clear();
        reached[v] = 1;
        stack.push_back(v);
        int local = 1;
        while (!stack.empty()) {
          NodeId u = stack.back();
          stack.pop_back();
          for (EdgeId e : g_.out_edges(u)) {
            NodeId w = g_.edge(e).dst;
            if (!reached[w] && batch_.live(s, e)) {
              reached[w] = 1;
              stack.push_back(w);
              ++local;
            }
          }
        }
        reach_count_[s] += local;
        added += local;
      }
    }
    reach_total_ += added;
  }

  // Per-sample influenced-activation count for the committed set.
  int sample_count(std::uint32_t s) const {
    return reach_count_[s] - static_cast<int>(n_sources_[s]);
  }

  // Sum over samples of |R| - |sources|: n_samples * current spread.
  long long objective_total() const {
    long long src = 0;
    for (std::uint32_t c : n_sources_) src += c;
    return reach_total_ - src;
  }

  std::uint32_t n_samples() const { return n_samples_; }

 private:
  long long sample_gain(std::uint32_t s, NodeId v, std::vector<NodeId>& stack,
                        std::vector<char>& mark,
                        std::vector<NodeId>& touched) {
    const char* reached =
        reached_.data() + static_cast<std::size_t>(s) * g_.num_nodes();
    if (reached[v]) return -1;  // v leaves the counted set, reach unchanged
    stack.clear();
    touched.clear();
    mark[v] = 1;
    touched.push_back(v);
    stack.push_back(v);
    long long fresh = 0;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++fresh;
      for (EdgeId e : g_.out_edges(u)) {
        NodeId w = g_.edge(e).dst;
        if (!mark[w] && !reached[w] && batch_.live(s, e)) {
          mark[w] = 1;
          touched.push_back(w);
          stack.push_back(w);
        }
      }
    }
    for (NodeId t : touched) mark[t] = 0;
    return fresh - 1;
  }

  const InfluenceGraph& g_;
  DiffusionMode mode_;
  SampleBatch batch_;
  std::uint32_t n_samples_;
  std::vector<char> reached_;          // n_samples x n_nodes
  std::vector<std::uint32_t> n_sources_;
  std::vector<int> reach_count_;       // |R| per sample
  long long reach_total_;
};

void check_k(const InfluenceGraph& g, std::size_t k) {
  if (k < 1 || k > g.num_nodes())
    throw InvalidKError("k must be in [1, " + std::to_string(g.num_nodes()) +
                        "], got " + std::to_string(k));
}

void append_step(SeedTrace& trace, NodeId v, long long gain_total,
                 long long objective_total, std::uint32_t n) {
  trace.seeds.push_back(v);
  trace.marginal_gain.push_back(static_cast<double>(gain_total) / n);
  trace.cumulative_spread.push_back(static_cast<double>(objective_total) / n);
}

}  // namespace

SeedTrace greedy(const InfluenceGraph& g, std::size_t k,
                 const SamplerConfig& cfg) {
  check_k(g, k);
  GreedyEngine engine(g, cfg);
  const NodeId n = static_cast<NodeId>(g.num_nodes());
  std::vector<char> selected(n, 0);
  SeedTrace trace;

  for (std::size_t step = 0; step < k; ++step) {
    NodeId best = kInvalidNode;
    long long best_gain = 0;
    bool have_best = false;
    for (NodeId v = 0; v < n; ++v) {
      if (selected[v]) continue;
      long long gain = engine.gain_of(v);
      ++trace.evaluations;
      if (!have_best || gain > best_gain) {
        best = v;
        best_gain = gain;
        have_best = true;
      }
    }
    selected[best] = 1;
    engine.commit(best);
    append_step(trace, best, best_gain, engine.objective_total(),
                engine.n_samples());
  }
  return trace;
}

SeedTrace lazy_greedy(const InfluenceGraph& g, std::size_t k,
                      const SamplerConfig& cfg) {
  check_k(g, k);
  GreedyEngine engine(g, cfg);
  const NodeId n = static_cast<NodeId>(g.num_nodes());
  SeedTrace trace;

  struct Entry {
    long long gain;
    NodeId node;
    std::size_t step;  // step at which gain was computed
  };
  struct Order {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.gain != b.gain) return a.gain < b.gain;  // max-heap on gain
      return a.node > b.node;                        // then lowest id first
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Order> queue;

  // Initial sweep; candidate gains are independent, evaluate in parallel.
  {
    std::vector<long long> gains(n);
    for (NodeId v = 0; v < n; ++v) gains[v] = engine.gain_of(v);
    trace.evaluations += n;
    for (NodeId v = 0; v < n; ++v) queue.push({gains[v], v, 0});
  }

  for (std::size_t step = 0; step < k; ++step) {
    for (;;) {
      Entry top = queue.top();
      if (top.step == step) {
        queue.pop();
        engine.commit(top.node);
        append_step(trace, top.node, top.gain, engine.objective_total(),
                    engine.n_samples());
        break;
      }
      queue.pop();
      top.gain = engine.gain_of(top.node);
      ++trace.evaluations;
      top.step = step;
      queue.push(top);
    }
  }
  return trace;
}

std::vector<SpreadEstimate> evaluate_spread_curve(
    const InfluenceGraph& g, const std::vector<NodeId>& seeds_in_order,
    const SamplerConfig& cfg) {
  GreedyEngine engine(g, cfg);
  std::vector<SpreadEstimate> curve;
  curve.reserve(seeds_in_order.size());
  for (NodeId v : seeds_in_order) {
    engine.commit(v);
    SpreadEstimate est;
    est.n_samples = cfg.n_samples;
    long long total = 0;
    for (std::uint32_t s = 0; s < cfg.n_samples; ++s)
      total += engine.sample_count(s);
    est.mean = static_cast<double>(total) / cfg.n_samples;
    if (cfg.n_samples > 1) {
      double ss = 0.0;
      for (std::uint32_t s = 0; s < cfg.n_samples; ++s) {
        double d = engine.sample_count(s) - est.mean;
        ss += d * d;
      }
      est.std_error =
          std::sqrt(ss / (cfg.n_samples - 1) / cfg.n_samples);
    }
    curve.push_back(est);
  }
  return curve;
}

std::vector<std::pair<NodeId, double>> top_k_by_single_spread(
    const InfluenceGraph& g, std::size_t k, const SamplerConfig& cfg) {
  if (k > g.num_nodes())
    throw InvalidKError("k exceeds node count");
  GreedyEngine engine(g, cfg);
  const NodeId n = static_cast<NodeId>(g.num_nodes());
  std::vector<std::pair<NodeId, double>> scored(n);
  for (NodeId v = 0; v < n; ++v) {
    // With an empty committed set, gain_of(v) is n * sigma({v}).
    scored[v] = {v, static_cast<double>(engine.gain_of(v)) / cfg.n_samples};
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  scored.resize(k);
  return scored;
}

}  // namespace icint
