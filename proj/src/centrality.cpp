#include "icint/centrality.hpp"

#include <algorithm>
#include <cmath>

#include "icint/errors.hpp"

namespace icint {

namespace {

// One application of M = (I - alpha) W to x, accumulated over in-edges.
void apply_operator(const InfluenceGraph& g, const std::vector<double>& x,
                    std::vector<double>& out) {
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    double acc = 0.0;
    for (EdgeId e : g.in_edges(v)) acc += g.edge(e).weight * x[g.edge(e).src];
    out[v] = (1.0 - g.alpha(v)) * acc;
  }
}

struct ColumnSolve {
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Solve (I - M) x = b by x <- b + M x; contraction when all alpha > 0.
ColumnSolve neumann_solve(const InfluenceGraph& g, const std::vector<double>& b,
                          std::vector<double>& x, double tol, int max_iter) {
  const std::size_t n = g.num_nodes();
  x = b;
  std::vector<double> mx(n, 0.0);
  ColumnSolve result;
  for (int it = 1; it <= max_iter; ++it) {
    apply_operator(g, x, mx);
    double diff = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double next = b[v] + mx[v];
      diff = std::max(diff, std::abs(next - x[v]));
      x[v] = next;
    }
    result.iterations = it;
    // ||x - (b + Mx)||_inf equals the update size of the next sweep; checking
    // the realized update keeps the stated residual contract.
    if (diff < tol) {
      result.residual = diff;
      result.converged = true;
      return result;
    }
    result.residual = diff;
  }
  return result;
}

}  // namespace

int default_max_iter(const InfluenceGraph& g, double tol) {
  double a_min = 1.0;
  for (double a : g.alphas()) a_min = std::min(a_min, a);
  if (a_min <= 0.0) return 100000;
  double rate = std::log(1.0 - a_min);
  if (rate >= 0.0) return 1000;  // a_min == 1, one sweep suffices
  int derived = static_cast<int>(10.0 * std::ceil(std::log(tol) / rate));
  return std::max(derived, 1000);
}

CentralityVector solve_linear_system(const InfluenceGraph& g,
                                     const SolverOptions& opts) {
  const std::size_t n = g.num_nodes();
  const int max_iter =
      opts.max_iter > 0 ? opts.max_iter : default_max_iter(g, opts.tol);
  CentralityVector out;
  out.c_a.assign(n, 0.0);
  out.converged = true;

  int worst_iter = 0;
  double worst_residual = 0.0;
  bool all_converged = true;

#pragma omp parallel
  {
    std::vector<double> b(n, 0.0);
    std::vector<double> x(n, 0.0);
#pragma omp for schedule(static) reduction(max : worst_iter, worst_residual) \
    reduction(&& : all_converged)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      std::fill(b.begin(), b.end(), 0.0);
      b[i] = g.alpha(static_cast<NodeId>(i));
      ColumnSolve cs = neumann_solve(g, b, x, opts.tol, max_iter);
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != static_cast<std::size_t>(i)) sum += x[j];
      out.c_a[i] = sum;
      worst_iter = std::max(worst_iter, cs.iterations);
      worst_residual = std::max(worst_residual, cs.residual);
      all_converged = all_converged && cs.converged;
    }
  }

  // Activation probabilities G*1 via a single solve against the full alpha
  // vector; avoids a nondeterministic cross-column reduction.
  std::vector<double> x(n, 0.0);
  ColumnSolve cs = neumann_solve(g, g.alphas(), x, opts.tol, max_iter);
  out.activation = std::move(x);
  out.iterations = std::max(worst_iter, cs.iterations);
  out.residual = std::max(worst_residual, cs.residual);
  out.converged = all_converged && cs.converged;
  return out;
}

ActivationProbabilities solve_nonlinear_fixed_point(const InfluenceGraph& g,
                                                    const SolverOptions& opts) {
  const std::size_t n = g.num_nodes();
  const int max_iter =
      opts.max_iter > 0 ? opts.max_iter : default_max_iter(g, opts.tol);
  ActivationProbabilities out;
  out.p = g.alphas();
  std::vector<double> next(n, 0.0);
  for (int it = 1; it <= max_iter; ++it) {
    double diff = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double prod = 1.0;
      for (EdgeId e : g.in_edges(v)) {
        const Edge& ed = g.edge(e);
        prod *= 1.0 - (1.0 - g.alpha(v)) * ed.weight * out.p[ed.src];
      }
      double val = g.alpha(v) + (1.0 - prod);
      if (val < 0.0 || val > 1.0) {
        out.clamped = true;
        val = std::clamp(val, 0.0, 1.0);
      }
      next[v] = val;
      diff = std::max(diff, std::abs(val - out.p[v]));
    }
    out.p.swap(next);
    out.iterations = it;
    out.residual = diff;
    if (diff < opts.tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

std::vector<NodeId> rank_by_centrality(const InfluenceGraph& g, std::size_t k,
                                       const SolverOptions& opts) {
  if (k > g.num_nodes()) throw InvalidKError("k exceeds node count");
  CentralityVector cv = solve_linear_system(g, opts);
  if (!cv.converged) throw NotConvergedError(cv.residual, cv.iterations);
  std::vector<NodeId> order(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&cv](NodeId a, NodeId b) {
    if (cv.c_a[a] != cv.c_a[b]) return cv.c_a[a] > cv.c_a[b];
    return a < b;
  });
  order.resize(k);
  return order;
}

}  // namespace icint
