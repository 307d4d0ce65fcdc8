#pragma once

#include <vector>

#include "icint/graph.hpp"
#include "icint/types.hpp"

namespace icint {

struct CentralityVector {
  std::vector<double> c_a;         // per-node activation centrality
  std::vector<double> activation;  // linearized total activation probability
  bool converged = false;
  int iterations = 0;  // worst column
  double residual = 0.0;
};

struct ActivationProbabilities {
  std::vector<double> p;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
  bool clamped = false;  // whether any iterate left [0,1]
};

struct SolverOptions {
  double tol = 1e-10;
  // <= 0 means derive from the contraction rate: 10*ceil(log(tol)/log(1-a_min))
  // with a floor of 1000 (100000 when a_min is 0 and no rate exists).
  int max_iter = 0;
};

int default_max_iter(const InfluenceGraph& g, double tol);

/// Activation centrality from the linearized system: per node i, the column
/// of G = (I - (I-alpha)W)^{-1} alpha is solved iteratively and C_A(i) is its
/// off-diagonal sum. The activation vector solves the same operator against
/// the full alpha right-hand side (G * 1) so no dense matrix is formed.
CentralityVector solve_linear_system(const InfluenceGraph& g,
                                     const SolverOptions& opts = {});

/// Fixed point of the nonlinear per-node activation equation, iterated from
/// p = alpha with iterates clamped to [0,1].
ActivationProbabilities solve_nonlinear_fixed_point(const InfluenceGraph& g,
                                                    const SolverOptions& opts = {});

/// Top-k nodes by C_A descending, ties by ascending id. Throws
/// NotConvergedError if the linear solves did not converge.
std::vector<NodeId> rank_by_centrality(const InfluenceGraph& g, std::size_t k,
                                       const SolverOptions& opts = {});

}  // namespace icint
