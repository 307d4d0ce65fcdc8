#pragma once

#include <vector>

#include "icint/types.hpp"

namespace icint {

/// |a ∩ b| / |a ∪ b|; 1.0 when both sets are empty.
double jaccard(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

/// Extrapolated rank-biased overlap at depth k = min(|a|, |b|):
///   RBO_ext = (X_k / k) p^k + ((1-p)/p) * sum_{d=1..k} (X_d / d) p^d
/// where X_d is the overlap of the depth-d prefixes. Inputs are truncated to
/// the common depth; throws InvalidPError / EmptyListError.
double rbo(const std::vector<NodeId>& a, const std::vector<NodeId>& b,
           double p = 0.9);

}  // namespace icint
