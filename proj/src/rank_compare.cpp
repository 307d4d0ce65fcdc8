#include "icint/rank_compare.hpp"

#include <cmath>
#include <unordered_set>

#include "icint/errors.hpp"

namespace icint {

double jaccard(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::unordered_set<NodeId> sa(a.begin(), a.end());
  std::unordered_set<NodeId> sb(b.begin(), b.end());
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t inter = 0;
  for (NodeId v : sa) inter += sb.count(v);
  return static_cast<double>(inter) / (sa.size() + sb.size() - inter);
}

double rbo(const std::vector<NodeId>& a, const std::vector<NodeId>& b,
           double p) {
  if (!(p > 0.0 && p < 1.0))
    throw InvalidPError("rbo persistence must be in (0,1)");
  const std::size_t k = std::min(a.size(), b.size());
  if (k == 0) throw EmptyListError("rbo requires nonempty lists");

  std::unordered_set<NodeId> seen_a, seen_b;
  std::size_t overlap = 0;
  double sum = 0.0;
  double pd = 1.0;  // p^d
  for (std::size_t d = 1; d <= k; ++d) {
    NodeId x = a[d - 1];
    NodeId y = b[d - 1];
    if (x == y) {
      ++overlap;
    } else {
      if (seen_b.count(x)) ++overlap;
      if (seen_a.count(y)) ++overlap;
      seen_a.insert(x);
      seen_b.insert(y);
    }
    pd *= p;
    sum += static_cast<double>(overlap) / d * pd;
  }
  return static_cast<double>(overlap) / k * std::pow(p, static_cast<double>(k)) +
         (1.0 - p) / p * sum;
}

}  // namespace icint
