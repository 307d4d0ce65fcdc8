#pragma once

#include <cstdint>
#include <vector>

namespace icint {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

/// Edge probability semantics used by samplers and oracles.
enum class DiffusionMode {
  PlainIC,  // live with probability w
  ICInt,    // live with probability (1 - alpha[dst]) * w
};

using NodeSet = std::vector<NodeId>;  // sorted, distinct

}  // namespace icint
