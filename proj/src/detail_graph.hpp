#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace modc::detail {

inline constexpr std::uint32_t kNoEdge = 0xffffffffu;

struct SccResult {
  std::vector<std::uint32_t> component;  // node -> component id
  std::uint32_t count = 0;
  std::vector<std::uint32_t> size;  // component id -> node count
};

// Tarjan's algorithm, iterative, over graphs with at most two out-edges
// per node (kNoEdge marks an absent edge).
SccResult strongly_connected(const std::vector<std::array<std::uint32_t, 2>>& succ);

// Whether a node lies on some cycle: its component has two or more nodes,
// or it has a self-loop.
std::vector<char> on_cycle_flags(const std::vector<std::array<std::uint32_t, 2>>& succ,
                                 const SccResult& scc);

// Nodes from which some seed node is reachable (seeds included).
std::vector<char> reaches(const std::vector<std::array<std::uint32_t, 2>>& succ,
                          const std::vector<char>& seed);

}  // namespace modc::detail
