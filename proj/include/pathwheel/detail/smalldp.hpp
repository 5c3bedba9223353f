#pragma once

#include <cstdint>
#include <vector>

namespace pw::detail {

// Subset dynamic programming over mask graphs: adjacency given as one
// 32-bit neighbor mask per vertex, at most 26 vertices (the dp table is
// 2^k entries). Shared by the detectors and the lemma corpus kernel.

inline constexpr int mask_dp_hard_cap = 26;

// Longest path order over all starting vertices (0 for the empty graph).
int mask_longest_path(const std::vector<std::uint32_t>& adj);

// Longest order of a path with one endpoint fixed at x.
int mask_longest_path_from(const std::vector<std::uint32_t>& adj, int x);

// out[y] = longest order of a path with endpoints exactly {x, y}
// (out[x] = 1, 0 where no such path exists).
std::vector<int> mask_longest_path_between(const std::vector<std::uint32_t>& adj, int x);

// Bit L set iff the graph contains a cycle on exactly L vertices.
std::uint32_t mask_cycle_lengths(const std::vector<std::uint32_t>& adj);

} // namespace pw::detail
