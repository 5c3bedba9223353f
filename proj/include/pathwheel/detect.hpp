#pragma once

#include <vector>

#include "pathwheel/graph.hpp"

namespace pw {

// Size limits for the exact detectors. Exceeding a limit raises
// ResourceLimitError; there is no approximate fallback.
struct DetectorLimits {
    int max_component_order_for_path_dp = 24;
    int max_order_for_cycle_search = 16;
};

// Longest path / cycle orders are exact, computed by subset dynamic
// programming per component (paths) or anchored subset DP (cycles).
// "Contains" always means subgraph containment, never induced.

int longest_path_order(const Graph& g, const DetectorLimits& limits = {});
bool has_path(const Graph& g, int n, const DetectorLimits& limits = {});

// Longest path among those with one endpoint at x, and among those with
// endpoints exactly {x, y}. Order of the path in vertices; a single
// vertex counts as order 1; longest_path_between returns 0 when no x-y
// path exists (distinct components).
int longest_path_from(const Graph& g, int x, const DetectorLimits& limits = {});
int longest_path_between(const Graph& g, int x, int y, const DetectorLimits& limits = {});

int longest_cycle_order(const Graph& g, const DetectorLimits& limits = {}); // 0 if acyclic
bool has_cycle_exact(const Graph& g, int m, const DetectorLimits& limits = {}); // m >= 3

// Wheel: some hub vertex whose neighborhood induces a graph containing
// C_m. Hubs are visited in decreasing degree order and skipped outright
// when degree < m.
bool has_wheel(const Graph& g, int m, const DetectorLimits& limits = {}); // m >= 3

// Structural shortcut: does the complete multipartite graph with these
// part sizes contain C_m? Criterion: some selection b_i <= parts_i with
// sum m and every b_i <= floor(m/2).
bool multipartite_cycle_exists(const std::vector<int>& parts, int m);

// Wheel in the complement of a disjoint clique union: a hub in part i
// sees exactly the other parts, so the test reduces to a multipartite
// cycle with part i removed.
bool cliques_complement_has_wheel(const std::vector<int>& parts, int m);

} // namespace pw
