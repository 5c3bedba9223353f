#include "pathwheel/detect.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "pathwheel/detail/smalldp.hpp"
#include "pathwheel/errors.hpp"

namespace pw {

namespace {

void check_limits(const DetectorLimits& limits) {
    if (limits.max_component_order_for_path_dp < 3 || limits.max_order_for_cycle_search < 3)
        throw std::invalid_argument("DetectorLimits: both limits must be at least 3");
}

// Local adjacency masks for a vertex subset, vertices renumbered 0..k-1
// in the order given.
std::vector<std::uint32_t> local_masks(const Graph& g, const VertexSet& verts) {
    std::vector<std::uint32_t> adj(verts.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (i != j && g.has_edge(verts[i], verts[j])) adj[i] |= std::uint32_t{1} << j;
    return adj;
}

void check_component_size(std::size_t k, int limit, const char* who) {
    if (static_cast<int>(k) > limit)
        throw ResourceLimitError(std::string(who) + ": component of order " + std::to_string(k) +
                                 " exceeds the limit " + std::to_string(limit));
    if (static_cast<int>(k) > detail::mask_dp_hard_cap)
        throw ResourceLimitError(std::string(who) + ": component of order " + std::to_string(k) +
                                 " exceeds the hard cap " + std::to_string(detail::mask_dp_hard_cap));
}

void check_whole_order(int order, int limit, const char* who) {
    if (order > limit)
        throw ResourceLimitError(std::string(who) + ": order " + std::to_string(order) +
                                 " exceeds the limit " + std::to_string(limit));
}

} // namespace

namespace detail {

int mask_longest_path(const std::vector<std::uint32_t>& adj) {
    int k = static_cast<int>(adj.size());
    if (k == 0) return 0;
    std::vector<std::uint32_t> dp(std::size_t{1} << k, 0);
    for (int v = 0; v < k; ++v) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    int best = 1;
    std::uint32_t full = (k == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        best = std::max(best, std::popcount(mask));
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return best;
}

int mask_longest_path_from(const std::vector<std::uint32_t>& adj, int x) {
    int k = static_cast<int>(adj.size());
    std::vector<std::uint32_t> dp(std::size_t{1} << k, 0);
    dp[std::uint32_t{1} << x] = std::uint32_t{1} << x;
    int best = 1;
    std::uint32_t full = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        best = std::max(best, std::popcount(mask));
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return best;
}

std::vector<int> mask_longest_path_between(const std::vector<std::uint32_t>& adj, int x) {
    int k = static_cast<int>(adj.size());
    std::vector<std::uint32_t> dp(std::size_t{1} << k, 0);
    dp[std::uint32_t{1} << x] = std::uint32_t{1} << x;
    std::vector<int> best(adj.size(), 0);
    best[static_cast<std::size_t>(x)] = 1;
    std::uint32_t full = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        int order = std::popcount(mask);
        std::uint32_t scan = ends;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            best[static_cast<std::size_t>(v)] = std::max(best[static_cast<std::size_t>(v)], order);
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return best;
}

std::uint32_t mask_cycle_lengths(const std::vector<std::uint32_t>& adj) {
    int k = static_cast<int>(adj.size());
    std::uint32_t lengths = 0;
    if (k < 3) return 0;
    std::vector<std::uint32_t> dp(std::size_t{1} << k, 0);
    // anchor = least vertex of the cycle; paths stay within {anchor..k-1}
    for (int a = 0; a + 2 < k; ++a) {
        std::uint32_t allowed = ((std::uint32_t{1} << k) - 1) & ~((std::uint32_t{1} << a) - 1);
        std::fill(dp.begin(), dp.end(), 0);
        dp[std::uint32_t{1} << a] = std::uint32_t{1} << a;
        for (std::uint32_t mask = std::uint32_t{1} << a; mask < (std::uint32_t{1} << k); ++mask) {
            if ((mask & allowed) != mask || !(mask & (std::uint32_t{1} << a))) continue;
            std::uint32_t ends = dp[mask];
            if (!ends) continue;
            int order = std::popcount(mask);
            std::uint32_t scan = ends;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                if (order >= 3 && v != a && (adj[v] >> a) & 1) lengths |= std::uint32_t{1} << order;
                std::uint32_t ext = adj[v] & allowed & ~mask;
                while (ext) {
                    int u = std::countr_zero(ext);
                    ext &= ext - 1;
                    dp[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
                }
            }
        }
    }
    return lengths;
}

} // namespace detail

int longest_path_order(const Graph& g, const DetectorLimits& limits) {
    check_limits(limits);
    int best = 0;
    for (const VertexSet& comp : components(g)) {
        check_component_size(comp.size(), limits.max_component_order_for_path_dp, "longest_path_order");
        best = std::max(best, detail::mask_longest_path(local_masks(g, comp)));
    }
    return best;
}

bool has_path(const Graph& g, int n, const DetectorLimits& limits) {
    if (n < 1) throw std::invalid_argument("has_path: n must be positive");
    return longest_path_order(g, limits) >= n;
}

namespace {

// Component of x as a sorted vertex list, plus x's local index within it.
std::pair<VertexSet, int> component_of(const Graph& g, int x) {
    for (VertexSet& comp : components(g)) {
        auto it = std::lower_bound(comp.begin(), comp.end(), x);
        if (it != comp.end() && *it == x)
            return {std::move(comp), static_cast<int>(it - comp.begin())};
    }
    throw std::invalid_argument("component_of: vertex out of range");
}

} // namespace

int longest_path_from(const Graph& g, int x, const DetectorLimits& limits) {
    check_limits(limits);
    if (x < 0 || x >= g.order()) throw std::invalid_argument("longest_path_from: vertex out of range");
    auto [comp, local_x] = component_of(g, x);
    check_component_size(comp.size(), limits.max_component_order_for_path_dp, "longest_path_from");
    return detail::mask_longest_path_from(local_masks(g, comp), local_x);
}

int longest_path_between(const Graph& g, int x, int y, const DetectorLimits& limits) {
    check_limits(limits);
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
        throw std::invalid_argument("longest_path_between: vertex out of range");
    if (x == y) throw std::invalid_argument("longest_path_between: endpoints must differ");
    auto [comp, local_x] = component_of(g, x);
    auto it = std::lower_bound(comp.begin(), comp.end(), y);
    if (it == comp.end() || *it != y) return 0; // different components
    check_component_size(comp.size(), limits.max_component_order_for_path_dp, "longest_path_between");
    auto table = detail::mask_longest_path_between(local_masks(g, comp), local_x);
    return table[static_cast<std::size_t>(it - comp.begin())];
}

int longest_cycle_order(const Graph& g, const DetectorLimits& limits) {
    check_limits(limits);
    check_whole_order(g.order(), limits.max_order_for_cycle_search, "longest_cycle_order");
    int best = 0;
    for (const VertexSet& comp : components(g)) {
        if (comp.size() < 3) continue;
        std::uint32_t lengths = detail::mask_cycle_lengths(local_masks(g, comp));
        if (lengths) best = std::max(best, 31 - std::countl_zero(lengths));
    }
    return best;
}

namespace {

// Depth-first search for a cycle on exactly m vertices whose least vertex
// is the anchor. The graph is first peeled to its 2-core.
struct CycleDfs {
    const std::vector<std::uint32_t>& adj;
    int m;
    int anchor = 0;
    std::uint32_t allowed = 0;

    bool extend(int v, std::uint32_t used, int depth) {
        if (depth == m) return (adj[v] >> anchor) & 1;
        std::uint32_t ext = adj[v] & allowed & ~used;
        // not enough vertices left to reach depth m
        if (std::popcount(allowed & ~used) < m - depth) return false;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            if (extend(u, used | (std::uint32_t{1} << u), depth + 1)) return true;
        }
        return false;
    }
};

} // namespace

bool has_cycle_exact(const Graph& g, int m, const DetectorLimits& limits) {
    check_limits(limits);
    if (m < 3) throw std::invalid_argument("has_cycle_exact: m must be at least 3");
    check_whole_order(g.order(), limits.max_order_for_cycle_search, "has_cycle_exact");
    int k = g.order();
    if (m > k) return false;

    VertexSet verts(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) verts[static_cast<std::size_t>(v)] = v;
    std::vector<std::uint32_t> adj = local_masks(g, verts);

    // peel to the 2-core: no vertex of degree < 2 lies on a cycle
    std::uint32_t alive = (k == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
    bool changed = true;
    while (changed) {
        changed = false;
        std::uint32_t scan = alive;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (std::popcount(adj[v] & alive) < 2) {
                alive &= ~(std::uint32_t{1} << v);
                changed = true;
            }
        }
    }
    if (std::popcount(alive) < m) return false;

    std::uint32_t candidates = alive;
    while (candidates) {
        int a = std::countr_zero(candidates);
        candidates &= candidates - 1;
        // vertices usable with this anchor: the anchor's reachable set
        // among surviving vertices of index >= a
        std::uint32_t high = alive & ~((std::uint32_t{2} << a) - 1);
        std::uint32_t region = std::uint32_t{1} << a;
        std::uint32_t frontier = region;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t scan = frontier;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                next |= adj[v] & high & ~region;
            }
            region |= next;
            frontier = next;
        }
        if (std::popcount(region) < m) continue;
        CycleDfs dfs{adj, m, a, region};
        if (dfs.extend(a, std::uint32_t{1} << a, 1)) return true;
    }
    return false;
}

bool has_wheel(const Graph& g, int m, const DetectorLimits& limits) {
    check_limits(limits);
    if (m < 3) throw std::invalid_argument("has_wheel: m must be at least 3");
    if (g.order() > limits.max_order_for_cycle_search + 1)
        throw ResourceLimitError("has_wheel: order " + std::to_string(g.order()) +
                                 " exceeds the limit " + std::to_string(limits.max_order_for_cycle_search + 1));
    std::vector<int> hubs(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) hubs[static_cast<std::size_t>(v)] = v;
    std::stable_sort(hubs.begin(), hubs.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int hub : hubs) {
        if (g.degree(hub) < m) break; // sorted: nobody further can host a rim
        if (has_cycle_exact(induced(g, g.neighbors(hub)), m, limits)) return true;
    }
    return false;
}

bool multipartite_cycle_exists(const std::vector<int>& parts, int m) {
    if (m < 3) throw std::invalid_argument("multipartite_cycle_exists: m must be at least 3");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("multipartite_cycle_exists: parts must be positive");
    // A C_m visits b_i vertices of part i; a circular arrangement with no
    // two consecutive vertices in one part exists iff every b_i <= floor(m/2).
    // Such a selection exists iff the caps alone can cover m.
    long long reachable = 0;
    for (int p : parts) reachable += std::min(p, m / 2);
    return reachable >= m;
}

bool cliques_complement_has_wheel(const std::vector<int>& parts, int m) {
    if (m < 3) throw std::invalid_argument("cliques_complement_has_wheel: m must be at least 3");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<int> rest;
        rest.reserve(parts.size() - 1);
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (j != i) rest.push_back(parts[j]);
        if (!rest.empty() && multipartite_cycle_exists(rest, m)) return true;
    }
    return false;
}

} // namespace pw
