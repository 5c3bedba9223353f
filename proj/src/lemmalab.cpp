#include "pathwheel/lemmalab.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathwheel/detail/smalldp.hpp"
#include "pathwheel/errors.hpp"

namespace pw::lemmalab {

std::string to_string(LemmaId id) {
    switch (id) {
    case LemmaId::L2_1: return "L2.1";
    case LemmaId::L2_2: return "L2.2";
    case LemmaId::L2_3: return "L2.3";
    case LemmaId::L2_4: return "L2.4";
    case LemmaId::L2_5: return "L2.5";
    case LemmaId::L2_6: return "L2.6";
    case LemmaId::L2_7: return "L2.7";
    case LemmaId::L3:   return "L3";
    case LemmaId::L4_1: return "L4.1";
    case LemmaId::L4_2: return "L4.2";
    case LemmaId::L4_3: return "L4.3";
    case LemmaId::L5:   return "L5";
    case LemmaId::L6:   return "L6";
    case LemmaId::L7:   return "L7";
    case LemmaId::L8:   return "L8";
    case LemmaId::L9:   return "L9";
    }
    throw std::invalid_argument("lemmalab: unknown id value");
}

LemmaId lemma_id_from_string(std::string_view s) {
    for (LemmaId id : all_lemma_ids)
        if (to_string(id) == s) return id;
    throw std::invalid_argument("lemmalab: no statement named '" + std::string(s) + "'");
}

namespace {

bool is_single_graph(LemmaId id) {
    switch (id) {
    case LemmaId::L2_1: case LemmaId::L2_2: case LemmaId::L2_3:
    case LemmaId::L2_4: case LemmaId::L2_5: case LemmaId::L2_6:
    case LemmaId::L2_7: case LemmaId::L3:   case LemmaId::L4_1:
    case LemmaId::L4_2: case LemmaId::L4_3:
        return true;
    default:
        return false;
    }
}

[[noreturn]] void malformed(LemmaId id, const std::string& why) {
    throw std::invalid_argument("lemmalab: " + to_string(id) + " instance " + why);
}

int need_vertex(const std::optional<int>& v, const Graph& g, LemmaId id, const char* name) {
    if (!v) malformed(id, std::string("is missing vertex ") + name);
    if (*v < 0 || *v >= g.order()) malformed(id, std::string("has vertex ") + name + " out of range");
    return *v;
}

const VertexSet& need_set(const std::optional<VertexSet>& s, const Graph& g, LemmaId id,
                          const char* name) {
    if (!s) malformed(id, std::string("is missing set ") + name);
    int prev = -1;
    for (int v : *s) {
        if (v < 0 || v >= g.order()) malformed(id, std::string("has ") + name + " out of range");
        if (v <= prev) malformed(id, std::string("has ") + name + " not strictly ascending");
        prev = v;
    }
    return *s;
}

bool independent_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

bool contains_vertex(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet complement_vertices(const Graph& g, const VertexSet& s) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (!contains_vertex(s, v)) out.push_back(v);
    return out;
}

// How many vertices of xs have an edge into the component (given in the
// labels of g itself)?
int vertices_joined_to(const Graph& g, const VertexSet& comp, const VertexSet& xs) {
    int joined = 0;
    for (int x : xs) {
        for (int v : comp) {
            if (g.has_edge(x, v)) { ++joined; break; }
        }
    }
    return joined;
}

// Components of the subgraph induced on `verts`, reported in the labels
// of g (components() speaks in induced-subgraph labels).
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& verts) {
    Graph sub = induced(g, verts);
    std::vector<VertexSet> out;
    for (const VertexSet& local : components(sub)) {
        VertexSet orig;
        orig.reserve(local.size());
        for (int idx : local) orig.push_back(verts[idx]);
        out.push_back(std::move(orig));
    }
    return out;
}

long long min3(long long a, long long b, long long c) {
    return std::min(a, std::min(b, c));
}

// Shared size/overlap conditions of the two marked independent sets for
// L8 and L9.
bool paired_sets_ok(const Graph& g, const VertexSet& x1, const VertexSet& x2) {
    if (x1.size() != x2.size() || x1.size() < 3) return false;
    VertexSet only1 = set_difference(x1, x2);
    VertexSet only2 = set_difference(x2, x1);
    if (only1.size() != only2.size() || only1.size() < 2) return false;
    return independent_set(g, x1) && independent_set(g, x2);
}

} // namespace

bool check_hypothesis(const LemmaInstance& inst, const DetectorLimits& limits) {
    const Graph& g = inst.g;
    const int k = g.order();
    const long long n = inst.n;
    const long long m = inst.m;

    switch (inst.id) {
    case LemmaId::L2_1:
        return k >= 3 && n >= 2 && is_two_connected(g) && min_degree(g) >= (n + 1) / 2;
    case LemmaId::L2_2: {
        int x = need_vertex(inst.x, g, inst.id, "x");
        if (k < 3 || n < 2 || !is_connected(g)) return false;
        for (int v = 0; v < k; ++v)
            if (v != x && g.degree(v) < n - 1) return false;
        return true;
    }
    case LemmaId::L2_3: case LemmaId::L2_4: {
        int x = need_vertex(inst.x, g, inst.id, "x");
        int y = need_vertex(inst.y, g, inst.id, "y");
        if (x == y) malformed(inst.id, "has x == y");
        if (k < 3 || n < 2) return false;
        long long bound = (inst.id == LemmaId::L2_3) ? n - 1 : (n + 1) / 2;
        for (int v = 0; v < k; ++v)
            if (v != x && v != y && g.degree(v) < bound) return false;
        return is_two_connected(add_edge_copy(g, x, y));
    }
    case LemmaId::L2_5:
        return k >= 3 && n >= 2 && is_connected(g) && min_degree(g) >= n / 2;
    case LemmaId::L2_6: case LemmaId::L2_7: {
        int x = need_vertex(inst.x, g, inst.id, "x");
        if (k < 3 || n < 2) return false;
        if (inst.id == LemmaId::L2_6 ? !is_connected(g) : !is_two_connected(g)) return false;
        long long bound = (inst.id == LemmaId::L2_6) ? n - 2 : n / 2;
        for (int v = 0; v < k; ++v) {
            if (v == x) continue;
            if (g.degree(v) - (g.has_edge(v, x) ? 1 : 0) < bound) return false;
        }
        return true;
    }
    case LemmaId::L3: {
        if (m < 3 || m > k || is_connected(g)) return false;
        for (const VertexSet& comp : components(g))
            if (static_cast<long long>(comp.size()) > m / 2) return false;
        return true;
    }
    case LemmaId::L4_1:
        return n >= 2 && n <= k && k <= 3 * n / 2 - 2 && !has_path(g, static_cast<int>(n), limits);
    case LemmaId::L4_2:
        return n >= 2 && k >= 3 * n / 2 - 1 && !has_path(g, static_cast<int>(n), limits);
    case LemmaId::L4_3:
        return n >= 4 && n % 2 == 0 && k >= 3 * n / 2 - 1 &&
               !has_cycle_exact(g, static_cast<int>(n), limits);
    case LemmaId::L5: {
        if (!inst.g2) malformed(inst.id, "is missing the second graph");
        long long nu1 = k, nu2 = inst.g2->order();
        if (m < 3 || inst.p < 2) return false;
        if (longest_path_order(complement(g), limits) < inst.p) return false;
        return m <= min3(2 * nu1, nu1 + nu2, inst.p + 2 * nu2 - 1);
    }
    case LemmaId::L6: {
        if (n < 2 || m < 2 * n + 1 || m > k) return false;
        if (is_connected(g)) return false;
        if (has_path(g, static_cast<int>(n), limits)) return false;
        long long max_comp = 0;
        for (const VertexSet& comp : components(g))
            max_comp = std::max<long long>(max_comp, comp.size());
        // dropping the largest component is the worst case of dropping any one
        return k - max_comp >= m + n / 2 - k;
    }
    case LemmaId::L7: {
        const VertexSet& xs = need_set(inst.set_x, g, inst.id, "X");
        if (xs.size() < 3 || !independent_set(g, xs)) return false;
        if (m < 3 || inst.p < 2) return false;
        VertexSet rest = complement_vertices(g, xs);
        for (const VertexSet& comp : components_within(g, rest))
            if (vertices_joined_to(g, comp, xs) > 1) return false;
        if (longest_path_order(complement(induced(g, rest)), limits) < inst.p) return false;
        return m <= std::min<long long>(k, inst.p + 2 * static_cast<long long>(xs.size()) - 3);
    }
    case LemmaId::L8: {
        const VertexSet& x1 = need_set(inst.set_x1, g, inst.id, "X1");
        const VertexSet& x2 = need_set(inst.set_x2, g, inst.id, "X2");
        if (!paired_sets_ok(g, x1, x2)) return false;
        if (m < 3 || inst.p < 2) return false;
        VertexSet xs = set_union(x1, x2);
        VertexSet rest = complement_vertices(g, xs);
        for (const VertexSet& comp : components_within(g, rest)) {
            if (vertices_joined_to(g, comp, x1) > 1) return false;
            if (vertices_joined_to(g, comp, x2) > 1) return false;
        }
        if (longest_path_order(complement(induced(g, rest)), limits) < inst.p) return false;
        return m <= std::min<long long>(k, inst.p + 2 * static_cast<long long>(xs.size()) - 5);
    }
    case LemmaId::L9: {
        const VertexSet& region = need_set(inst.region, g, inst.id, "R");
        const VertexSet& x1 = need_set(inst.set_x1, g, inst.id, "X1");
        const VertexSet& x2 = need_set(inst.set_x2, g, inst.id, "X2");
        for (int v : x1) if (contains_vertex(region, v)) return false;
        for (int v : x2) if (contains_vertex(region, v)) return false;
        if (!paired_sets_ok(g, x1, x2)) return false;
        if (m < 3 || inst.p < 2 || inst.q < 1) return false;
        VertexSet xs = set_union(x1, x2);
        VertexSet outside = complement_vertices(g, region);
        long long nu_r = static_cast<long long>(region.size());
        for (const VertexSet& comp : components_within(g, region)) {
            if (comp.size() < 2) return false;
            if (vertices_joined_to(g, comp, x1) > 1) return false;
            if (vertices_joined_to(g, comp, x2) > 1) return false;
            // vertices outside R that are in X or see nothing of this component
            long long detached = 0;
            for (int v : outside) {
                bool in_x = contains_vertex(xs, v);
                bool touches = false;
                if (!in_x)
                    for (int u : comp)
                        if (g.has_edge(v, u)) { touches = true; break; }
                if (in_x || !touches) ++detached;
            }
            if (detached < inst.q) return false;
        }
        if (longest_path_order(complement(induced(g, region)), limits) < inst.p) return false;
        return m <= min3((3 * nu_r + 1) / 2 + 4, nu_r + inst.q - 1,
                         inst.p + 2 * inst.q - 5);
    }
    }
    throw std::invalid_argument("lemmalab: unknown id value");
}

bool check_conclusion(const LemmaInstance& inst, const DetectorLimits& limits) {
    const Graph& g = inst.g;
    const int k = g.order();
    const long long n = inst.n;

    switch (inst.id) {
    case LemmaId::L2_1:
        return longest_cycle_order(g, limits) >= std::min<long long>(k, n);
    case LemmaId::L2_2:
        return longest_path_from(g, need_vertex(inst.x, g, inst.id, "x"), limits) >= n;
    case LemmaId::L2_3:
        return longest_path_between(g, need_vertex(inst.x, g, inst.id, "x"),
                                    need_vertex(inst.y, g, inst.id, "y"), limits) >= n;
    case LemmaId::L2_4:
        return longest_path_from(g, need_vertex(inst.x, g, inst.id, "x"), limits) >=
               std::min<long long>(k, n);
    case LemmaId::L2_5:
        return longest_path_order(g, limits) >= std::min<long long>(k, n);
    case LemmaId::L2_6:
        return longest_path_from(g, need_vertex(inst.x, g, inst.id, "x"), limits) >= n;
    case LemmaId::L2_7:
        return longest_path_from(g, need_vertex(inst.x, g, inst.id, "x"), limits) >=
               std::min<long long>(k, n);
    case LemmaId::L3:
        return has_cycle_exact(complement(g), static_cast<int>(inst.m), limits);
    case LemmaId::L4_1:
        return longest_path_order(complement(g), limits) >= 2 * k + 3 - 2 * n;
    case LemmaId::L4_2: case LemmaId::L4_3:
        return longest_path_order(complement(g), limits) >= k + 1 - n / 2;
    case LemmaId::L5: {
        if (!inst.g2) malformed(inst.id, "is missing the second graph");
        Graph joined = disjoint_union({g, *inst.g2});
        return has_cycle_exact(complement(joined), static_cast<int>(inst.m), limits);
    }
    case LemmaId::L6: case LemmaId::L7: case LemmaId::L8: case LemmaId::L9:
        return has_cycle_exact(complement(g), static_cast<int>(inst.m), limits);
    }
    throw std::invalid_argument("lemmalab: unknown id value");
}

Verdict evaluate(const LemmaInstance& inst, const DetectorLimits& limits) {
    Verdict v;
    v.hypothesis_holds = check_hypothesis(inst, limits);
    v.conclusion_holds = v.hypothesis_holds && check_conclusion(inst, limits);
    return v;
}

Corpus Corpus::exhaustive(int max_order) {
    Corpus c;
    c.kind = Kind::Exhaustive;
    c.max_order = max_order;
    return c;
}

Corpus Corpus::randomized(std::uint64_t count, std::uint64_t seed) {
    Corpus c;
    c.kind = Kind::Randomized;
    c.count = count;
    c.seed = seed;
    return c;
}

namespace {

// ---------------------------------------------------------------------
// Exhaustive corpora. Graphs are streamed as adjacency masks in a fixed
// order (order ascending, then the edge mask as an integer, column-major
// pairs), and the parameter combinations per graph are a fixed function
// of the order. The fused kernel and the reference loop share both
// streams, so their reports are comparable instance for instance.
// ---------------------------------------------------------------------

constexpr int max_exhaustive_order = 7;

template <class F>
void for_each_combo(LemmaId id, int k, F&& fn) {
    switch (id) {
    case LemmaId::L2_1: case LemmaId::L2_5:
        if (k >= 3)
            for (int n = 2; n <= 2 * k - 1; ++n) fn(-1, -1, n);
        break;
    case LemmaId::L2_2: case LemmaId::L2_6:
        if (k >= 3)
            for (int x = 0; x < k; ++x)
                for (int n = 2; n <= k; ++n) fn(x, -1, n);
        break;
    case LemmaId::L2_3:
        if (k >= 3)
            for (int x = 0; x < k; ++x)
                for (int y = x + 1; y < k; ++y)
                    for (int n = 2; n <= k; ++n) fn(x, y, n);
        break;
    case LemmaId::L2_4:
        if (k >= 3)
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y) {
                    if (y == x) continue;
                    for (int n = 2; n <= 2 * k - 1; ++n) fn(x, y, n);
                }
        break;
    case LemmaId::L2_7:
        if (k >= 3)
            for (int x = 0; x < k; ++x)
                for (int n = 2; n <= 2 * k - 1; ++n) fn(x, -1, n);
        break;
    case LemmaId::L3:
        for (int m = 3; m <= k; ++m) fn(-1, -1, m);
        break;
    case LemmaId::L4_1: case LemmaId::L4_2:
        for (int n = 2; n <= k; ++n) fn(-1, -1, n);
        break;
    case LemmaId::L4_3:
        for (int n = 4; n <= k; n += 2) fn(-1, -1, n);
        break;
    default:
        throw std::logic_error("lemmalab: no exhaustive combos for " + to_string(id));
    }
}

void mask_to_adj(int k, std::uint64_t mask, std::uint32_t* adj) {
    std::fill(adj, adj + (k > 0 ? k : 1), 0u);
    int bit = 0;
    for (int v = 1; v < k; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask >> bit & 1) {
                adj[u] |= 1u << v;
                adj[v] |= 1u << u;
            }
}

Graph mask_to_graph(int k, std::uint64_t mask) {
    Graph g(k);
    int bit = 0;
    for (int v = 1; v < k; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

std::uint32_t reach_from(const std::uint32_t* adj, std::uint32_t start, std::uint32_t allowed) {
    std::uint32_t seen = start & allowed;
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool mask_connected(const std::uint32_t* adj, std::uint32_t verts) {
    if (!verts) return true;
    std::uint32_t lowest = verts & (~verts + 1);
    return reach_from(adj, lowest, verts) == verts;
}

bool mask_two_connected(const std::uint32_t* adj, int k, std::uint32_t full) {
    if (k < 3 || !mask_connected(adj, full)) return false;
    for (int v = 0; v < k; ++v)
        if (!mask_connected(adj, full & ~(1u << v))) return false;
    return true;
}

struct NeedSet {
    bool comps = false;
    bool two_conn = false;
    bool two_conn_plus = false;
    bool anchored = false;   // per-vertex path DPs (also yields path_from)
    bool longest_path = false;
    bool cyc_g = false;
    bool comp_path = false;
    bool comp_cyc = false;
    bool gx = false;         // min degree in G-x over v != x
};

NeedSet needs_for(const std::vector<LemmaId>& ids) {
    NeedSet nd;
    for (LemmaId id : ids) {
        switch (id) {
        case LemmaId::L2_1: nd.comps = nd.two_conn = nd.cyc_g = true; break;
        case LemmaId::L2_2: nd.comps = nd.anchored = true; break;
        case LemmaId::L2_3: nd.comps = nd.two_conn = nd.two_conn_plus = nd.anchored = true; break;
        case LemmaId::L2_4: nd.comps = nd.two_conn = nd.two_conn_plus = nd.anchored = true; break;
        case LemmaId::L2_5: nd.comps = nd.longest_path = true; break;
        case LemmaId::L2_6: nd.comps = nd.gx = nd.anchored = true; break;
        case LemmaId::L2_7: nd.comps = nd.two_conn = nd.gx = nd.anchored = true; break;
        case LemmaId::L3:   nd.comps = nd.comp_cyc = true; break;
        case LemmaId::L4_1: nd.longest_path = nd.comp_path = true; break;
        case LemmaId::L4_2: nd.longest_path = nd.comp_path = true; break;
        case LemmaId::L4_3: nd.cyc_g = nd.comp_path = true; break;
        default:
            throw std::invalid_argument("lemmalab: exhaustive corpora cover only the"
                                        " single-graph ids, not " + to_string(id));
        }
    }
    return nd;
}

struct MaskFacts {
    int k = 0;
    std::uint32_t adj[8] = {};
    int deg[8] = {};
    int mindeg = 0;
    int sm_deg[3] = {};  // three smallest degrees and where they occur,
    int sm_v[3] = {};    // enough to take minima excluding up to two vertices
    bool connected = false;
    int ncomp = 0;
    int maxcomp = 0;
    bool two_conn = false;
    bool tcp[8][8] = {};
    int between[8][8] = {};
    int path_from[8] = {};
    int longest_path = 0;
    std::uint32_t cyc_g = 0;
    int comp_path = 0;
    std::uint32_t comp_cyc = 0;
    int gx_min[8] = {};
};

struct FactScratch {
    std::vector<std::uint32_t> av;
    std::vector<std::uint32_t> cav;
};

void compute_facts(int k, std::uint64_t mask, const NeedSet& nd, MaskFacts& f,
                   FactScratch& scratch) {
    f.k = k;
    mask_to_adj(k, mask, f.adj);
    const std::uint32_t full = k > 0 ? (1u << k) - 1 : 0;

    f.mindeg = k > 0 ? INT_MAX : 0;
    f.sm_deg[0] = f.sm_deg[1] = f.sm_deg[2] = INT_MAX;
    f.sm_v[0] = f.sm_v[1] = f.sm_v[2] = -1;
    for (int v = 0; v < k; ++v) {
        int d = std::popcount(f.adj[v]);
        f.deg[v] = d;
        f.mindeg = std::min(f.mindeg, d);
        for (int slot = 0; slot < 3; ++slot) {
            if (d < f.sm_deg[slot]) {
                for (int j = 2; j > slot; --j) {
                    f.sm_deg[j] = f.sm_deg[j - 1];
                    f.sm_v[j] = f.sm_v[j - 1];
                }
                f.sm_deg[slot] = d;
                f.sm_v[slot] = v;
                break;
            }
        }
    }

    if (nd.comps) {
        f.ncomp = 0;
        f.maxcomp = 0;
        std::uint32_t left = full;
        while (left) {
            std::uint32_t comp = reach_from(f.adj, left & (~left + 1), left);
            ++f.ncomp;
            f.maxcomp = std::max(f.maxcomp, std::popcount(comp));
            left &= ~comp;
        }
        f.connected = f.ncomp <= 1;
    }

    if (nd.two_conn || nd.two_conn_plus)
        f.two_conn = mask_two_connected(f.adj, k, full);

    if (nd.two_conn_plus && k >= 3) {
        if (f.two_conn) {
            // adding an edge cannot break 2-connectedness
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y) f.tcp[x][y] = true;
        } else if (f.ncomp >= 3) {
            // one extra edge merges at most two components
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y) f.tcp[x][y] = false;
        } else {
            std::uint32_t plus[8];
            for (int x = 0; x < k; ++x) {
                f.tcp[x][x] = false;
                for (int y = x + 1; y < k; ++y) {
                    bool val;
                    if (f.adj[x] >> y & 1) {
                        val = f.two_conn; // the edge is already there
                    } else {
                        std::copy(f.adj, f.adj + k, plus);
                        plus[x] |= 1u << y;
                        plus[y] |= 1u << x;
                        val = mask_two_connected(plus, k, full);
                    }
                    f.tcp[x][y] = f.tcp[y][x] = val;
                }
            }
        }
    }

    const bool need_av = nd.anchored || nd.longest_path || nd.cyc_g;
    if (need_av) scratch.av.assign(f.adj, f.adj + k);

    if (nd.anchored) {
        for (int x = 0; x < k; ++x) {
            std::vector<int> t = detail::mask_longest_path_between(scratch.av, x);
            int best = 0;
            for (int y = 0; y < k; ++y) {
                f.between[x][y] = t[y];
                best = std::max(best, t[y]);
            }
            f.path_from[x] = best;
        }
    }
    if (nd.longest_path) f.longest_path = k > 0 ? detail::mask_longest_path(scratch.av) : 0;
    if (nd.cyc_g) f.cyc_g = k > 0 ? detail::mask_cycle_lengths(scratch.av) : 0;

    if (nd.comp_path || nd.comp_cyc) {
        scratch.cav.resize(k);
        for (int v = 0; v < k; ++v) scratch.cav[v] = full & ~f.adj[v] & ~(1u << v);
        if (nd.comp_path) f.comp_path = k > 0 ? detail::mask_longest_path(scratch.cav) : 0;
        if (nd.comp_cyc) f.comp_cyc = k > 0 ? detail::mask_cycle_lengths(scratch.cav) : 0;
    }

    if (nd.gx) {
        for (int x = 0; x < k; ++x) {
            int lo = INT_MAX;
            for (int v = 0; v < k; ++v) {
                if (v == x) continue;
                lo = std::min(lo, f.deg[v] - static_cast<int>(f.adj[v] >> x & 1));
            }
            f.gx_min[x] = lo;
        }
    }
}

int min_degree_excluding(const MaskFacts& f, int a, int b) {
    for (int slot = 0; slot < 3; ++slot)
        if (f.sm_v[slot] != a && f.sm_v[slot] != b) return f.sm_deg[slot];
    return INT_MAX;
}

struct ComboVerdict {
    bool hyp;
    bool concl;
};

int top_cycle(std::uint32_t lengths) {
    return lengths ? 31 - std::countl_zero(lengths) : 0;
}

ComboVerdict eval_combo(const MaskFacts& f, LemmaId id, int x, int y, long long nm) {
    const long long k = f.k;
    switch (id) {
    case LemmaId::L2_1: {
        bool hyp = nm >= 2 && f.two_conn && f.mindeg >= (nm + 1) / 2;
        return {hyp, hyp && top_cycle(f.cyc_g) >= std::min(k, nm)};
    }
    case LemmaId::L2_2: {
        bool hyp = nm >= 2 && f.connected && min_degree_excluding(f, x, -1) >= nm - 1;
        return {hyp, hyp && f.path_from[x] >= nm};
    }
    case LemmaId::L2_3: {
        bool hyp = nm >= 2 && f.tcp[x][y] && min_degree_excluding(f, x, y) >= nm - 1;
        return {hyp, hyp && f.between[x][y] >= nm};
    }
    case LemmaId::L2_4: {
        bool hyp = nm >= 2 && f.tcp[x][y] && min_degree_excluding(f, x, y) >= (nm + 1) / 2;
        return {hyp, hyp && f.path_from[x] >= std::min(k, nm)};
    }
    case LemmaId::L2_5: {
        bool hyp = nm >= 2 && f.connected && f.mindeg >= nm / 2;
        return {hyp, hyp && f.longest_path >= std::min(k, nm)};
    }
    case LemmaId::L2_6: {
        bool hyp = nm >= 2 && f.connected && f.gx_min[x] >= nm - 2;
        return {hyp, hyp && f.path_from[x] >= nm};
    }
    case LemmaId::L2_7: {
        bool hyp = nm >= 2 && f.two_conn && f.gx_min[x] >= nm / 2;
        return {hyp, hyp && f.path_from[x] >= std::min(k, nm)};
    }
    case LemmaId::L3: {
        bool hyp = nm >= 3 && nm <= k && f.ncomp >= 2 && f.maxcomp <= nm / 2;
        return {hyp, hyp && (f.comp_cyc >> nm & 1) != 0};
    }
    case LemmaId::L4_1: {
        bool hyp = nm >= 2 && nm <= k && k <= 3 * nm / 2 - 2 && f.longest_path < nm;
        return {hyp, hyp && f.comp_path >= 2 * k + 3 - 2 * nm};
    }
    case LemmaId::L4_2: {
        bool hyp = nm >= 2 && k >= 3 * nm / 2 - 1 && f.longest_path < nm;
        return {hyp, hyp && f.comp_path >= k + 1 - nm / 2};
    }
    case LemmaId::L4_3: {
        bool hyp = nm >= 4 && nm % 2 == 0 && k >= 3 * nm / 2 - 1 && !(f.cyc_g >> nm & 1);
        return {hyp, hyp && f.comp_path >= k + 1 - nm / 2};
    }
    default:
        throw std::logic_error("lemmalab: kernel asked about " + to_string(id));
    }
}

LemmaInstance instance_from_combo(LemmaId id, int k, std::uint64_t mask, int x, int y,
                                  long long nm) {
    LemmaInstance inst;
    inst.id = id;
    inst.g = mask_to_graph(k, mask);
    if (x >= 0) inst.x = x;
    if (y >= 0) inst.y = y;
    if (id == LemmaId::L3) inst.m = nm;
    else inst.n = nm;
    return inst;
}

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

struct SuiteAccum {
    std::uint64_t checked = 0;
    std::uint64_t held = 0;
    std::vector<std::pair<std::uint64_t, LemmaInstance>> violations;
};

void validate_exhaustive_request(const std::vector<LemmaId>& ids, int max_order,
                                 const DetectorLimits& limits) {
    for (LemmaId id : ids)
        if (!is_single_graph(id))
            throw std::invalid_argument("lemmalab: exhaustive corpora cover only the"
                                        " single-graph ids, not " + to_string(id));
    if (max_order < 0)
        throw std::invalid_argument("lemmalab: negative max_order");
    if (max_order > max_exhaustive_order)
        throw ResourceLimitError("lemmalab: exhaustive corpora stop at order " +
                                 std::to_string(max_exhaustive_order) + ", asked for " +
                                 std::to_string(max_order));
    if (limits.max_component_order_for_path_dp < max_order ||
        limits.max_order_for_cycle_search < max_order)
        throw ResourceLimitError("lemmalab: detector limits too small for exhaustive"
                                 " corpus of order " + std::to_string(max_order));
}

// ---------------------------------------------------------------------
// Randomized corpora. Instance i of a run is produced by an RNG seeded
// from (suite seed, id, i) alone, so results cannot depend on thread
// count or scheduling. L5..L9 generators rejection-sample until the
// hypothesis holds by construction; the single-graph ids draw plain
// random graphs and leave the hypothesis to fall where it may.
// ---------------------------------------------------------------------

constexpr int rejection_cap = 100000;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct Rng {
    std::uint64_t state;
    std::uint64_t next() { return state = splitmix64(state); }
    // small bounded draw; modulo bias is irrelevant at these ranges
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin(int percent) { return uniform(0, 99) < percent; }
};

Rng rng_for(std::uint64_t seed, LemmaId id, std::uint64_t index) {
    std::uint64_t s = splitmix64(seed ^ (static_cast<std::uint64_t>(id) + 1) * 0x100000001B3ull);
    return Rng{splitmix64(s ^ (index + 1) * 0x9E3779B97F4A7C15ull)};
}

Graph random_graph(Rng& rng, int order, int density_percent) {
    Graph g(order);
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u)
            if (rng.coin(density_percent)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(Rng& rng, int order) {
    for (int attempt = 0; attempt < 60; ++attempt) {
        Graph g = random_graph(rng, order, 70);
        if (is_connected(g)) return g;
    }
    return path_graph(order); // deterministic fallback, never starves
}

// Random pick of a single-graph instance: graph plus feasible parameters.
LemmaInstance random_single_graph_instance(LemmaId id, Rng& rng) {
    int k = (id == LemmaId::L4_3) ? rng.uniform(4, 8) : rng.uniform(3, 8);
    LemmaInstance inst;
    inst.id = id;
    inst.g = random_graph(rng, k, rng.uniform(20, 80));
    switch (id) {
    case LemmaId::L2_1: case LemmaId::L2_5:
        inst.n = rng.uniform(2, 2 * k - 1);
        break;
    case LemmaId::L2_2: case LemmaId::L2_6:
        inst.x = rng.uniform(0, k - 1);
        inst.n = rng.uniform(2, k);
        break;
    case LemmaId::L2_3: {
        int a = rng.uniform(0, k - 1);
        int b = (a + 1 + rng.uniform(0, k - 2)) % k;
        inst.x = std::min(a, b);
        inst.y = std::max(a, b);
        inst.n = rng.uniform(2, k);
        break;
    }
    case LemmaId::L2_4: {
        int a = rng.uniform(0, k - 1);
        inst.x = a;
        inst.y = (a + 1 + rng.uniform(0, k - 2)) % k;
        inst.n = rng.uniform(2, 2 * k - 1);
        break;
    }
    case LemmaId::L2_7:
        inst.x = rng.uniform(0, k - 1);
        inst.n = rng.uniform(2, 2 * k - 1);
        break;
    case LemmaId::L3:
        inst.m = rng.uniform(3, k);
        break;
    case LemmaId::L4_1: case LemmaId::L4_2:
        inst.n = rng.uniform(2, k);
        break;
    case LemmaId::L4_3:
        inst.n = 4 + 2 * rng.uniform(0, (k - 4) / 2);
        break;
    default:
        throw std::logic_error("lemmalab: not a single-graph id");
    }
    return inst;
}

// Disjoint union of random connected components, total order fixed, each
// component no bigger than cap.
std::vector<Graph> random_components(Rng& rng, int total, int cap) {
    std::vector<Graph> comps;
    int rem = total;
    while (rem > 0) {
        int o = rng.uniform(1, std::min(cap, rem));
        comps.push_back(random_connected_graph(rng, o));
        rem -= o;
    }
    return comps;
}

std::optional<LemmaInstance> try_l5(Rng& rng, const DetectorLimits& limits) {
    int nu1 = rng.uniform(3, 8), nu2 = rng.uniform(1, 6);
    LemmaInstance inst;
    inst.id = LemmaId::L5;
    inst.g = random_graph(rng, nu1, rng.uniform(20, 80));
    inst.g2 = random_graph(rng, nu2, rng.uniform(20, 80));
    int lp = longest_path_order(complement(inst.g), limits);
    if (lp < 2) return std::nullopt;
    inst.p = rng.uniform(2, lp);
    long long mmax = min3(2 * nu1, nu1 + nu2, inst.p + 2 * nu2 - 1);
    if (mmax < 3) return std::nullopt;
    inst.m = rng.uniform(3, static_cast<int>(mmax));
    return inst;
}

std::optional<LemmaInstance> try_l6(Rng& rng, const DetectorLimits&) {
    int n = rng.uniform(2, 5);
    int m = rng.uniform(2 * n + 1, 15);
    int nu = rng.uniform(m, 16);
    // components of order < n keep the union free of paths on n vertices
    std::vector<Graph> comps = random_components(rng, nu, n - 1);
    if (comps.size() < 2) return std::nullopt;
    int max_comp = 0;
    for (const Graph& c : comps) max_comp = std::max(max_comp, c.order());
    if (nu - max_comp < m + n / 2 - nu) return std::nullopt;
    LemmaInstance inst;
    inst.id = LemmaId::L6;
    inst.g = disjoint_union(comps);
    inst.n = n;
    inst.m = m;
    return inst;
}

// Common layout for L7/L8/L9: R occupies [0, t), the marked sets sit
// right after it, extras (L9 only) at the top. Join edges go from a
// component to at most one vertex per marked set, drawn from the
// non-shared parts so a shared vertex never picks up two components'
// worth of joins.
std::optional<LemmaInstance> try_l7(Rng& rng, const DetectorLimits& limits) {
    int xs = rng.uniform(3, 5);
    std::vector<Graph> comps = random_components(rng, rng.uniform(1, 9), 3);
    int t = 0;
    for (const Graph& c : comps) t += c.order();
    comps.push_back(empty_graph(xs));
    Graph g = disjoint_union(comps);

    int offset = 0;
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
        int o = comps[i].order();
        if (rng.coin(50)) {
            int hub = t + rng.uniform(0, xs - 1);
            int fan = rng.uniform(1, o);
            for (int j = 0; j < fan; ++j) g.add_edge(hub, offset + rng.uniform(0, o - 1));
        }
        offset += o;
    }

    VertexSet region(t);
    for (int v = 0; v < t; ++v) region[v] = v;
    int lp = longest_path_order(complement(induced(g, region)), limits);
    if (lp < 2) return std::nullopt;

    LemmaInstance inst;
    inst.id = LemmaId::L7;
    inst.g = std::move(g);
    inst.set_x = VertexSet{};
    for (int v = t; v < t + xs; ++v) inst.set_x->push_back(v);
    inst.p = rng.uniform(2, lp);
    long long mmax = std::min<long long>(t + xs, inst.p + 2 * xs - 3);
    if (mmax < 3) return std::nullopt;
    inst.m = rng.uniform(3, static_cast<int>(mmax));
    return inst;
}

std::optional<LemmaInstance> try_l8_l9(LemmaId id, Rng& rng, const DetectorLimits& limits) {
    const bool nine = id == LemmaId::L9;
    int sigma = nine ? 3 : rng.uniform(3, 4);
    int overlap = rng.uniform(0, nine ? 1 : sigma - 2);
    int xs = 2 * sigma - overlap;

    int budget = std::min(nine ? 8 : 9, 16 - xs - (nine ? 2 : 0));
    int want = rng.uniform(nine ? 2 : 1, budget);
    std::vector<Graph> comps;
    {
        int rem = want;
        int lo = nine ? 2 : 1, hi = nine ? 4 : 3;
        while (rem >= lo) {
            int o = rng.uniform(lo, std::min(hi, rem));
            comps.push_back(random_connected_graph(rng, o));
            rem -= o;
        }
    }
    if (comps.empty()) return std::nullopt;
    int t = 0;
    for (const Graph& c : comps) t += c.order();

    int extras = nine ? rng.uniform(0, 2) : 0;
    comps.push_back(empty_graph(xs + extras));
    Graph g = disjoint_union(comps);

    VertexSet x1, x2;
    for (int i = 0; i < sigma; ++i) x1.push_back(t + i);
    for (int i = 0; i < sigma; ++i) x2.push_back(t + sigma - overlap + i);
    // pools the join edges may land in: the non-shared halves
    const int pool1_lo = t, pool1_hi = t + sigma - overlap - 1;
    const int pool2_lo = t + sigma, pool2_hi = t + 2 * sigma - overlap - 1;

    int offset = 0;
    for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
        int o = comps[i].order();
        if (rng.coin(50)) g.add_edge(rng.uniform(pool1_lo, pool1_hi), offset + rng.uniform(0, o - 1));
        if (rng.coin(50)) g.add_edge(rng.uniform(pool2_lo, pool2_hi), offset + rng.uniform(0, o - 1));
        offset += o;
    }
    if (rng.coin(33)) g.add_edge(rng.uniform(pool1_lo, pool1_hi), rng.uniform(pool2_lo, pool2_hi));

    long long q = 0;
    if (nine) {
        for (int e = 0; e < extras; ++e) {
            int w = t + xs + e;
            offset = 0;
            for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
                int o = comps[i].order();
                if (rng.coin(30)) g.add_edge(w, offset + rng.uniform(0, o - 1));
                offset += o;
            }
            if (rng.coin(30)) g.add_edge(w, rng.uniform(t, t + xs - 1));
        }
        // q = the smallest per-component count of outside vertices that are
        // marked or miss the component entirely
        q = LLONG_MAX;
        offset = 0;
        for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
            int o = comps[i].order();
            long long count = xs;
            for (int e = 0; e < extras; ++e) {
                int w = t + xs + e;
                bool touches = false;
                for (int v = offset; v < offset + o && !touches; ++v)
                    if (g.has_edge(w, v)) touches = true;
                if (!touches) ++count;
            }
            q = std::min(q, count);
            offset += o;
        }
    }

    VertexSet region(t);
    for (int v = 0; v < t; ++v) region[v] = v;
    int lp = longest_path_order(complement(induced(g, region)), limits);
    if (lp < 2) return std::nullopt;

    LemmaInstance inst;
    inst.id = id;
    inst.g = std::move(g);
    inst.set_x1 = std::move(x1);
    inst.set_x2 = std::move(x2);
    inst.p = rng.uniform(2, lp);
    long long mmax;
    if (nine) {
        inst.region = std::move(region);
        inst.q = q;
        mmax = min3((3LL * t + 1) / 2 + 4, t + q - 1, inst.p + 2 * q - 5);
    } else {
        mmax = std::min<long long>(t + xs, inst.p + 2 * xs - 5);
    }
    if (mmax < 3) return std::nullopt;
    inst.m = rng.uniform(3, static_cast<int>(mmax));
    return inst;
}

std::optional<LemmaInstance> generate_random_instance(LemmaId id, std::uint64_t seed,
                                                      std::uint64_t index,
                                                      const DetectorLimits& limits) {
    Rng rng = rng_for(seed, id, index);
    if (is_single_graph(id)) return random_single_graph_instance(id, rng);
    for (int attempt = 0; attempt < rejection_cap; ++attempt) {
        std::optional<LemmaInstance> inst;
        switch (id) {
        case LemmaId::L5: inst = try_l5(rng, limits); break;
        case LemmaId::L6: inst = try_l6(rng, limits); break;
        case LemmaId::L7: inst = try_l7(rng, limits); break;
        case LemmaId::L8: case LemmaId::L9: inst = try_l8_l9(id, rng, limits); break;
        default: throw std::logic_error("lemmalab: unhandled id in generator");
        }
        if (inst) return inst;
    }
    return std::nullopt;
}

SuiteResult run_randomized(LemmaId id, const Corpus& corpus, const DetectorLimits& limits,
                           int threads) {
    SuiteResult res;
    res.id = id;
    res.corpus = corpus;
    const long long count = static_cast<long long>(corpus.count);
    std::vector<std::pair<std::uint64_t, LemmaInstance>> violations;

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
        SuiteAccum local;
        std::uint64_t starved = 0, errors = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8) nowait
#endif
        for (long long i = 0; i < count; ++i) {
            auto inst = generate_random_instance(id, corpus.seed,
                                                 static_cast<std::uint64_t>(i), limits);
            if (!inst) {
                ++starved;
                continue;
            }
            try {
                ++local.checked;
                if (check_hypothesis(*inst, limits)) {
                    ++local.held;
                    if (!check_conclusion(*inst, limits))
                        local.violations.emplace_back(static_cast<std::uint64_t>(i),
                                                      std::move(*inst));
                }
            } catch (const ResourceLimitError&) {
                ++errors;
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            res.instances_checked += local.checked;
            res.hypothesis_held += local.held;
            res.starved += starved;
            res.resource_errors += errors;
            for (auto& v : local.violations) violations.push_back(std::move(v));
        }
    }
    (void)threads;

    std::sort(violations.begin(), violations.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& v : violations) res.violations.push_back(std::move(v.second));
    return res;
}

} // namespace

std::vector<SuiteResult> run_exhaustive_suites(const std::vector<LemmaId>& ids, int max_order,
                                               const DetectorLimits& limits, int threads) {
    validate_exhaustive_request(ids, max_order, limits);
    const NeedSet nd = needs_for(ids);
    const int nthreads = resolve_threads(threads);

    std::vector<SuiteResult> results(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        results[i].id = ids[i];
        results[i].corpus = Corpus::exhaustive(max_order);
    }

    for (int k = 0; k <= max_order; ++k) {
        const long long total = 1LL << (k * (k - 1) / 2);
        std::vector<std::vector<std::pair<std::uint64_t, LemmaInstance>>> merged(ids.size());

#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
#endif
        {
            std::vector<SuiteAccum> local(ids.size());
            MaskFacts facts;
            FactScratch scratch;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 2048) nowait
#endif
            for (long long mask = 0; mask < total; ++mask) {
                compute_facts(k, static_cast<std::uint64_t>(mask), nd, facts, scratch);
                for (std::size_t i = 0; i < ids.size(); ++i) {
                    std::uint64_t ordinal = 0;
                    for_each_combo(ids[i], k, [&](int x, int y, long long nm) {
                        ComboVerdict v = eval_combo(facts, ids[i], x, y, nm);
                        ++local[i].checked;
                        if (v.hyp) {
                            ++local[i].held;
                            if (!v.concl) {
                                // combos per graph stay far below 2^11
                                std::uint64_t key =
                                    (static_cast<std::uint64_t>(mask) << 11) | ordinal;
                                local[i].violations.emplace_back(
                                    key, instance_from_combo(ids[i], k,
                                                             static_cast<std::uint64_t>(mask),
                                                             x, y, nm));
                            }
                        }
                        ++ordinal;
                    });
                }
            }
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                for (std::size_t i = 0; i < ids.size(); ++i) {
                    results[i].instances_checked += local[i].checked;
                    results[i].hypothesis_held += local[i].held;
                    for (auto& v : local[i].violations) merged[i].push_back(std::move(v));
                }
            }
        }

        for (std::size_t i = 0; i < ids.size(); ++i) {
            std::sort(merged[i].begin(), merged[i].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& v : merged[i]) results[i].violations.push_back(std::move(v.second));
        }
    }
    (void)nthreads;
    return results;
}

SuiteResult run_suite(LemmaId id, const Corpus& corpus, const DetectorLimits& limits,
                      int threads) {
    if (corpus.kind == Corpus::Kind::Exhaustive) {
        auto results = run_exhaustive_suites({id}, corpus.max_order, limits, threads);
        return std::move(results.front());
    }
    return run_randomized(id, corpus, limits, resolve_threads(threads));
}

SuiteResult run_suite_reference(LemmaId id, const Corpus& corpus, const DetectorLimits& limits) {
    if (corpus.kind == Corpus::Kind::Randomized)
        return run_randomized(id, corpus, limits, 1);

    validate_exhaustive_request({id}, corpus.max_order, limits);
    SuiteResult res;
    res.id = id;
    res.corpus = corpus;
    for (int k = 0; k <= corpus.max_order; ++k) {
        const std::uint64_t total = 1ull << (k * (k - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            for_each_combo(id, k, [&](int x, int y, long long nm) {
                LemmaInstance inst = instance_from_combo(id, k, mask, x, y, nm);
                ++res.instances_checked;
                try {
                    if (check_hypothesis(inst, limits)) {
                        ++res.hypothesis_held;
                        if (!check_conclusion(inst, limits))
                            res.violations.push_back(std::move(inst));
                    }
                } catch (const ResourceLimitError&) {
                    ++res.resource_errors;
                }
            });
        }
    }
    return res;
}

} // namespace pw::lemmalab
