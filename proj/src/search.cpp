#include "pathwheel/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathwheel/errors.hpp"
#include "pathwheel/formula.hpp"

namespace pw::search {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

// Upper-triangle adjacency code, column by column: the pair (i, j) with
// i < j sits at column-order index p = j(j-1)/2 + i, packed MSB-first so
// that comparing codes compares columns left to right. Orders up to 10
// need 45 bits, which is why the isomorphism search stops there.
constexpr int canon_order_cap = 10;

std::uint64_t code_of(const Graph& g) {
    const int k = g.order();
    const int bits = k * (k - 1) / 2;
    std::uint64_t code = 0;
    int p = 0;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (g.has_edge(i, j)) code |= std::uint64_t{1} << (bits - 1 - p);
    return code;
}

// Minimum code over all vertex orderings, found by placing one vertex at
// a time. After placing position pos the top pos(pos+1)/2 bits of the
// code are fixed, so any branch whose prefix already exceeds the best
// known prefix is dead. Ties must be explored: an equal prefix can still
// win on a later column.
struct Canon {
    std::uint64_t code;
    Graph form;
};

Canon canonical_form(const Graph& g) {
    const int k = g.order();
    if (k <= 1) return {0, g};

    const int bits = k * (k - 1) / 2;
    std::vector<int> order(k);
    for (int v = 0; v < k; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> perm(k), best_perm(k);
    std::vector<bool> used(k, false);

    auto dfs = [&](auto&& self, int pos, std::uint64_t acc) -> void {
        if (pos == k) {
            if (acc < best) {
                best = acc;
                best_perm = perm;
            }
            return;
        }
        const int shift = bits - pos * (pos + 1) / 2;
        for (int idx = 0; idx < k; ++idx) {
            const int v = order[idx];
            if (used[v]) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < pos; ++i) col = (col << 1) | (g.has_edge(perm[i], v) ? 1 : 0);
            const std::uint64_t acc2 = acc | (col << shift);
            if ((acc2 >> shift) > (best >> shift)) continue;
            perm[pos] = v;
            used[v] = true;
            self(self, pos + 1, acc2);
            used[v] = false;
        }
    };
    dfs(dfs, 0, 0);

    Graph form(k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(best_perm[i], best_perm[j])) form.add_edge(i, j);
    return {best, form};
}

// A star's minimum code puts the centre last: every earlier placement
// fills an earlier column with ones. Built directly so orders past the
// packed-code cap stay available.
Graph canonical_star(int order) {
    Graph g(order);
    for (int v = 0; v + 1 < order; ++v) g.add_edge(v, order - 1);
    return g;
}

Graph attach_vertex(const Graph& g, std::uint32_t nbrs) {
    const int k = g.order();
    Graph h = disjoint_union({g, empty_graph(1)});
    for (int v = 0; v < k; ++v)
        if (nbrs >> v & 1u) h.add_edge(v, k);
    return h;
}

} // namespace

// Grows the catalogue one order at a time: every connected graph has a
// vertex whose removal leaves it connected, and dropping a vertex cannot
// create a path, so attaching a new vertex to each nonempty subset of a
// smaller catalogue member reaches every class exactly once after
// dedup by minimum code.
std::vector<Graph> enum_connected_path_free(int n, int max_order, const SearchLimits& limits) {
    if (n < 1) throw std::invalid_argument("enum_connected_path_free: n must be at least 1");
    if (max_order < 0) throw std::invalid_argument("enum_connected_path_free: negative max_order");
    if (max_order > canon_order_cap && n >= 5)
        throw ResourceLimitError("enum_connected_path_free: isomorphism search capped at order 10");

    std::vector<Graph> out;
    auto push = [&](Graph g) {
        if (out.size() >= limits.catalogue_budget)
            throw ResourceLimitError("enum_connected_path_free: catalogue budget exhausted");
        out.push_back(std::move(g));
    };

    const int search_cap = std::min(max_order, canon_order_cap);
    std::vector<Graph> level;
    if (search_cap >= 1 && n >= 2) {
        level.push_back(empty_graph(1));
        push(level.back());
    }
    for (int k = 1; k < search_cap && !level.empty(); ++k) {
        std::map<std::uint64_t, Graph> next;
        for (const Graph& g : level) {
            for (std::uint32_t nbrs = 1; nbrs < (std::uint32_t{1} << k); ++nbrs) {
                Graph h = attach_vertex(g, nbrs);
                if (has_path(h, n, limits.detector)) continue;
                Canon c = canonical_form(h);
                if (next.emplace(c.code, std::move(c.form)).second &&
                    out.size() + next.size() > limits.catalogue_budget)
                    throw ResourceLimitError("enum_connected_path_free: catalogue budget exhausted");
            }
        }
        level.clear();
        for (auto& [code, g] : next) {
            level.push_back(g);
            push(std::move(g));
        }
    }

    // Only stars survive past the search cap when n = 4 (any connected
    // graph with two non-adjacent non-leaves carries a path on four
    // vertices); smaller n dies out on its own before order 3.
    if (n == 4)
        for (int o = canon_order_cap + 1; o <= max_order; ++o) push(canonical_star(o));
    return out;
}

void for_each_path_free(int n, int t, const SearchLimits& limits,
                        const std::function<void(const Graph&, std::uint64_t)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_path_free: n must be at least 1");
    if (t < 0) throw std::invalid_argument("for_each_path_free: negative order");

    const std::vector<Graph> pieces = enum_connected_path_free(n, t, limits);
    std::uint64_t emitted = 0;
    std::vector<const Graph*> chosen;

    // Multisets as nondecreasing piece-index sequences; the catalogue is
    // sorted by order, so once a piece is too big every later one is too.
    auto rec = [&](auto&& self, std::size_t min_idx, int rem) -> void {
        if (rem == 0) {
            std::vector<Graph> parts;
            parts.reserve(chosen.size());
            for (const Graph* p : chosen) parts.push_back(*p);
            if (emitted >= limits.catalogue_budget)
                throw ResourceLimitError("for_each_path_free: emission budget exhausted");
            fn(disjoint_union(parts), emitted++);
            return;
        }
        for (std::size_t i = min_idx; i < pieces.size(); ++i) {
            if (pieces[i].order() > rem) break;
            chosen.push_back(&pieces[i]);
            self(self, i, rem - pieces[i].order());
            chosen.pop_back();
        }
    };
    rec(rec, 0, t);
}

std::vector<Graph> enum_path_free(int n, int t, const SearchLimits& limits) {
    std::vector<Graph> out;
    for_each_path_free(n, t, limits, [&](const Graph& g, std::uint64_t) { out.push_back(g); });
    return out;
}

SearchReport verify_upper_bound(int n, int m, int t, const SearchLimits& limits) {
    if (n < 1) throw std::invalid_argument("verify_upper_bound: n must be at least 1");
    if (m < 3) throw std::invalid_argument("verify_upper_bound: rim order must be at least 3");
    if (t < 0) throw std::invalid_argument("verify_upper_bound: negative order");

    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.n = n;
    report.m = m;
    report.t = t;

    std::vector<Graph> graphs;
    for_each_path_free(n, t, limits, [&](const Graph& g, std::uint64_t) { graphs.push_back(g); });
    report.graphs_enumerated = graphs.size();

    const long long total = static_cast<long long>(graphs.size());
    long long first_bad = total;

    // Index 0 is probed serially so a detector limit on this order
    // surfaces as an exception before any parallel region opens.
    if (total > 0 && !has_wheel(complement(graphs[0]), m, limits.detector)) first_bad = 0;

    const int nthreads = resolve_threads(limits.threads);
    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
#pragma omp parallel for num_threads(nthreads) schedule(dynamic) reduction(min : first_bad)
#endif
    for (long long i = 1; i < total; ++i) {
        try {
            if (!has_wheel(complement(graphs[i]), m, limits.detector))
                first_bad = std::min(first_bad, i);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pw_search_failure)
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    (void)nthreads;
    if (failure) std::rethrow_exception(failure);

    report.verified = first_bad == total;
    if (first_bad < total) report.counterexample = graphs[static_cast<std::size_t>(first_bad)];
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

ConfirmReport confirm_ramsey(int n, int m, const SearchLimits& limits) {
    ConfirmReport report;
    report.n = n;
    report.m = m;

    const formula::RamseyBreakdown breakdown = formula::ramsey_path_wheel(n, m);
    report.ramsey_value = breakdown.value;

    SearchReport upper = verify_upper_bound(n, m, static_cast<int>(breakdown.value), limits);
    report.upper_verified = upper.verified;
    report.graphs_enumerated = upper.graphs_enumerated;

    report.witness = clique_partition(n, m);
    report.witness_report = verify_witness(n, m, report.witness, limits.detector);
    return report;
}

} // namespace pw::search
