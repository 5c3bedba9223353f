#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "pathwheel/detect.hpp"
#include "pathwheel/errors.hpp"
#include "pathwheel/graph.hpp"

using namespace pw;

namespace {

// Ground-truth longest path by depth-first enumeration of every simple
// path. Exponential and proud of it; the DP must match this exactly.
struct NaivePath {
    const Graph& g;
    std::vector<char> used;
    int best = 0;

    explicit NaivePath(const Graph& graph)
        : g(graph), used(static_cast<std::size_t>(graph.order()), 0) {}

    void extend(int v, int len) {
        best = std::max(best, len);
        for (int u : g.neighbors(v)) {
            if (used[static_cast<std::size_t>(u)]) continue;
            used[static_cast<std::size_t>(u)] = 1;
            extend(u, len + 1);
            used[static_cast<std::size_t>(u)] = 0;
        }
    }

    int run() {
        for (int v = 0; v < g.order(); ++v) {
            used[static_cast<std::size_t>(v)] = 1;
            extend(v, 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
        return best;
    }
};

int naive_longest_path(const Graph& g) { return NaivePath(g).run(); }

// Ground-truth exact-length cycle: pick every m-subset, then look for a
// spanning cycle of it by trying all orderings with the first vertex fixed.
bool subset_has_spanning_cycle(const Graph& g, std::vector<int>& verts) {
    std::sort(verts.begin() + 1, verts.end());
    do {
        bool ok = g.has_edge(verts.back(), verts.front());
        for (std::size_t i = 0; ok && i + 1 < verts.size(); ++i)
            ok = g.has_edge(verts[i], verts[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(verts.begin() + 1, verts.end()));
    return false;
}

bool naive_has_cycle(const Graph& g, int m) {
    if (m < 3 || m > g.order()) return false;
    std::vector<int> pick(static_cast<std::size_t>(m));
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i)];
        if (subset_has_spanning_cycle(g, pick)) return true;
        int i = m - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == g.order() - m + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool naive_has_wheel(const Graph& g, int m) {
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nb = g.neighbors(v);
        if (static_cast<int>(nb.size()) < m) continue;
        if (naive_has_cycle(induced(g, nb), m)) return true;
    }
    return false;
}

Graph graph_from_mask(int order, unsigned long long mask) {
    Graph g(order);
    int bit = 0;
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1ULL) g.add_edge(u, v);
    return g;
}

Graph random_graph(int order, std::mt19937_64& rng, int density_percent = 50) {
    Graph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (static_cast<int>(rng() % 100) < density_percent) g.add_edge(u, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

} // namespace

TEST_CASE("longest path: pinned values") {
    CHECK(longest_path_order(star_graph(6)) == 3);
    CHECK(longest_path_order(cycle_graph(6)) == 6);
    CHECK(longest_path_order(clique_union({3, 3})) == 3);
    CHECK(longest_path_order(empty_graph(0)) == 0);
    CHECK(longest_path_order(empty_graph(4)) == 1);
    CHECK(longest_path_order(petersen()) == 10);
}

TEST_CASE("has_path: pinned values and monotonicity") {
    CHECK_FALSE(has_path(star_graph(6), 4));
    CHECK(has_path(cycle_graph(5), 5));
    CHECK_FALSE(has_path(clique_union({2, 2, 2, 2}), 3));
    std::mt19937_64 rng(3);
    for (int round = 0; round < 30; ++round) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 8), rng);
        int lp = longest_path_order(g);
        for (int k = 1; k <= g.order() + 1; ++k) CHECK(has_path(g, k) == (k <= lp));
    }
}

TEST_CASE("longest path agrees with the naive oracle, exhaustively to order 5") {
    for (int order = 0; order <= 5; ++order) {
        unsigned long long total = 1ULL << (order * (order - 1) / 2);
        for (unsigned long long mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(order, mask);
            CHECK(longest_path_order(g) == naive_longest_path(g));
        }
    }
}

TEST_CASE("longest path agrees with the naive oracle on random graphs of order 7..8") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 100; ++round) {
        int order = 7 + static_cast<int>(rng() % 2);
        Graph g = random_graph(order, rng, 15 + static_cast<int>(rng() % 70));
        CHECK(longest_path_order(g) == naive_longest_path(g));
    }
}

TEST_CASE("anchored longest paths") {
    Graph p4 = path_graph(4);
    CHECK(longest_path_from(p4, 0) == 4);
    CHECK(longest_path_from(p4, 1) == 3);
    CHECK(longest_path_between(p4, 0, 3) == 4);
    CHECK(longest_path_between(p4, 0, 2) == 3);
    CHECK(longest_path_between(p4, 1, 2) == 2);

    Graph star = star_graph(6);
    CHECK(longest_path_from(star, 0) == 2);
    CHECK(longest_path_from(star, 3) == 3);
    CHECK(longest_path_between(star, 1, 2) == 3);
    CHECK(longest_path_between(star, 0, 4) == 2);

    Graph two = clique_union({3, 3});
    CHECK(longest_path_between(two, 0, 5) == 0); // different components
    CHECK(longest_path_from(two, 4) == 3);
    CHECK_THROWS_AS(longest_path_between(two, 2, 2), std::invalid_argument);

    // anchored results never exceed the free optimum and are consistent
    // with it: some anchor always achieves the optimum
    std::mt19937_64 rng(23);
    for (int round = 0; round < 40; ++round) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 7), rng);
        int lp = longest_path_order(g);
        int best_anchor = 0;
        for (int v = 0; v < g.order(); ++v) {
            int from = longest_path_from(g, v);
            CHECK(from <= lp);
            best_anchor = std::max(best_anchor, from);
        }
        CHECK(best_anchor == lp);
    }
}

TEST_CASE("longest cycle and exact-length cycles: pinned values") {
    CHECK(longest_cycle_order(path_graph(6)) == 0);
    CHECK(longest_cycle_order(star_graph(9)) == 0);
    CHECK(longest_cycle_order(cycle_graph(5)) == 5);
    CHECK(longest_cycle_order(complete_graph(4)) == 4);
    CHECK(longest_cycle_order(empty_graph(0)) == 0);

    CHECK(has_cycle_exact(complete_graph(4), 4));
    CHECK_FALSE(has_cycle_exact(complete_multipartite({3, 3}), 5));
    CHECK_FALSE(has_cycle_exact(cycle_graph(6), 4));
    CHECK(has_cycle_exact(complete_multipartite({3, 3}), 6));
    CHECK_THROWS_AS(has_cycle_exact(complete_graph(4), 2), std::invalid_argument);

    // Petersen: girth 5, circumference 9, famously no 7-cycle
    Graph pet = petersen();
    CHECK(longest_cycle_order(pet) == 9);
    std::vector<int> present{5, 6, 8, 9};
    for (int len = 3; len <= 10; ++len)
        CHECK(has_cycle_exact(pet, len) ==
              (std::find(present.begin(), present.end(), len) != present.end()));
}

TEST_CASE("exact-length cycles agree with the naive oracle, exhaustively to order 5") {
    for (int order = 3; order <= 5; ++order) {
        unsigned long long total = 1ULL << (order * (order - 1) / 2);
        for (unsigned long long mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(order, mask);
            for (int m = 3; m <= order; ++m) CHECK(has_cycle_exact(g, m) == naive_has_cycle(g, m));
        }
    }
}

TEST_CASE("cycle detectors agree on random graphs") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 60; ++round) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 4), rng, 20 + static_cast<int>(rng() % 60));
        int lc = longest_cycle_order(g);
        int naive_best = 0;
        for (int m = 3; m <= g.order(); ++m) {
            bool exact = has_cycle_exact(g, m);
            CHECK(exact == naive_has_cycle(g, m));
            if (exact) naive_best = m;
        }
        CHECK(lc == naive_best);
    }
}

TEST_CASE("wheels: pinned values") {
    CHECK(has_wheel(complete_graph(6), 5));
    CHECK_FALSE(has_wheel(complete_multipartite({3, 3}), 3));
    CHECK_FALSE(has_wheel(complement(clique_union({2, 2, 2, 2})), 7));

    // an actual wheel: hub 0 joined to the 5-cycle 1..5
    Graph w5(6);
    for (int i = 1; i <= 5; ++i) {
        w5.add_edge(0, i);
        w5.add_edge(i, i == 5 ? 1 : i + 1);
    }
    CHECK(has_wheel(w5, 5));
    CHECK_FALSE(has_wheel(w5, 4));
    CHECK_FALSE(has_wheel(w5, 3));
    CHECK_THROWS_AS(has_wheel(w5, 2), std::invalid_argument);
}

TEST_CASE("wheels agree with the naive oracle on random graphs") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 40; ++round) {
        Graph g = random_graph(5 + static_cast<int>(rng() % 4), rng, 40 + static_cast<int>(rng() % 50));
        for (int m = 3; m < g.order(); ++m) CHECK(has_wheel(g, m) == naive_has_wheel(g, m));
    }
}

TEST_CASE("multipartite cycle criterion") {
    CHECK(multipartite_cycle_exists({3, 3}, 6));
    CHECK_FALSE(multipartite_cycle_exists({5, 1}, 4));
    CHECK(multipartite_cycle_exists({5, 5}, 8));
    CHECK_FALSE(multipartite_cycle_exists({5, 5}, 5)); // odd cycle in bipartite
    CHECK_FALSE(multipartite_cycle_exists({7}, 3));    // one part: edgeless

    // structural criterion vs generic detector, all profiles totalling <= 9
    std::vector<std::vector<int>> profiles;
    std::vector<int> current;
    // nondecreasing part lists with total in [2,9]
    std::function<void(int, int)> gen = [&](int min_part, int remaining) {
        if (!current.empty()) profiles.push_back(current);
        for (int p = min_part; p <= remaining; ++p) {
            current.push_back(p);
            gen(p, remaining - p);
            current.pop_back();
        }
    };
    gen(1, 9);
    for (const auto& parts : profiles) {
        Graph g = complete_multipartite(parts);
        for (int m = 3; m <= g.order(); ++m)
            CHECK(multipartite_cycle_exists(parts, m) == has_cycle_exact(g, m));
    }
}

TEST_CASE("clique-complement wheel criterion vs generic detector") {
    CHECK_FALSE(cliques_complement_has_wheel({2, 2, 2, 2}, 7));
    CHECK_FALSE(cliques_complement_has_wheel({9, 9, 9}, 21));
    CHECK(cliques_complement_has_wheel({5, 5, 5}, 8));

    std::vector<std::vector<int>> profiles;
    std::vector<int> current;
    std::function<void(int, int)> gen = [&](int min_part, int remaining) {
        if (current.size() >= 1) profiles.push_back(current);
        for (int p = min_part; p <= remaining; ++p) {
            current.push_back(p);
            gen(p, remaining - p);
            current.pop_back();
        }
    };
    gen(1, 9);
    for (const auto& parts : profiles) {
        Graph comp = complement(clique_union(parts));
        for (int m = 3; m <= comp.order(); ++m)
            CHECK(cliques_complement_has_wheel(parts, m) == has_wheel(comp, m));
    }
}

TEST_CASE("resource limits are enforced and reported") {
    DetectorLimits tight;
    tight.max_component_order_for_path_dp = 5;
    tight.max_order_for_cycle_search = 5;
    CHECK_THROWS_AS(longest_path_order(complete_graph(6), tight), ResourceLimitError);
    CHECK(longest_path_order(clique_union({5, 5, 5}), tight) == 5); // per-component limit
    CHECK_THROWS_AS(longest_cycle_order(cycle_graph(6), tight), ResourceLimitError);
    CHECK_THROWS_AS(has_cycle_exact(cycle_graph(6), 4, tight), ResourceLimitError);
    CHECK_THROWS_AS(has_wheel(complete_graph(7), 3, tight), ResourceLimitError);
    CHECK(has_wheel(complete_graph(6), 4, tight)); // order limit+1 is allowed

    DetectorLimits bad;
    bad.max_component_order_for_path_dp = 2;
    CHECK_THROWS_AS(longest_path_order(path_graph(2), bad), std::invalid_argument);
}
