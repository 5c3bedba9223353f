#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "pathwheel/detect.hpp"
#include "pathwheel/errors.hpp"
#include "pathwheel/graph.hpp"
#include "pathwheel/search.hpp"

using namespace pw;
using namespace pw::search;

namespace {

Graph graph_from_mask(int order, std::uint32_t mask) {
    Graph g(order);
    int bit = 0;
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

std::uint32_t code_under(const Graph& g, const std::vector<int>& perm) {
    const int k = g.order();
    std::uint32_t code = 0;
    int bit = 0;
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(perm[i], perm[j])) code |= 1u << bit;
    return code;
}

// isomorphism key by sheer force: minimum code over all labelings
std::uint32_t iso_key(const Graph& g) {
    const int k = g.order();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
        best = std::min(best, code_under(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return k == 0 ? 0 : best;
}

// iso keys of every labeled graph on t vertices, cached per order (the
// t = 6 table is the expensive one and several tests share it)
const std::vector<std::uint32_t>& key_table(int t) {
    static std::map<int, std::vector<std::uint32_t>> cache;
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    std::uint64_t total = 1ull << (t * (t - 1) / 2);
    std::vector<std::uint32_t> keys(total);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        keys[mask] = iso_key(graph_from_mask(t, static_cast<std::uint32_t>(mask)));
    return cache.emplace(t, std::move(keys)).first->second;
}

int brute_class_count(int n, int t, bool connected_only) {
    const auto& keys = key_table(t);
    std::set<std::uint32_t> classes;
    for (std::uint64_t mask = 0; mask < keys.size(); ++mask) {
        Graph g = graph_from_mask(t, static_cast<std::uint32_t>(mask));
        if (connected_only && !is_connected(g)) continue;
        if (has_path(g, n)) continue;
        classes.insert(keys[mask]);
    }
    return static_cast<int>(classes.size());
}

} // namespace

TEST_CASE("enumeration matches brute-force isomorphism classes") {
    for (int n : {3, 4, 5, 6}) {
        for (int t = 0; t <= 6; ++t) {
            auto all = enum_path_free(n, t);
            CHECK(static_cast<int>(all.size()) == brute_class_count(n, t, false));

            std::set<std::uint32_t> seen;
            for (const Graph& g : all) {
                CHECK(g.order() == t);
                CHECK_FALSE(has_path(g, n));
                CHECK(seen.insert(iso_key(g)).second); // pairwise non-isomorphic
            }

            if (t >= 1) {
                auto connected = enum_connected_path_free(n, t);
                int exactly_t = 0;
                for (const Graph& g : connected) {
                    CHECK(is_connected(g));
                    CHECK_FALSE(has_path(g, n));
                    if (g.order() == t) ++exactly_t;
                }
                CHECK(exactly_t == brute_class_count(n, t, true));
            }
        }
    }
}

TEST_CASE("catalogue sizes stay pinned") {
    CHECK(enum_connected_path_free(3, 5).size() == 2);  // K_1 and K_2
    CHECK(enum_connected_path_free(4, 4).size() == 5);  // + P_3, K_3, K_{1,3}
    CHECK(enum_connected_path_free(4, 6).size() == 7);  // + two more stars
    CHECK(enum_connected_path_free(5, 5).size() == 13);
    CHECK(enum_path_free(3, 2).size() == 2);
    CHECK(enum_path_free(3, 4).size() == 3);            // matchings: 0, 1, 2 edges
    CHECK(enum_path_free(4, 5).size() == 9);
    CHECK(enum_path_free(3, 0).size() == 1);            // the empty graph
    CHECK(enum_path_free(3, 0)[0].order() == 0);
}

TEST_CASE("star closure carries the order-4 catalogue past order 10") {
    auto pieces = enum_connected_path_free(4, 12);
    // K_1, K_2, two order-3 graphs, one star per order 4..12
    CHECK(pieces.size() == 13);
    for (const Graph& g : pieces) {
        CHECK_FALSE(has_path(g, 4));
        CHECK(is_connected(g));
    }

    // piece-type count per order: 1, 1, 2, then 1 for each larger order;
    // multisets summing to 13 counted by a plain coin-change DP
    std::vector<long long> ways(14, 0);
    ways[0] = 1;
    std::vector<int> orders{1, 2, 3, 3};
    for (int o = 4; o <= 13; ++o) orders.push_back(o);
    for (int o : orders)
        for (int s = o; s <= 13; ++s) ways[s] += ways[s - o];
    CHECK(enum_path_free(4, 13).size() == static_cast<std::size_t>(ways[13]));

    CHECK_THROWS_AS(enum_connected_path_free(5, 11), ResourceLimitError);
    SearchLimits lim;
    CHECK_THROWS_AS(for_each_path_free(5, 11, lim, [](const Graph&, std::uint64_t) {}),
                    ResourceLimitError);
}

TEST_CASE("generation indices are stable and the budget bites") {
    std::vector<std::uint64_t> indices;
    std::vector<Graph> graphs;
    SearchLimits lim;
    for_each_path_free(3, 8, lim, [&](const Graph& g, std::uint64_t idx) {
        indices.push_back(idx);
        graphs.push_back(g);
    });
    REQUIRE(indices.size() == 5); // 0..4 disjoint edges
    for (std::size_t i = 0; i < indices.size(); ++i) CHECK(indices[i] == i);
    CHECK(graphs.back() == clique_union({2, 2, 2, 2}));
    CHECK(graphs.front() == empty_graph(8));

    SearchLimits tight;
    tight.catalogue_budget = 3;
    CHECK_THROWS_AS(enum_path_free(4, 8, tight), ResourceLimitError);
    tight.catalogue_budget = 6;
    CHECK_THROWS_AS(enum_path_free(3, 12, tight), ResourceLimitError); // 7 matchings
    tight.catalogue_budget = 7;
    CHECK(enum_path_free(3, 12, tight).size() == 7);
}

TEST_CASE("upper-bound verification pins the matching counterexample") {
    SearchReport bad = verify_upper_bound(3, 7, 8);
    CHECK(bad.n == 3);
    CHECK(bad.m == 7);
    CHECK(bad.t == 8);
    CHECK_FALSE(bad.verified);
    CHECK(bad.graphs_enumerated == 5);
    REQUIRE(bad.counterexample.has_value());
    CHECK(*bad.counterexample == clique_union({2, 2, 2, 2}));

    SearchReport good = verify_upper_bound(3, 7, 9);
    CHECK(good.verified);
    CHECK(good.graphs_enumerated == 5);
    CHECK_FALSE(good.counterexample.has_value());
}

TEST_CASE("reports do not depend on the thread count") {
    SearchLimits one;
    one.threads = 1;
    SearchLimits four;
    four.threads = 4;
    for (auto [n, m, t] : {std::tuple{4, 9, 10}, std::tuple{3, 7, 8}, std::tuple{3, 9, 10}}) {
        SearchReport a = verify_upper_bound(n, m, t, one);
        SearchReport b = verify_upper_bound(n, m, t, four);
        CHECK(a.verified == b.verified);
        CHECK(a.graphs_enumerated == b.graphs_enumerated);
        CHECK(a.counterexample.has_value() == b.counterexample.has_value());
        if (a.counterexample && b.counterexample)
            CHECK(*a.counterexample == *b.counterexample);
    }
}

TEST_CASE("confirm_ramsey pins desk-scale values") {
    ConfirmReport c37 = confirm_ramsey(3, 7);
    CHECK(c37.ramsey_value == 9);
    CHECK(c37.upper_verified);
    CHECK(c37.witness.parts == std::vector<int>{2, 2, 2, 2});
    CHECK(c37.witness_report.path_free);
    CHECK(c37.witness_report.wheel_free);
    CHECK(c37.graphs_enumerated == 5);

    ConfirmReport c49 = confirm_ramsey(4, 9);
    CHECK(c49.ramsey_value == 11);
    CHECK(c49.upper_verified);
    CHECK(c49.witness.parts == std::vector<int>{3, 3, 2, 2});
    CHECK(c49.witness_report.path_free);
    CHECK(c49.witness_report.wheel_free);
}

TEST_CASE("search argument validation") {
    CHECK_THROWS_AS(verify_upper_bound(0, 7, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_upper_bound(3, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_upper_bound(3, 7, -1), std::invalid_argument);
    CHECK_THROWS_AS(enum_path_free(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(enum_path_free(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(enum_connected_path_free(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(enum_connected_path_free(3, -1), std::invalid_argument);
}
