#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pw {

using VertexSet = std::vector<int>; // sorted ascending, no duplicates

// Simple undirected graph, adjacency stored as bitset rows (row-major
// 64-bit words). Treated as an immutable value once built: the only
// mutator is add_edge, used by builders and tests during construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return order_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v); // distinct valid endpoints; idempotent
    int degree(int v) const;
    VertexSet neighbors(int v) const;
    std::size_t edge_count() const;

    // Raw word row for vertex v; words_per_row() words.
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    void check_vertex(int v, const char* who) const;

    int order_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Builders. Vertex numbering is canonical: components and parts occupy
// consecutive index ranges in the order given.
Graph empty_graph(int k);
Graph complete_graph(int k);
Graph path_graph(int k);
Graph cycle_graph(int k);     // k >= 3
Graph star_graph(int k);      // K_{1,k-1}: vertex 0 is the center
Graph complete_multipartite(const std::vector<int>& parts);
Graph disjoint_union(const std::vector<Graph>& parts);
Graph clique_union(const std::vector<int>& parts);

Graph complement(const Graph& g);
Graph induced(const Graph& g, const VertexSet& s);
Graph add_edge_copy(const Graph& g, int u, int v);

// Structure queries.
std::vector<VertexSet> components(const Graph& g);
int min_degree(const Graph& g); // order >= 1
bool is_connected(const Graph& g); // empty graph counts as connected
bool is_two_connected(const Graph& g); // order >= 3 required
VertexSet cut_vertices(const Graph& g);

// graph6 interchange, dense short form only (order <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

} // namespace pw
