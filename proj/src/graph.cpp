#include "pathwheel/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pw {

Graph::Graph(int order) {
    if (order < 0) throw std::invalid_argument("Graph: negative order");
    order_ = order;
    words_ = (order + 63) / 64;
    bits_.assign(static_cast<std::size_t>(order) * words_, 0);
}

void Graph::check_vertex(int v, const char* who) const {
    if (v < 0 || v >= order_) throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, "has_edge");
    check_vertex(v, "has_edge");
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v, "neighbors");
    VertexSet out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (std::uint64_t w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

Graph empty_graph(int k) { return Graph(k); }

Graph complete_graph(int k) {
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int k) {
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g = path_graph(k);
    g.add_edge(k - 1, 0);
    return g;
}

Graph star_graph(int k) {
    Graph g(k);
    for (int v = 1; v < k; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("complete_multipartite: negative part");
        total += p;
    }
    Graph g(total);
    int offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int next = offset + parts[i];
        for (int u = offset; u < next; ++u)
            for (int v = next; v < total; ++v) g.add_edge(u, v);
        offset = next;
    }
    return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const Graph& p : parts) total += p.order();
    Graph g(total);
    int offset = 0;
    for (const Graph& p : parts) {
        for (int u = 0; u < p.order(); ++u)
            for (int v = u + 1; v < p.order(); ++v)
                if (p.has_edge(u, v)) g.add_edge(offset + u, offset + v);
        offset += p.order();
    }
    return g;
}

Graph clique_union(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("clique_union: negative part");
        total += p;
    }
    Graph g(total);
    int offset = 0;
    for (int p : parts) {
        for (int u = offset; u < offset + p; ++u)
            for (int v = u + 1; v < offset + p; ++v) g.add_edge(u, v);
        offset += p;
    }
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.order()) throw std::invalid_argument("induced: vertex out of range");
        if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("induced: set must be strictly ascending");
    }
    Graph h(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph add_edge_copy(const Graph& g, int u, int v) {
    Graph h = g;
    h.add_edge(u, v);
    return h;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int start = 0; start < g.order(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        VertexSet comp;
        VertexSet stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("min_degree: empty graph");
    int best = g.degree(0);
    for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

namespace {

// Iterative Tarjan lowpoint computation; recursion depth could reach the
// order, which is harmless here but an explicit stack costs nothing.
struct CutFinder {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<char> is_cut;
    int timer = 0;

    explicit CutFinder(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.order()), -1),
          low(static_cast<std::size_t>(graph.order()), 0),
          parent(static_cast<std::size_t>(graph.order()), -1),
          is_cut(static_cast<std::size_t>(graph.order()), 0) {}

    void run(int root) {
        struct Frame { int v; VertexSet nbrs; std::size_t next; };
        std::vector<Frame> stack;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, g.neighbors(root), 0});
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < f.nbrs.size()) {
                int u = f.nbrs[f.next++];
                if (disc[static_cast<std::size_t>(u)] == -1) {
                    parent[static_cast<std::size_t>(u)] = f.v;
                    if (f.v == root) ++root_children;
                    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                    stack.push_back({u, g.neighbors(u), 0});
                } else if (u != parent[static_cast<std::size_t>(f.v)]) {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (p != root && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)])
                        is_cut[static_cast<std::size_t>(p)] = 1;
                }
            }
        }
        if (root_children >= 2) is_cut[static_cast<std::size_t>(root)] = 1;
    }
};

} // namespace

VertexSet cut_vertices(const Graph& g) {
    CutFinder finder(g);
    for (int v = 0; v < g.order(); ++v)
        if (finder.disc[static_cast<std::size_t>(v)] == -1) finder.run(v);
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (finder.is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

bool is_two_connected(const Graph& g) {
    if (g.order() < 3) throw std::invalid_argument("is_two_connected: need at least 3 vertices");
    return is_connected(g) && cut_vertices(g).empty();
}

std::string to_graph6(const Graph& g) {
    if (g.order() > 62) throw std::invalid_argument("to_graph6: order above 62 unsupported");
    std::string out;
    out.push_back(static_cast<char>(g.order() + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("from_graph6: empty input");
    for (char c : s)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw std::invalid_argument("from_graph6: byte outside graph6 range");
    int order = s[0] - 63;
    // 63+63 = 126 would announce the multi-byte order form, out of scope
    if (order == 63) throw std::invalid_argument("from_graph6: long order form unsupported");
    long long triangle_bits = static_cast<long long>(order) * (order - 1) / 2;
    std::size_t expected = 1 + static_cast<std::size_t>((triangle_bits + 5) / 6);
    if (s.size() != expected) throw std::invalid_argument("from_graph6: length does not match order");
    Graph g(order);
    long long bit = 0;
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = s[static_cast<std::size_t>(1 + bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    // any leftover padding bits in the final byte must be zero
    for (long long pad = triangle_bits; pad % 6 != 0; ++pad) {
        int byte = s[static_cast<std::size_t>(1 + pad / 6)] - 63;
        if ((byte >> (5 - pad % 6)) & 1)
            throw std::invalid_argument("from_graph6: nonzero padding bits");
    }
    return g;
}

} // namespace pw
