#include "toughham/graph.hpp"

#include <bit>
#include <string>

namespace toughham {

Graph Graph::empty(int n) {
    if (n < 0) throw InvalidSizeError("negative vertex count");
    if (n > kMaxVertices) throw TooLargeError("n > 64: " + std::to_string(n));
    return Graph(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = Graph::empty(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidSizeError("edge endpoint out of range");
        if (u == v) throw InvalidSizeError("loop edge rejected");
        g.adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
        g.adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
    }
    return g;
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adj) {
    if (adj.size() > static_cast<std::size_t>(kMaxVertices))
        throw TooLargeError("n > 64: " + std::to_string(adj.size()));
    Graph g(static_cast<int>(adj.size()), std::move(adj));
    g.check_invariants();
    return g;
}

void Graph::check_invariants() const {
    const std::uint64_t range = VertexSet::full(n_).bits();
    for (int v = 0; v < n_; ++v) {
        const std::uint64_t row = adj_[static_cast<std::size_t>(v)];
        if (row & ~range) throw InvalidSizeError("adjacency bit beyond n");
        if ((row >> v) & 1) throw InvalidSizeError("loop in adjacency");
        for (std::uint64_t m = row; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (!((adj_[static_cast<std::size_t>(u)] >> v) & 1))
                throw InvalidSizeError("asymmetric adjacency");
        }
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

VertexSet Graph::neighborhood_of(VertexSet s) const {
    std::uint64_t acc = 0;
    for (std::uint64_t m = s.bits(); m; m &= m - 1)
        acc |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
    return VertexSet(acc) - s;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t above = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        for (int v = u + 1; above; above >>= 1, ++v)
            if (above & 1) out.emplace_back(u, v);
    }
    return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
    const std::vector<int> labels = s.to_vector();
    const int m = static_cast<int>(labels.size());
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)])) {
                adj[static_cast<std::size_t>(i)] |= 1ULL << j;
                adj[static_cast<std::size_t>(j)] |= 1ULL << i;
            }
    return {Graph::from_adjacency(std::move(adj)), labels};
}

Graph remove_vertices(const Graph& g, VertexSet s) {
    return induced_subgraph(g, g.vertices() - s).first;
}

VertexSet component_of(const Graph& g, int v, VertexSet within) {
    std::uint64_t comp = 1ULL << v;
    std::uint64_t frontier = comp;
    const std::uint64_t allowed = within.bits();
    while (frontier) {
        std::uint64_t grow = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            grow |= g.neighbors(std::countr_zero(m)).bits();
        frontier = grow & allowed & ~comp;
        comp |= frontier;
    }
    return VertexSet(comp);
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::uint64_t seen = 0;
    const std::uint64_t all = g.vertices().bits();
    for (int v = 0; v < g.n(); ++v) {
        if ((seen >> v) & 1) continue;
        const VertexSet comp = component_of(g, v, VertexSet(all));
        seen |= comp.bits();
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return component_of(g, 0, g.vertices()).count() == g.n();
}

}  // namespace toughham
