#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "toughham/errors.hpp"
#include "toughham/vertex_set.hpp"

namespace toughham {

inline constexpr int kMaxVertices = 64;

// Immutable simple undirected graph on dense labels 0..n-1, n <= 64,
// one 64-bit neighbor mask per vertex. Symmetry and irreflexivity are
// enforced at construction; instances are safe to share across threads.
class Graph {
public:
    static Graph empty(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_adjacency(std::vector<std::uint64_t> adj);

    int n() const { return n_; }
    int edge_count() const;

    VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
    VertexSet closed_neighborhood(int v) const { return neighbors(v).with(v); }
    int degree(int v) const { return neighbors(v).count(); }
    bool has_edge(int u, int v) const { return neighbors(u).contains(v); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    // N(S) = union of neighborhoods minus S itself.
    VertexSet neighborhood_of(VertexSet s) const;

    bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

    // All edges (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {}
    void check_invariants() const;

    int n_;
    std::vector<std::uint64_t> adj_;
};

// G[S], relabeled to 0..|S|-1. The label map sends new label i to its
// original label (ascending).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s);

Graph remove_vertices(const Graph& g, VertexSet s);

// Maximal connected vertex sets, sorted by minimum vertex label.
std::vector<VertexSet> components(const Graph& g);

// Component containing v, as a vertex set of g restricted to `within`.
VertexSet component_of(const Graph& g, int v, VertexSet within);

bool is_connected(const Graph& g);

}  // namespace toughham
