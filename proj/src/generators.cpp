#include "toughham/generators.hpp"

#include <random>
#include <string>

namespace toughham {

namespace {

void require_fits(long total) {
    if (total > kMaxVertices)
        throw TooLargeError("construction needs " + std::to_string(total) + " > 64 vertices");
}

}  // namespace

Graph complete(int n) {
    if (n < 0) throw InvalidSizeError("complete(n < 0)");
    require_fits(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    const std::uint64_t all = VertexSet::full(n).bits();
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = all & ~(1ULL << v);
    return Graph::from_adjacency(std::move(adj));
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw InvalidSizeError("complete_bipartite with negative side");
    require_fits(static_cast<long>(a) + b);
    const int n = a + b;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    const std::uint64_t side_a = VertexSet::full(a).bits();
    const std::uint64_t side_b = VertexSet::full(n).bits() & ~side_a;
    for (int v = 0; v < a; ++v) adj[static_cast<std::size_t>(v)] = side_b;
    for (int v = a; v < n; ++v) adj[static_cast<std::size_t>(v)] = side_a;
    return Graph::from_adjacency(std::move(adj));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidSizeError("cycle(n) needs n >= 3");
    require_fits(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    if (n < 0) throw InvalidSizeError("path(n < 0)");
    require_fits(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    require_fits(static_cast<long>(g1.n()) + g2.n());
    const int shift = g1.n();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g1.n() + g2.n()), 0);
    for (int v = 0; v < g1.n(); ++v) adj[static_cast<std::size_t>(v)] = g1.neighbors(v).bits();
    for (int v = 0; v < g2.n(); ++v)
        adj[static_cast<std::size_t>(shift + v)] = g2.neighbors(v).bits() << shift;
    return Graph::from_adjacency(std::move(adj));
}

Graph p2_union_kp1(int k) {
    if (k < 0) throw InvalidSizeError("p2_union_kp1(k < 0)");
    return disjoint_union(path_graph(2), Graph::empty(k));
}

Graph random_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (n < 0) throw InvalidSizeError("random_gnp(n < 0)");
    require_fits(n);
    if (p < Rational(0) || p > Rational(1)) throw InvalidSizeError("p outside [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    const unsigned __int128 threshold =
        static_cast<unsigned __int128>(p.num()) << 64;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t draw = rng();
            if (static_cast<unsigned __int128>(draw) * static_cast<unsigned __int128>(p.den()) <
                threshold)
                edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

}  // namespace toughham
