#include "toughham/corpus.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>

#include "toughham/generators.hpp"
#include "toughham/graph6.hpp"

namespace toughham {

namespace {

constexpr int pair_index(int u, int v) {  // u < v
    return v * (v - 1) / 2 + u;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_index(u, v)) & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// Edge-bit remap tables for all n! vertex permutations.
std::vector<std::vector<int>> permutation_tables(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> tables;
    do {
        std::vector<int> table(static_cast<std::size_t>(n * (n - 1) / 2));
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                const int pu = perm[static_cast<std::size_t>(u)];
                const int pv = perm[static_cast<std::size_t>(v)];
                table[static_cast<std::size_t>(pair_index(u, v))] =
                    pair_index(std::min(pu, pv), std::max(pu, pv));
            }
        tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

std::uint64_t canonical_mask(std::uint64_t mask, const std::vector<std::vector<int>>& tables) {
    std::uint64_t best = ~0ULL;
    for (const auto& table : tables) {
        std::uint64_t mapped = 0;
        for (std::uint64_t m = mask; m; m &= m - 1)
            mapped |= 1ULL << table[static_cast<std::size_t>(std::countr_zero(m))];
        best = std::min(best, mapped);
    }
    return best;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 8) throw CapExceededError("enumeration supported for 1 <= n <= 8");
    std::vector<std::uint64_t> level{0};  // the single graph on one vertex
    for (int m = 2; m <= n; ++m) {
        const auto tables = permutation_tables(m);
        const int new_edge_base = (m - 1) * (m - 2) / 2;
        std::vector<std::uint64_t> next;
        for (const std::uint64_t parent : level)
            for (std::uint64_t nb = 0; nb < (1ULL << (m - 1)); ++nb) {
                std::uint64_t child = parent;
                for (std::uint64_t b = nb; b; b &= b - 1)
                    child |= 1ULL << (new_edge_base + std::countr_zero(b));
                next.push_back(canonical_mask(child, tables));
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (const std::uint64_t mask : level) out.push_back(graph_from_mask(n, mask));
    return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<Graph> gnp_stream(int n_lo, int n_hi, const std::vector<Rational>& ps,
                              std::uint64_t seed, long count) {
    if (n_lo < 1 || n_hi < n_lo) throw InvalidSizeError("bad gnp stream range");
    if (ps.empty()) throw InvalidSizeError("gnp stream needs at least one p");
    const long span = n_hi - n_lo + 1;
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        const int n = n_lo + static_cast<int>(i % span);
        const Rational& p = ps[static_cast<std::size_t>((i / span) % static_cast<long>(ps.size()))];
        out.push_back(random_gnp(n, p, derive_seed(seed, static_cast<std::uint64_t>(i))));
    }
    return out;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedGraph6Error("cannot open " + path);
    return read_graph6_stream(in);
}

}  // namespace toughham
