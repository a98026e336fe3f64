#include "toughham/oracles.hpp"

#include <bit>

namespace toughham {

namespace {

int count_components(const Graph& g, VertexSet keep) {
    int c = 0;
    std::uint64_t seen = 0;
    for (std::uint64_t m = keep.bits(); m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if ((seen >> v) & 1) continue;
        seen |= component_of(g, v, keep).bits();
        ++c;
    }
    return c;
}

void require_small(const Graph& g) {
    if (g.n() > 22) throw CapExceededError("brute-force oracle beyond n = 22");
}

}  // namespace

ToughnessResult brute_force_toughness(const Graph& g) {
    if (g.n() == 0) throw EmptyGraphError("toughness of empty graph");
    require_small(g);
    if (g.is_complete()) return {std::nullopt, VertexSet()};
    bool found = false;
    Rational best(0);
    VertexSet best_set;
    const std::uint64_t all = g.vertices().bits();
    for (std::uint64_t s = 0; s <= all; ++s) {
        if (s & ~all) continue;
        const int comps = count_components(g, VertexSet(all & ~s));
        if (comps < 2) continue;
        const Rational ratio(std::popcount(s), comps);
        const VertexSet set(s);
        if (!found || ratio < best ||
            (ratio == best && (set.count() < best_set.count() ||
                               (set.count() == best_set.count() &&
                                VertexSet::lex_less(set, best_set))))) {
            found = true;
            best = ratio;
            best_set = set;
        }
    }
    return {best, best_set};
}

std::pair<int, VertexSet> brute_force_independence(const Graph& g) {
    require_small(g);
    int best = -1;
    VertexSet best_set;
    const std::uint64_t all = g.vertices().bits();
    for (std::uint64_t s = 0; s <= all; ++s) {
        if (s & ~all) continue;
        bool independent = true;
        for (std::uint64_t m = s; m && independent; m &= m - 1)
            if (g.neighbors(std::countr_zero(m)).bits() & s) independent = false;
        if (!independent) continue;
        const int size = std::popcount(s);
        if (size > best || (size == best && VertexSet::lex_less(VertexSet(s), best_set))) {
            best = size;
            best_set = VertexSet(s);
        }
    }
    return {best, best_set};
}

int brute_force_connectivity(const Graph& g) {
    const int n = g.n();
    if (n <= 1) return 0;
    require_small(g);
    if (g.is_complete()) return n - 1;
    const std::uint64_t all = g.vertices().bits();
    for (int size = 0; size <= n - 2; ++size)
        for (std::uint64_t s = 0; s <= all; ++s) {
            if ((s & ~all) || std::popcount(s) != size) continue;
            if (count_components(g, VertexSet(all & ~s)) >= 2) return size;
        }
    return n - 1;
}

namespace {

bool ham_extend(const Graph& g, std::vector<int>& path, std::uint64_t used) {
    if (static_cast<int>(path.size()) == g.n()) return g.has_edge(path.back(), path.front());
    for (int v = 1; v < g.n(); ++v) {
        if ((used >> v) & 1) continue;
        if (!g.has_edge(path.back(), v)) continue;
        path.push_back(v);
        if (ham_extend(g, path, used | (1ULL << v))) return true;
        path.pop_back();
    }
    return false;
}

void longest_extend(const Graph& g, int start, std::vector<int>& path, std::uint64_t used,
                    int& best) {
    if (static_cast<int>(path.size()) >= 3 && g.has_edge(path.back(), start))
        best = std::max(best, static_cast<int>(path.size()));
    for (int v = start + 1; v < g.n(); ++v) {
        if ((used >> v) & 1) continue;
        if (!g.has_edge(path.back(), v)) continue;
        path.push_back(v);
        longest_extend(g, start, path, used | (1ULL << v), best);
        path.pop_back();
    }
}

}  // namespace

bool brute_force_hamiltonian(const Graph& g) {
    if (g.n() < 3) throw TooSmallError("hamiltonian cycle needs n >= 3");
    require_small(g);
    std::vector<int> path{0};
    return ham_extend(g, path, 1);
}

int brute_force_longest_cycle_length(const Graph& g) {
    require_small(g);
    int best = 0;
    for (int start = 0; start < g.n(); ++start) {
        std::vector<int> path{start};
        longest_extend(g, start, path, 1ULL << start, best);
    }
    return best;
}

}  // namespace toughham
