#include "toughham/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace toughham {

namespace {

std::vector<int> canonicalize(std::vector<int> order) {
    const auto min_it = std::min_element(order.begin(), order.end());
    std::rotate(order.begin(), min_it, order.end());
    if (order.size() >= 3 && order[1] > order.back())
        std::reverse(order.begin() + 1, order.end());
    return order;
}

}  // namespace

bool is_cycle_of(const Graph& g, const std::vector<int>& order) {
    const std::size_t len = order.size();
    if (len < 3) return false;
    std::uint64_t seen = 0;
    for (int v : order) {
        if (v < 0 || v >= g.n()) return false;
        if ((seen >> v) & 1) return false;
        seen |= 1ULL << v;
    }
    for (std::size_t i = 0; i < len; ++i)
        if (!g.has_edge(order[i], order[(i + 1) % len])) return false;
    return true;
}

OrientedCycle OrientedCycle::from_order(std::vector<int> order, const Graph& g) {
    if (order.size() < 3) throw TooSmallError("cycle needs at least 3 vertices");
    if (!is_cycle_of(g, order)) throw ValidationError("vertex sequence is not a cycle of g");
    return OrientedCycle(canonicalize(std::move(order)));
}

VertexSet OrientedCycle::vertex_set() const {
    std::uint64_t bits = 0;
    for (int v : order_) bits |= 1ULL << v;
    return VertexSet(bits);
}

int OrientedCycle::position_of(int v) const {
    for (std::size_t i = 0; i < order_.size(); ++i)
        if (order_[i] == v) return static_cast<int>(i);
    throw NotOnCycleError("vertex " + std::to_string(v) + " not on cycle");
}

int OrientedCycle::successor(int v) const {
    const std::size_t i = static_cast<std::size_t>(position_of(v));
    return order_[(i + 1) % order_.size()];
}

int OrientedCycle::predecessor(int v) const {
    const std::size_t i = static_cast<std::size_t>(position_of(v));
    return order_[(i + order_.size() - 1) % order_.size()];
}

std::vector<int> segment(const OrientedCycle& c, int u, int v, Direction dir) {
    const int len = c.length();
    int i = c.position_of(u);
    const int j = c.position_of(v);
    std::vector<int> out{u};
    while (i != j) {
        i = dir == Direction::forward ? (i + 1) % len : (i + len - 1) % len;
        out.push_back(c.order()[static_cast<std::size_t>(i)]);
    }
    return out;
}

namespace {

struct HamSearch {
    const Graph& g;
    int n;
    std::vector<int> path;
    std::uint64_t visited = 0;

    bool feasible(int cur) const {
        const std::uint64_t unvisited = g.vertices().bits() & ~visited;
        if (!unvisited) return true;
        // Every unvisited vertex still needs two usable connections
        // (entry and exit; start and current endpoint count).
        for (std::uint64_t m = unvisited; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            const std::uint64_t nb = g.neighbors(u).bits();
            int avail = std::popcount(nb & unvisited & ~(1ULL << u));
            if ((nb >> cur) & 1) ++avail;
            if (nb & 1) ++avail;  // vertex 0 is always the anchor
            if (avail < 2) return false;
        }
        // The rest of the tour lives in unvisited + {cur}: must be connected.
        std::uint64_t reach = 1ULL << cur;
        std::uint64_t frontier = reach;
        const std::uint64_t allowed = unvisited | reach;
        while (frontier) {
            std::uint64_t grow = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                grow |= g.neighbors(std::countr_zero(m)).bits();
            frontier = grow & allowed & ~reach;
            reach |= frontier;
        }
        return (reach & unvisited) == unvisited;
    }

    bool dfs(int cur) {
        if (static_cast<int>(path.size()) == n) return g.has_edge(cur, 0);
        if (!feasible(cur)) return false;
        for (std::uint64_t m = g.neighbors(cur).bits() & ~visited; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            path.push_back(u);
            visited |= 1ULL << u;
            if (dfs(u)) return true;
            visited &= ~(1ULL << u);
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<OrientedCycle> hamiltonian_cycle(const Graph& g) {
    if (g.n() < 3) throw TooSmallError("hamiltonian cycle needs n >= 3");
    HamSearch search{g, g.n()};
    search.path.push_back(0);
    search.visited = 1;
    if (!search.dfs(0)) return std::nullopt;
    return OrientedCycle::from_order(search.path, g);
}

bool hamiltonian_dp(const Graph& g, const SolverCaps& caps) {
    const int n = g.n();
    if (n < 3) throw TooSmallError("hamiltonian cycle needs n >= 3");
    if (n > caps.dp_n)
        throw CapExceededError("dp cap " + std::to_string(caps.dp_n) +
                               " exceeded by n = " + std::to_string(n));
    // dp[mask] = endpoints v of paths that start at 0 and span mask.
    std::vector<std::uint64_t> dp(1ULL << n, 0);
    dp[1] = 1;
    const std::uint64_t full = (n == 64) ? ~0ULL : (1ULL << n) - 1;
    for (std::uint64_t mask = 1; mask <= full; mask += 2) {
        const std::uint64_t ends = dp[mask];
        if (!ends) continue;
        for (std::uint64_t m = ends; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            for (std::uint64_t nb = g.neighbors(v).bits() & ~mask; nb; nb &= nb - 1) {
                const int u = std::countr_zero(nb);
                dp[mask | (1ULL << u)] |= 1ULL << u;
            }
        }
    }
    return (dp[full] & g.neighbors(0).bits() & ~1ULL) != 0;
}

namespace {

// Longest cycle whose minimum vertex is exactly s: Held-Karp reachability
// over the universe {s, ..., n-1}, relabeled so s maps to bit 0.
int longest_cycle_through_min(const Graph& g, int s) {
    const int m = g.n() - s;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v + s).bits() >> s;
    std::vector<std::uint64_t> dp(1ULL << m, 0);
    dp[1] = 1;
    int best = 0;
    for (std::uint64_t mask = 1; mask < (1ULL << m); mask += 2) {
        const std::uint64_t ends = dp[mask];
        if (!ends) continue;
        const int len = std::popcount(mask);
        if (len >= 3 && (ends & adj[0] & ~1ULL)) best = std::max(best, len);
        for (std::uint64_t e = ends; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (std::uint64_t nb = adj[static_cast<std::size_t>(v)] & ~mask; nb; nb &= nb - 1)
                dp[mask | (1ULL << std::countr_zero(nb))] |= 1ULL << std::countr_zero(nb);
        }
    }
    return best;
}

struct ExtractSearch {
    const Graph& g;
    int s;
    int target_len;
    std::uint64_t universe;  // vertices >= s
    std::vector<int> path;
    std::uint64_t visited = 0;

    bool feasible(int cur) const {
        const int need = target_len - static_cast<int>(path.size());
        if (need == 0) return true;
        const std::uint64_t unvisited = universe & ~visited;
        // Reachable part of the unvisited region from cur.
        std::uint64_t reach = 0;
        std::uint64_t frontier = g.neighbors(cur).bits() & unvisited;
        reach = frontier;
        while (frontier) {
            std::uint64_t grow = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                grow |= g.neighbors(std::countr_zero(m)).bits();
            frontier = grow & unvisited & ~reach;
            reach |= frontier;
        }
        if (std::popcount(reach) < need) return false;
        return (reach & g.neighbors(s).bits()) != 0;
    }

    bool dfs(int cur) {
        if (static_cast<int>(path.size()) == target_len) return g.has_edge(cur, s);
        if (!feasible(cur)) return false;
        for (std::uint64_t m = g.neighbors(cur).bits() & universe & ~visited; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            path.push_back(u);
            visited |= 1ULL << u;
            if (dfs(u)) return true;
            visited &= ~(1ULL << u);
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<OrientedCycle> longest_cycle(const Graph& g, const SolverCaps& caps) {
    const int n = g.n();
    if (n > caps.cycle_n)
        throw CapExceededError("longest-cycle cap " + std::to_string(caps.cycle_n) +
                               " exceeded by n = " + std::to_string(n));
    if (n < 3) return std::nullopt;
    int best_len = 0, best_s = -1;
    for (int s = 0; s + 2 < n; ++s) {
        const int len = longest_cycle_through_min(g, s);
        if (len > best_len) {
            best_len = len;
            best_s = s;  // smallest s attaining the maximum, since we keep strict improvements
        }
    }
    if (best_len < 3) return std::nullopt;
    ExtractSearch search{g, best_s, best_len,
                         VertexSet::full(n).bits() & ~((1ULL << best_s) - 1)};
    search.path.push_back(best_s);
    search.visited = 1ULL << best_s;
    if (!search.dfs(best_s)) throw ValidationError("longest-cycle extraction failed");
    return OrientedCycle::from_order(search.path, g);
}

}  // namespace toughham
