#include "toughham/structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace toughham {

int min_degree(const Graph& g) {
    if (g.n() == 0) throw EmptyGraphError("min_degree of empty graph");
    int best = g.n();
    for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
    return best;
}

namespace {

// Unit-capacity max-flow on the vertex-split digraph: node 2v = v_in,
// 2v+1 = v_out. Counts internally-disjoint s-t paths, i.e. the minimum
// s-t vertex cut for nonadjacent s, t (Menger).
class VertexFlow {
public:
    VertexFlow(const Graph& g, int s, int t) : g_(g), s_(s), t_(t) {
        cap_in_.assign(static_cast<std::size_t>(g.n()), 1);
        // used[u][v] marks a saturated arc u_out -> v_in.
        used_.assign(static_cast<std::size_t>(g.n()), 0);
    }

    int run() {
        int flow = 0;
        while (augment()) ++flow;
        return flow;
    }

    // Vertices (other than s, t) reachable-side classification gives the
    // min cut: v is in the cut iff v_in reachable but v_out not.
    VertexSet min_cut() {
        bfs_reachable();
        std::uint64_t cut = 0;
        for (int v = 0; v < g_.n(); ++v) {
            if (v == s_ || v == t_) continue;
            if (reach_in_.contains(v) && !reach_out_.contains(v)) cut |= 1ULL << v;
        }
        return VertexSet(cut);
    }

private:
    bool augment() {
        // BFS on the residual graph; parent edges reconstructed after.
        std::array<int, 128> parent{};
        parent.fill(-1);
        std::array<int, 128> queue{};
        int head = 0, tail = 0;
        const int src = 2 * s_ + 1, dst = 2 * t_;
        queue[tail++] = src;
        parent[static_cast<std::size_t>(src)] = src;
        while (head < tail) {
            const int node = queue[head++];
            if (node == dst) break;
            const int v = node / 2;
            if (node % 2 == 1) {
                // v_out -> u_in for unused edges; plus residual of in-arc.
                for (std::uint64_t m = g_.neighbors(v).bits(); m; m &= m - 1) {
                    const int u = std::countr_zero(m);
                    if ((used_[static_cast<std::size_t>(v)] >> u) & 1) continue;
                    if (parent[static_cast<std::size_t>(2 * u)] >= 0) continue;
                    parent[static_cast<std::size_t>(2 * u)] = node;
                    queue[tail++] = 2 * u;
                }
                if (cap_in_[static_cast<std::size_t>(v)] == 0 &&
                    parent[static_cast<std::size_t>(2 * v)] < 0) {
                    parent[static_cast<std::size_t>(2 * v)] = node;
                    queue[tail++] = 2 * v;
                }
            } else {
                // v_in -> v_out if capacity left; residual edges v_in -> u_out
                // for used arcs u_out -> v_in.
                if (cap_in_[static_cast<std::size_t>(v)] > 0 &&
                    parent[static_cast<std::size_t>(2 * v + 1)] < 0) {
                    parent[static_cast<std::size_t>(2 * v + 1)] = node;
                    queue[tail++] = 2 * v + 1;
                }
                for (std::uint64_t m = g_.neighbors(v).bits(); m; m &= m - 1) {
                    const int u = std::countr_zero(m);
                    if (!((used_[static_cast<std::size_t>(u)] >> v) & 1)) continue;
                    if (parent[static_cast<std::size_t>(2 * u + 1)] >= 0) continue;
                    parent[static_cast<std::size_t>(2 * u + 1)] = node;
                    queue[tail++] = 2 * u + 1;
                }
            }
        }
        if (parent[static_cast<std::size_t>(dst)] < 0) return false;
        int node = dst;
        while (node != src) {
            const int prev = parent[static_cast<std::size_t>(node)];
            apply(prev, node);
            node = prev;
        }
        return true;
    }

    void apply(int from, int to) {
        const int fv = from / 2, tv = to / 2;
        if (fv == tv) {
            // in -> out forward, out -> in residual.
            if (from % 2 == 0)
                cap_in_[static_cast<std::size_t>(fv)] = 0;
            else
                cap_in_[static_cast<std::size_t>(fv)] = 1;
        } else if (from % 2 == 1 && to % 2 == 0) {
            used_[static_cast<std::size_t>(fv)] |= 1ULL << tv;
        } else {
            // residual of tv_out -> fv_in
            used_[static_cast<std::size_t>(tv)] &= ~(1ULL << fv);
        }
    }

    void bfs_reachable() {
        reach_in_ = VertexSet();
        reach_out_ = VertexSet();
        std::array<int, 128> queue{};
        int head = 0, tail = 0;
        auto push = [&](int node) {
            const int v = node / 2;
            VertexSet& set = node % 2 ? reach_out_ : reach_in_;
            if (set.contains(v)) return;
            set = set.with(v);
            queue[tail++] = node;
        };
        push(2 * s_ + 1);
        while (head < tail) {
            const int node = queue[head++];
            const int v = node / 2;
            if (node % 2 == 1) {
                for (std::uint64_t m = g_.neighbors(v).bits(); m; m &= m - 1) {
                    const int u = std::countr_zero(m);
                    if (!((used_[static_cast<std::size_t>(v)] >> u) & 1)) push(2 * u);
                }
                if (cap_in_[static_cast<std::size_t>(v)] == 0) push(2 * v);
            } else {
                if (cap_in_[static_cast<std::size_t>(v)] > 0) push(2 * v + 1);
                for (std::uint64_t m = g_.neighbors(v).bits(); m; m &= m - 1) {
                    const int u = std::countr_zero(m);
                    if ((used_[static_cast<std::size_t>(u)] >> v) & 1) push(2 * u + 1);
                }
            }
        }
    }

    const Graph& g_;
    int s_, t_;
    std::vector<int> cap_in_;
    std::vector<std::uint64_t> used_;
    VertexSet reach_in_, reach_out_;
};

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.n();
    if (n <= 1) return 0;
    if (g.is_complete()) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            VertexFlow flow(g, s, t);
            best = std::min(best, flow.run());
            if (best == 0) break;
        }
    return best;
}

std::optional<VertexSet> min_vertex_cut(const Graph& g) {
    const int n = g.n();
    if (n <= 1 || g.is_complete()) return std::nullopt;
    int best = n;
    std::pair<int, int> best_pair{-1, -1};
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            VertexFlow flow(g, s, t);
            const int f = flow.run();
            if (f < best) {
                best = f;
                best_pair = {s, t};
            }
        }
    VertexFlow flow(g, best_pair.first, best_pair.second);
    flow.run();
    return flow.min_cut();
}

namespace {

// Greedy clique cover of `cands`: an upper bound on the independence
// number of G[cands].
int clique_cover_bound(const Graph& g, std::uint64_t cands) {
    int cliques = 0;
    while (cands) {
        ++cliques;
        const int v = std::countr_zero(cands);
        std::uint64_t clique = 1ULL << v;
        std::uint64_t common = g.neighbors(v).bits() & cands;
        cands &= ~(1ULL << v);
        while (common) {
            const int u = std::countr_zero(common);
            clique |= 1ULL << u;
            cands &= ~(1ULL << u);
            common &= g.neighbors(u).bits() & ~clique;
        }
    }
    return cliques;
}

struct MisState {
    const Graph& g;
    int best_size = -1;
    std::uint64_t best_set = 0;

    // Branch on the smallest candidate, include-branch first: maximal sets
    // are visited in lexicographic order, so the first maximum found is
    // the lex-smallest one. Pruning at <= best cannot discard a later
    // equal-size set we would have preferred.
    void search(std::uint64_t chosen, int size, std::uint64_t cands) {
        if (cands == 0) {
            if (size > best_size) {
                best_size = size;
                best_set = chosen;
            }
            return;
        }
        if (size + clique_cover_bound(g, cands) <= best_size) return;
        const int v = std::countr_zero(cands);
        search(chosen | (1ULL << v), size + 1,
               cands & ~g.closed_neighborhood(v).bits());
        search(chosen, size, cands & ~(1ULL << v));
    }
};

}  // namespace

std::pair<int, VertexSet> independence_number(const Graph& g) {
    MisState state{g};
    state.search(0, 0, g.vertices().bits());
    return {state.best_size, VertexSet(state.best_set)};
}

int independence_number_within(const Graph& g, VertexSet allowed) {
    MisState state{g};
    state.search(0, 0, allowed.bits());
    return state.best_size;
}

std::optional<VertexSet> lex_min_independent_k(const Graph& g, VertexSet allowed, int k) {
    if (k == 0) return VertexSet();
    if (independence_number_within(g, allowed) < k) return std::nullopt;
    std::uint64_t chosen = 0;
    std::uint64_t cands = allowed.bits();
    int need = k;
    while (need > 0) {
        // Greedily take the smallest vertex that still leaves room.
        std::uint64_t scan = cands;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const std::uint64_t rest = cands & ~g.closed_neighborhood(v).bits() &
                                       ~((2ULL << v) - 1);
            if (independence_number_within(g, VertexSet(rest)) >= need - 1) {
                chosen |= 1ULL << v;
                cands = rest;
                --need;
                break;
            }
        }
    }
    return VertexSet(chosen);
}

namespace {

struct ToughnessSearch {
    const Graph& g;
    int n;
    int alpha;
    bool found = false;
    Rational best_ratio{0};
    int best_size = 0;
    VertexSet best_set;

    void offer(std::uint64_t s_mask, int s_size) {
        const VertexSet keep = VertexSet(g.vertices().bits() & ~s_mask);
        int comps = 0;
        std::uint64_t seen = 0;
        for (std::uint64_t m = keep.bits(); m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if ((seen >> v) & 1) continue;
            seen |= component_of(g, v, keep).bits();
            ++comps;
        }
        if (comps < 2) return;
        const Rational ratio(s_size, comps);
        if (!found || ratio < best_ratio ||
            (ratio == best_ratio &&
             (s_size < best_size ||
              (s_size == best_size && VertexSet::lex_less(VertexSet(s_mask), best_set))))) {
            found = true;
            best_ratio = ratio;
            best_size = s_size;
            best_set = VertexSet(s_mask);
        }
    }

    // Decide membership of vertex v in S. Prune on a lower bound for the
    // final ratio; strictly-greater only, so ratio ties stay reachable
    // for the smaller/lexicographic tie-breaks.
    void recurse(int v, std::uint64_t s_mask, int s_size) {
        if (found && s_size > 0) {
            const int max_comps = std::min(alpha, n - s_size);
            if (max_comps < 2 || Rational(s_size, max_comps) > best_ratio) return;
        }
        if (v == n) {
            offer(s_mask, s_size);
            return;
        }
        recurse(v + 1, s_mask, s_size);
        recurse(v + 1, s_mask | (1ULL << v), s_size + 1);
    }
};

}  // namespace

ToughnessResult toughness(const Graph& g, const SolverCaps& caps) {
    if (g.n() == 0) throw EmptyGraphError("toughness of empty graph");
    if (g.is_complete()) return {std::nullopt, VertexSet()};
    if (g.n() > caps.toughness_n)
        throw CapExceededError("toughness cap " + std::to_string(caps.toughness_n) +
                               " exceeded by n = " + std::to_string(g.n()));
    ToughnessSearch search{g, g.n(), independence_number(g).first};
    search.recurse(0, 0, 0);
    // Non-complete graphs always have a cutset (drop all but a
    // nonadjacent pair), so the search must have found one.
    if (!search.found) throw ValidationError("toughness search found no cutset");
    return {search.best_ratio, search.best_set};
}

TtoughCheck is_t_tough(const Graph& g, const Rational& t, const SolverCaps& caps) {
    const ToughnessResult res = toughness(g, caps);
    if (res.infinite() || *res.value >= t) return {true, VertexSet()};
    return {false, res.witness};
}

std::optional<FreenessWitness> is_p2kp1_free(const Graph& g, int k) {
    if (k < 1) throw InvalidSizeError("is_p2kp1_free needs k >= 1");
    for (auto [u, v] : g.edges()) {
        const VertexSet rest =
            g.vertices() - (g.closed_neighborhood(u) | g.closed_neighborhood(v));
        const auto set = lex_min_independent_k(g, rest, k);
        if (set) return FreenessWitness{u, v, *set};
    }
    return std::nullopt;
}

bool freeness_witness_valid(const Graph& g, int k, const FreenessWitness& w) {
    if (w.u < 0 || w.v < 0 || w.u >= g.n() || w.v >= g.n()) return false;
    if (!g.has_edge(w.u, w.v)) return false;
    if (w.isolated.count() != k) return false;
    if (w.isolated.contains(w.u) || w.isolated.contains(w.v)) return false;
    if (w.isolated.intersects(g.neighbors(w.u)) || w.isolated.intersects(g.neighbors(w.v)))
        return false;
    for (std::uint64_t m = w.isolated.bits(); m; m &= m - 1) {
        const int x = std::countr_zero(m);
        if (g.neighbors(x).intersects(w.isolated)) return false;
    }
    return true;
}

namespace {

bool extend_map(const Graph& g, const Graph& h, std::vector<int>& phi, std::uint64_t used) {
    const int i = static_cast<int>(phi.size());
    if (i == h.n()) return true;
    for (int cand = 0; cand < g.n(); ++cand) {
        if ((used >> cand) & 1) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            if (h.has_edge(j, i) != g.has_edge(phi[static_cast<std::size_t>(j)], cand)) ok = false;
        if (!ok) continue;
        phi.push_back(cand);
        if (extend_map(g, h, phi, used | (1ULL << cand))) return true;
        phi.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return std::nullopt;
    std::vector<int> phi;
    phi.reserve(static_cast<std::size_t>(h.n()));
    if (extend_map(g, h, phi, 0)) return phi;
    return std::nullopt;
}

}  // namespace toughham
