#pragma once

#include <optional>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace toughham {

// Solver size limits. Toughness and the exact cycle solvers are
// exponential; the caps keep misuse loud instead of slow. The CLI lets
// TOUGHHAM_CAP_N or --cap-n raise them.
struct SolverCaps {
    int toughness_n = 20;
    int cycle_n = 18;
    int dp_n = 18;
};

inline const SolverCaps& default_caps() {
    static const SolverCaps caps{};
    return caps;
}

// Exact toughness: the minimum of |S| / c(G-S) over cutsets S with
// c(G-S) >= 2, as a reduced rational, or infinite iff G is complete.
struct ToughnessResult {
    std::optional<Rational> value;  // nullopt == infinite (complete graph)
    VertexSet witness;              // meaningful only when finite

    bool infinite() const { return !value.has_value(); }
};

// An induced P2 u kP1: edge uv plus k pairwise nonadjacent vertices with
// no edges to u or v.
struct FreenessWitness {
    int u = -1;
    int v = -1;
    VertexSet isolated;
};

int min_degree(const Graph& g);  // throws EmptyGraphError on n = 0

// Exact vertex connectivity via Menger (unit-capacity max-flow over all
// nonadjacent pairs); complete(n) -> n - 1.
int vertex_connectivity(const Graph& g);

// A minimum vertex cut witnessing vertex_connectivity(g); absent for
// complete graphs. Deterministic (smallest source/sink pair, first cut
// found by the flow order).
std::optional<VertexSet> min_vertex_cut(const Graph& g);

// Exact maximum independent set (size, witness). Branch and bound with a
// greedy clique-cover bound; the witness is the lexicographically
// smallest maximum independent set.
std::pair<int, VertexSet> independence_number(const Graph& g);

// Largest independent subset size within `allowed` only.
int independence_number_within(const Graph& g, VertexSet allowed);

// Lexicographically smallest independent k-subset of `allowed`, if any.
std::optional<VertexSet> lex_min_independent_k(const Graph& g, VertexSet allowed, int k);

ToughnessResult toughness(const Graph& g, const SolverCaps& caps = default_caps());

// True iff toughness(g) >= t; otherwise the minimizing cutset, which
// always satisfies |S| < t * c(G-S).
struct TtoughCheck {
    bool tough = true;
    VertexSet violator;
};
TtoughCheck is_t_tough(const Graph& g, const Rational& t,
                       const SolverCaps& caps = default_caps());

// Specialized (P2 u kP1)-freeness: for each edge uv in lexicographic
// order, test for an independent k-set avoiding N[u] u N[v]. Returns the
// first witness (lex-smallest k-set) or nothing when free.
std::optional<FreenessWitness> is_p2kp1_free(const Graph& g, int k);

// Generic induced-subgraph search, exhaustive backtracking. phi[i] is the
// g-vertex playing h-vertex i. Intended for |V(h)| <= 8; this is the
// oracle that validates the specialized freeness check.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h);

// Re-check a freeness witness against g (used by validators and tests).
bool freeness_witness_valid(const Graph& g, int k, const FreenessWitness& w);

}  // namespace toughham
