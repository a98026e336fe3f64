#pragma once

#include <optional>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/structure.hpp"

namespace toughham {

enum class Direction { forward, backward };

// Cycle with a fixed clockwise orientation (= increasing index). Stored
// in canonical form: the smallest label comes first and the second
// element is smaller than the last, which fixes rotation and reflection
// so cycles compare by equality.
class OrientedCycle {
public:
    // Validates adjacency in g, distinctness and length >= 3, then
    // canonicalizes. The input order may start anywhere and run in either
    // direction.
    static OrientedCycle from_order(std::vector<int> order, const Graph& g);

    int length() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }
    VertexSet vertex_set() const;
    bool contains(int v) const { return vertex_set().contains(v); }

    int position_of(int v) const;  // throws NotOnCycleError
    int successor(int v) const;    // x+
    int predecessor(int v) const;  // x-

    friend bool operator==(const OrientedCycle& a, const OrientedCycle& b) {
        return a.order_ == b.order_;
    }

private:
    explicit OrientedCycle(std::vector<int> order) : order_(std::move(order)) {}
    std::vector<int> order_;
};

// Path along c from u to v in the given direction, endpoints inclusive;
// segment(u, u, *) is the single vertex u.
std::vector<int> segment(const OrientedCycle& c, int u, int v, Direction dir);

// True iff `order` traces a cycle of g: >= 3 distinct vertices, each
// consecutive pair (and the wrap) adjacent.
bool is_cycle_of(const Graph& g, const std::vector<int>& order);

// Exact backtracking solver with degree and connectivity pruning,
// deterministic branching by label order. Returns the canonical witness.
std::optional<OrientedCycle> hamiltonian_cycle(const Graph& g);

// Independent engine: Held-Karp style reachability over vertex subsets.
// Used to cross-check the backtracking solver.
bool hamiltonian_dp(const Graph& g, const SolverCaps& caps = default_caps());

// Exact maximum-length cycle, absent if g is acyclic. Ties are broken
// lexicographically on the canonical order sequence.
std::optional<OrientedCycle> longest_cycle(const Graph& g,
                                           const SolverCaps& caps = default_caps());

}  // namespace toughham
